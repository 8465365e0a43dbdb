#ifndef WNBUILD_SEMTAG_HPP
#define WNBUILD_SEMTAG_HPP

#include "wnbuild/bilingual.hpp"
#include "wnbuild/text.hpp"
#include "wnbuild/wordnet.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wnbuild {

// One monolingual dictionary sense.
struct Definition {
  std::string headword;
  int sense_no = 1;
  std::string genus;               // supplied in input, may be empty
  std::string text;                // raw definition text
  std::vector<std::string> tokens; // folded tokens of `text`
};

enum class TagMethod { DistanceSeed, Salient };
const char* to_string(TagMethod m);

struct TaggedDefinition {
  Definition def;
  std::string tag;   // semantic primitive
  double score = 0.0;
  TagMethod method = TagMethod::DistanceSeed;
  bool ambiguous = false;
};

// Monolingual TSV: headword<TAB>sense_no<TAB>genus<TAB>definition text
// (genus column may be empty). (headword, sense_no) must be unique.
std::vector<Definition> parse_definitions(std::istream& in, const std::string& source);
std::vector<Definition> load_definitions(const std::string& path);

// Supplied genus wins; otherwise the first non-stopword token of the
// definition text; nullopt when every token is a stopword.
std::optional<std::string> extract_genus(const Definition& d, const Stoplist& stop);

// Seed pass: tag definitions whose headword and genus both have
// translations, using the globally minimal conceptual-distance concept
// pair; the tag is the semantic file of the headword-side synset.
std::vector<TaggedDefinition> tag_seed_by_distance(const std::vector<Definition>& defs,
                                                   const HomogeneousBilingual& bi,
                                                   const WordNetGraph& g, const Stoplist& stop);

// Salient words per semantic class with their association-ratio scores.
// Only strictly positive scores are stored.
struct SalientLexicon {
  std::map<std::pair<std::string, std::string>, double> scores; // (word, tag) -> AR
  // audit counts
  std::map<std::string, long> class_tokens;                      // content tokens per tag
  std::map<std::string, long> word_counts;                       // global content counts
  std::map<std::pair<std::string, std::string>, long> class_word_counts;
  long total_tokens = 0;

  double score(const std::string& word, const std::string& tag) const;
  std::set<std::string> tags() const;

  void save(std::ostream& out) const; // word<TAB>tag<TAB>score
  // counts sidecar is JSON; see pipeline
};

// AR(w, SC) = Pr(w|SC) * log2(Pr(w|SC) / Pr(w)) over content word forms;
// raw relative frequencies, no smoothing.
SalientLexicon train_salient(const std::vector<TaggedDefinition>& corpus, const Stoplist& stop);

// Ranking view over the lexicon: relevance = salience * local frequency,
// so important words are both distinctive and frequent. Descending, ties
// by word; at most `limit` entries (0 = all).
struct RelevantWord {
  std::string word;
  double relevance = 0.0;
};
std::vector<RelevantWord> relevance_ranking(const SalientLexicon& lex, const std::string& tag,
                                            std::size_t limit = 0);

// Relabel: tag = argmax over SC of the summed AR of the definition's
// content tokens. All-zero definitions are left out. Ties mark the
// result ambiguous and resolve by larger class token mass, then
// lexicographic tag order.
std::vector<TaggedDefinition> label_definitions(const std::vector<Definition>& defs,
                                                const SalientLexicon& lex, const Stoplist& stop);

struct CoreThresholds {
  long genus_min = 5;
  long defcorpus_min = 50;
  long extcorpus_min = 100;
};

// Core-concept frequency filter: keep a word iff it clears the genus
// threshold, or clears both corpus thresholds.
std::set<std::string> select_core_concepts(const std::set<std::string>& words,
                                           const std::map<std::string, long>& genus_freq,
                                           const std::map<std::string, long>& defcorpus_freq,
                                           const std::map<std::string, long>& extcorpus_freq,
                                           const CoreThresholds& t = {});

// word<TAB>count
std::map<std::string, long> load_frequency_table(const std::string& path);

} // namespace wnbuild

#endif

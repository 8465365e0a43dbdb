#ifndef WNBUILD_LINKER_HPP
#define WNBUILD_LINKER_HPP

#include "wnbuild/bilingual.hpp"
#include "wnbuild/wordnet.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wnbuild {

enum class ClassDim { Polysemy, Structural, Conceptual };

// Fixed registry of behaviour classes; the extension point for richer
// class schemes.
enum class LinkClass {
  MonoMono,    // 1 translation, 1 synset
  MonoPoly,    // 1 translation, >1 synsets
  MultiMono,   // >1 translations, all indexed ones monosemous
  MultiPoly,   // everything else
  SharedSynset,
  HyponymyPair,
  SiblingPair,
  LowDistance,
};

inline constexpr LinkClass kAllClasses[] = {
    LinkClass::MonoMono,     LinkClass::MonoPoly,    LinkClass::MultiMono,
    LinkClass::MultiPoly,    LinkClass::SharedSynset, LinkClass::HyponymyPair,
    LinkClass::SiblingPair,  LinkClass::LowDistance,
};
inline constexpr std::size_t kClassCount = 8;

ClassDim dimension_of(LinkClass c);
const char* to_string(LinkClass c);
const char* to_string(ClassDim d);
LinkClass link_class_from_string(const std::string& name); // throws config_error

struct ClassPrecision {
  LinkClass cls = LinkClass::MonoMono;
  double precision = 0.0; // in [0,1]
  long sample_size = 0;
};

class PrecisionTable {
public:
  void set(LinkClass c, double precision, long sample_size = 0);
  double precision(LinkClass c) const; // throws config_error when unregistered
  bool has(LinkClass c) const;
  const std::map<LinkClass, ClassPrecision>& rows() const { return rows_; }

  // TSV: dimension<TAB>class_name<TAB>precision<TAB>sample_size
  static PrecisionTable load_file(const std::string& path);

private:
  std::map<LinkClass, ClassPrecision> rows_;
};

struct LinkCandidate {
  std::string word;
  SynsetId synset;
  std::set<LinkClass> supporting; // non-empty
  double confidence = 0.0;
  bool accepted = false;
};

enum class Combiner { NoisyOr, VoteCount };
Combiner combiner_from_string(const std::string& name); // throws config_error

// --- classification -------------------------------------------------------

// Exactly one polysemy class per word; throws input_error when the word
// has no translations at all.
LinkClass classify_polysemy(std::string_view word, const HomogeneousBilingual& bi,
                            const WordNetGraph& g);

// Subset of {SharedSynset, HyponymyPair, SiblingPair}; empty when the
// word has fewer than two indexed translations.
std::set<LinkClass> classify_structural(std::string_view word, const HomogeneousBilingual& bi,
                                        const WordNetGraph& g);

// LowDistance iff the minimum pairwise conceptual distance among the
// word's translations is strictly below the threshold.
std::optional<LinkClass> classify_conceptual(std::string_view word, const HomogeneousBilingual& bi,
                                             const WordNetGraph& g, double threshold);

// --- candidates -----------------------------------------------------------

std::vector<LinkCandidate> generate_candidates(std::string_view word, LinkClass cls,
                                               const HomogeneousBilingual& bi,
                                               const WordNetGraph& g,
                                               double distance_threshold = 1.0);

// Candidates present (by word+synset) in both sets, class support unioned.
std::vector<LinkCandidate> intersect_classes(const std::vector<LinkCandidate>& a,
                                             const std::vector<LinkCandidate>& b);

double score_candidate(const LinkCandidate& c, const PrecisionTable& precisions, Combiner combiner);

// Deduplicates by (word, synset) unioning class support, scores with the
// combiner and keeps candidates at or above the threshold. Output sorted
// by (word, synset); invariant under input permutation.
std::vector<LinkCandidate> accept_links(const std::vector<LinkCandidate>& candidates,
                                        const PrecisionTable& precisions, double threshold = 0.85,
                                        Combiner combiner = Combiner::NoisyOr);

} // namespace wnbuild

#endif

#ifndef WNBUILD_TAXONOMY_HPP
#define WNBUILD_TAXONOMY_HPP

#include "wnbuild/bilingual.hpp"
#include "wnbuild/semtag.hpp"
#include "wnbuild/wordnet.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace wnbuild {

struct SenseKey {
  std::string headword;
  int sense_no = 1;

  bool operator<(const SenseKey& o) const {
    return std::tie(headword, sense_no) < std::tie(o.headword, o.sense_no);
  }
  bool operator==(const SenseKey& o) const {
    return headword == o.headword && sense_no == o.sense_no;
  }
  bool operator!=(const SenseKey& o) const { return !(*this == o); }
  std::string str() const { return headword + "#" + std::to_string(sense_no); }
};

// Genus counts for one semantic primitive.
struct GenusTable {
  std::string tag;
  std::map<std::string, long> counts; // genus word -> tagged-definition count
};

// genus word -> tag -> count, across all primitives
using GlobalGenusCounts = std::map<std::string, std::map<std::string, long>>;

GenusTable collect_genus(const std::vector<TaggedDefinition>& defs, const std::string& tag);
GlobalGenusCounts collect_genus_all(const std::vector<TaggedDefinition>& defs);

// F1: keep genus terms with at least one translation in a synset of this
// semantic file.
GenusTable filter_f1(const GenusTable& t, const HomogeneousBilingual& bi, const WordNetGraph& g);

// F2: keep genus terms strictly more frequent under this tag than under
// any other; ties removed.
GenusTable filter_f2(const GenusTable& t, const GlobalGenusCounts& global);

// F3: keep genus terms with count > n.
GenusTable filter_f3(const GenusTable& t, long n);

// Parsed composition like "F1+F2+(F3>9)"; empty spec = no filtering.
struct FilterStep {
  enum Kind { F1, F2, F3 } kind = F1;
  long threshold = 0; // F3 only
};
struct FilterSpec {
  std::vector<FilterStep> steps;
  std::string text;
};
FilterSpec parse_filter_spec(const std::string& spec); // throws config_error

std::set<std::string> select_top_beginners(const std::vector<TaggedDefinition>& defs,
                                           const std::string& tag, const FilterSpec& spec,
                                           const HomogeneousBilingual& bi, const WordNetGraph& g);

// --- genus sense disambiguation --------------------------------------------

enum class GenusHeuristic { Monosemous, Distance, FirstSense };
GenusHeuristic heuristic_from_string(const std::string& name); // throws config_error
const char* to_string(GenusHeuristic h);
std::vector<GenusHeuristic> default_heuristic_chain();

// Sense lookup over the monolingual dictionary.
class SenseIndex {
public:
  explicit SenseIndex(const std::vector<Definition>& defs);
  const std::vector<const Definition*>& senses(std::string_view headword) const;
  bool has(std::string_view headword) const;

private:
  std::map<std::string, std::vector<const Definition*>> by_word_;
};

struct GenusResolution {
  std::optional<SenseKey> sense; // nullopt = unresolved
  std::optional<GenusHeuristic> decided_by;
};

// First decisive heuristic in the chain wins; a genus word absent from
// the dictionary stays unresolved and the definition attaches to the
// primitive root downstream.
GenusResolution disambiguate_genus(const Definition& d, const std::string& genus_word,
                                   const SenseIndex& dict, const WordNetGraph& g,
                                   const HomogeneousBilingual& bi,
                                   const std::vector<GenusHeuristic>& chain, const Stoplist& stop);

// --- taxonomy assembly ------------------------------------------------------

// One labeled definition with its genus resolution.
struct TaxonomyInput {
  SenseKey key;
  std::string tag;
  std::string genus_word;              // empty when the definition has no genus
  std::optional<SenseKey> genus_sense; // nullopt = unresolved
};

struct TopEdge {
  std::string child;
  std::string parent;
  long count = 0;
};

struct TopStructure {
  std::vector<TopEdge> edges;   // kept, acyclic
  std::vector<TopEdge> dropped; // removed to break cycles
  std::set<std::string> roots;  // tops with no surviving parent edge
  std::vector<std::vector<std::string>> cycles; // each reported ring
};

// Word-level ordering among top beginners: an edge child->parent when a
// definition of `child` under this tag has `parent` as genus.
TopStructure structure_tops(const std::set<std::string>& tops,
                            const std::vector<TaxonomyInput>& defs, const std::string& tag);

struct SenseTaxonomy {
  std::string primitive;
  std::set<SenseKey> nodes;
  std::map<SenseKey, SenseKey> parent; // nodes absent from this map attach to the primitive root
  std::set<SenseKey> tops;             // root-attached senses
  long excluded_cross_tag = 0;         // definitions whose genus carries another tag
  long unresolved_attached = 0;        // root attachments caused by unresolved genus
  std::vector<std::vector<SenseKey>> reported_cycles;

  bool is_root_attached(const SenseKey& k) const { return parent.find(k) == parent.end(); }
};

// Assemble the per-primitive forest. Genus edges survive only along
// chains anchored at a top beginner; everything else labeled with the
// primitive attaches to the primitive root, except definitions whose
// genus resolves into a different primitive, which are excluded.
SenseTaxonomy build_taxonomy(const std::string& tag, const std::set<std::string>& tops,
                             const std::vector<TaxonomyInput>& defs);

} // namespace wnbuild

#endif

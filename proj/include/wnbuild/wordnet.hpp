#ifndef WNBUILD_WORDNET_HPP
#define WNBUILD_WORDNET_HPP

#include "wnbuild/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wnbuild {

using SynsetId = std::string;

struct Synset {
  SynsetId id;
  std::string pos;
  std::string semfile;
  std::vector<std::string> lemmas;   // ordered, folded, no duplicates
  std::vector<SynsetId> hypernyms;   // sorted
  std::vector<SynsetId> hyponyms;    // sorted, derived at load
};

enum class StructRel { SharedSynset, DirectHyponym, DirectHypernym, Sibling, None };

const char* to_string(StructRel r);

// Result of a conceptual-distance query. Unreachable (or unindexed)
// word pairs carry no distance; callers treat that as infinity.
struct DistanceResult {
  std::optional<Rat> distance;
  std::pair<SynsetId, SynsetId> chosen_pair; // valid iff distance has a value

  bool reachable() const { return distance.has_value(); }
};

// Immutable hypernymy skeleton. All queries are read-only; the graph can
// be shared across threads once loaded.
class WordNetGraph {
public:
  // TSV: synset_id<TAB>pos<TAB>semfile<TAB>lemma1|lemma2<TAB>hyp1,hyp2
  // (last column empty for roots). Throws input_error on dangling
  // hypernym references or hypernym cycles.
  static WordNetGraph load(std::istream& in, const std::string& source);
  static WordNetGraph load_file(const std::string& path);

  bool contains(const SynsetId& id) const { return synsets_.count(id) > 0; }
  const Synset& synset(const SynsetId& id) const; // throws input_error if unknown

  // Synsets listing this word form, sorted by id; empty when unindexed.
  const std::vector<SynsetId>& synsets_of(std::string_view word) const;

  // Root convention: synsets without hypernyms have depth 1; otherwise
  // 1 + the minimum hypernym depth.
  int depth(const SynsetId& id) const;

  // Minimum node-weighted (1/depth) cost over undirected hyper/hyponym
  // paths, both endpoints included in the sum, minimised over all synset
  // pairs of the two words. Direction changes along the path are allowed.
  DistanceResult conceptual_distance(std::string_view w1, std::string_view w2) const;

  // Same search between two fixed synsets.
  std::optional<Rat> synset_distance(const SynsetId& a, const SynsetId& b) const;

  std::set<StructRel> structural_relation(std::string_view a, std::string_view b) const;

  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }
  const std::map<std::string, std::vector<SynsetId>>& lemma_index() const { return lemma_index_; }
  std::size_t size() const { return synsets_.size(); }

private:
  std::map<SynsetId, Synset> synsets_;
  std::map<std::string, std::vector<SynsetId>> lemma_index_;
  std::map<SynsetId, int> depth_;

  void finish_load(const std::string& source);
};

} // namespace wnbuild

#endif

#ifndef WNBUILD_MERGER_HPP
#define WNBUILD_MERGER_HPP

#include "wnbuild/bilingual.hpp"
#include "wnbuild/taxonomy.hpp"
#include "wnbuild/wordnet.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace wnbuild {

enum class LinkKind { A, B, None };
const char* to_string(LinkKind k);

// Accepted disambiguated connections, keyed (target word, synset).
using LinkSet = std::set<std::pair<std::string, SynsetId>>;

// One taxonomy edge paired with one wordnet hypernym path, with the kind
// of connection found on each side.
struct PatternInstance {
  SenseKey sp_hypo;
  SenseKey sp_hyper;
  SynsetId en_hypo;
  SynsetId en_hyper;
  LinkKind above_kind = LinkKind::None; // sp_hyper <-> en_hyper
  LinkKind below_kind = LinkKind::None; // sp_hypo <-> en_hypo
  int configuration = 0;                // 1..8
};

struct InferredLink {
  std::string word;
  SynsetId synset;
  std::string source_configuration; // "2", "4", "5", or "2+4"
  double confidence = 0.0;
  int iteration = 0;
};

struct EvidenceBoost {
  std::string word;
  SynsetId synset;
  SenseKey sp_node;
  int configuration = 1;
};

// Per-configuration confidences with optional per-semantic-file
// overrides.
class ConfidenceTable {
public:
  void set_default(int configuration, double confidence);
  void set_override(int configuration, const std::string& semfile, double confidence);
  double confidence(int configuration, const std::string& semfile) const; // throws config_error

  // TSV rows: configuration<TAB>confidence[<TAB>semfile]
  static ConfidenceTable load_file(const std::string& path);
  // Published evaluation bands for the three measured classes; every
  // other cell falls back to the band minimum or zero.
  static ConfidenceTable builtin_defaults();

private:
  std::map<int, double> defaults_;
  std::map<std::pair<int, std::string>, double> overrides_;
};

// Total, injective mapping from the 8 valid (above, below) kind pairs;
// throws on the excluded (None, None) pair.
int classify_pattern(LinkKind above, LinkKind below);

// All taxonomy-edge/wordnet-path pairings with at least one connected
// side. A connections shadow B on the same side. max_path bounds the
// hypernym path length in edges (>= 1).
std::vector<PatternInstance> enumerate_patterns(const SenseTaxonomy& tax, const WordNetGraph& g,
                                                const LinkSet& a_links,
                                                const HomogeneousBilingual& b, int max_path);

struct CombinedCandidate {
  std::string word;
  SynsetId synset;
  double confidence = 0.0; // noisy-OR of the class-2 and class-4 cells
};

// Candidates promoted by both a class-2 and a class-4 instance.
std::vector<CombinedCandidate> combine_patterns(const std::vector<PatternInstance>& instances,
                                                const ConfidenceTable& conf,
                                                const WordNetGraph& g);

struct InferenceResult {
  std::vector<InferredLink> new_links;
  std::vector<EvidenceBoost> boosts;
  std::map<int, long> instances_by_configuration;
};

// Class 1 yields evidence boosts; classes 2/4/5 promote their B side(s);
// one-sided classes are counted but produce nothing. Class-2 and class-4
// support for the same candidate combines by noisy-OR.
InferenceResult infer_links(const std::vector<PatternInstance>& instances,
                            const ConfidenceTable& conf, double accept_threshold,
                            const WordNetGraph& g, const LinkSet& existing, int iteration);

struct BootstrapRound {
  int round = 0;
  long added = 0;
  long boosts = 0;
  std::map<std::string, long> added_by_configuration;
  std::map<std::string, long> added_by_semfile;
  std::map<int, long> instances_by_configuration;
};

struct BootstrapResult {
  LinkSet final_links;
  std::vector<InferredLink> inferred;
  std::vector<BootstrapRound> ledger;
};

// Iterate enumerate -> classify -> combine -> infer, promoting accepted
// links into the anchor set, until a round adds nothing or max_iters.
BootstrapResult bootstrap(const SenseTaxonomy& tax, const WordNetGraph& g, LinkSet a_links,
                          const HomogeneousBilingual& b, const ConfidenceTable& conf,
                          double accept_threshold, int max_iters, int max_path);

} // namespace wnbuild

#endif

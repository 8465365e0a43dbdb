#ifndef WNBUILD_PIPELINE_HPP
#define WNBUILD_PIPELINE_HPP

#include "wnbuild/linker.hpp"
#include "wnbuild/merger.hpp"
#include "wnbuild/rational.hpp"
#include "wnbuild/semtag.hpp"
#include "wnbuild/taxonomy.hpp"

#include <map>
#include <string>
#include <vector>

namespace wnbuild {

struct RunConfig {
  // inputs
  std::string wordnet_path;
  std::vector<std::string> bilingual_paths;
  std::string monolingual_path;
  std::string stoplist_path;
  std::string precision_table_path;
  std::string confidence_table_path; // optional; built-in defaults otherwise
  std::string gold_links_path;       // optional
  std::string gold_tags_path;        // optional

  // stage parameters
  double accept_threshold = 0.85;   // class gate
  double distance_threshold = 1.0;  // LOW_DISTANCE cutoff
  double merge_threshold = 0.70;    // configuration confidence gate
  std::string filter_spec = "F1+F2+(F3>1)";
  std::vector<GenusHeuristic> heuristic_chain = default_heuristic_chain();
  Combiner combiner = Combiner::NoisyOr;
  bool exclude_accepted = true; // drop already-accepted classes from pair stats
  int max_path = 1;
  int max_iters = 5;
  std::vector<std::string> taxonomy_tags; // empty = every tag seen in labels

  std::string out_dir;

  // JSON config file; relative paths resolve against the file's directory.
  static RunConfig load_file(const std::string& path);
  // Throws config_error on missing inputs or out-of-range parameters.
  void validate() const;
};

enum class Stage {
  MergeBilinguals,
  Link,
  SeedTag,
  TrainSalient,
  Label,
  TopBeginners,
  BuildTaxonomy,
  Merge,
  Report,
};

Stage stage_from_string(const std::string& name); // throws config_error
const char* to_string(Stage s);

// Runs one stage against the artifacts in cfg.out_dir. Missing stage
// prerequisites raise dependency_error naming the stage to run first.
void run_stage(Stage stage, const RunConfig& cfg);

// All nine stages in pipeline order.
void run_all(const RunConfig& cfg);

// --- evaluation -------------------------------------------------------------

struct EvalResult {
  Rat precision{0, 1};
  Rat coverage{0, 1};
};

// Records are (key, value) pairs; a record is correct when the gold map
// holds the same value under its key. Coverage counts emitted keys that
// fall inside the gold domain. Throws input_error on an empty gold map.
EvalResult evaluate(const std::vector<std::pair<std::string, std::string>>& emitted,
                    const std::map<std::string, std::string>& gold);

// --- artifact round-trips (shared by stages, tests and the report) ----------

struct AcceptedLink {
  std::string word;
  SynsetId synset;
  double confidence = 0.0;
  std::vector<std::string> classes;
};

std::vector<AcceptedLink> read_links_tsv(const std::string& path);
std::vector<TaggedDefinition> read_tagged_tsv(const std::string& path);

struct TaxonomyRow {
  std::string tag;
  SenseKey node;
  std::optional<SenseKey> parent; // nullopt = primitive root
};
std::vector<TaxonomyRow> read_taxonomy_tsv(const std::string& path);

std::map<std::string, std::string> read_gold_links(const std::string& path);
std::map<std::string, std::string> read_gold_tags(const std::string& path);

// artifact file names inside out_dir
namespace artifact {
inline constexpr const char* kHomogeneous = "homogeneous.tsv";
inline constexpr const char* kLinks = "links.tsv";
inline constexpr const char* kLinkReport = "link_report.json";
inline constexpr const char* kSeedTagged = "seed_tagged.tsv";
inline constexpr const char* kSalient = "salient.tsv";
inline constexpr const char* kSalientMeta = "salient_meta.json";
inline constexpr const char* kLabeled = "labeled.tsv";
inline constexpr const char* kTops = "tops.tsv";
inline constexpr const char* kTaxonomy = "taxonomy.tsv";
inline constexpr const char* kTaxonomyReport = "taxonomy_report.json";
inline constexpr const char* kInferred = "inferred.tsv";
inline constexpr const char* kLinksFinal = "links_final.tsv";
inline constexpr const char* kMergeLedger = "merge_ledger.json";
inline constexpr const char* kReportJson = "report.json";
inline constexpr const char* kReportText = "report.txt";
} // namespace artifact

} // namespace wnbuild

#endif

// Pipeline driver: one subcommand per stage plus run-all and the bundled
// demo fixture. Exit codes: 0 ok, 1 input/parse error, 2 missing stage
// artifact, 3 bad configuration.

#include "wnbuild/errors.hpp"
#include "wnbuild/fixture.hpp"
#include "wnbuild/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace wnbuild;

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  std::string wordnet;
  std::vector<std::string> bilinguals;
  std::string monolingual;
  std::string stoplist;
  std::string precisions;
  std::string confidences;
  std::string gold_links;
  std::string gold_tags;
  double accept_threshold = -1;
  double distance_threshold = -1;
  double merge_threshold = -1;
  std::string filter_spec;
  std::string heuristics;
  std::string combiner;
  int max_path = -1;
  int max_iters = -1;
  std::vector<std::string> tags;
  bool exclude_accepted = false;
  bool no_exclude_accepted = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON run configuration");
  cmd->add_option("--out", opt.out_dir, "output directory for stage artifacts");
  cmd->add_option("--wordnet", opt.wordnet, "wordnet TSV skeleton");
  cmd->add_option("--bilingual", opt.bilinguals, "bilingual TSV dump (repeatable)");
  cmd->add_option("--monolingual", opt.monolingual, "monolingual dictionary TSV");
  cmd->add_option("--stoplist", opt.stoplist, "stoplist file");
  cmd->add_option("--precisions", opt.precisions, "class precision table TSV");
  cmd->add_option("--confidences", opt.confidences, "merge confidence table TSV");
  cmd->add_option("--gold-links", opt.gold_links, "gold links TSV for evaluation");
  cmd->add_option("--gold-tags", opt.gold_tags, "gold tags TSV for evaluation");
  cmd->add_option("--accept-threshold", opt.accept_threshold, "class acceptance gate");
  cmd->add_option("--distance-threshold", opt.distance_threshold, "LOW_DISTANCE cutoff");
  cmd->add_option("--merge-threshold", opt.merge_threshold, "merge confidence gate");
  cmd->add_option("--filters", opt.filter_spec, "top-beginner filter spec, e.g. F2+(F3>4)");
  cmd->add_option("--heuristics", opt.heuristics,
                  "comma-separated genus heuristic chain");
  cmd->add_option("--combiner", opt.combiner, "noisy_or or vote_count");
  cmd->add_option("--max-path", opt.max_path, "max wordnet hypernym path length");
  cmd->add_option("--max-iters", opt.max_iters, "bootstrap round limit");
  cmd->add_option("--tag", opt.tags, "restrict taxonomy stages to these tags (repeatable)");
  cmd->add_flag("--exclude-accepted", opt.exclude_accepted,
                "drop already-accepted classes from intersection stats (default)");
  cmd->add_flag("--no-exclude-accepted", opt.no_exclude_accepted,
                "keep accepted classes in intersection stats");
}

RunConfig build_config(const CliOptions& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) cfg = RunConfig::load_file(opt.config_path);
  // flags override config keys
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (!opt.wordnet.empty()) cfg.wordnet_path = opt.wordnet;
  if (!opt.bilinguals.empty()) cfg.bilingual_paths = opt.bilinguals;
  if (!opt.monolingual.empty()) cfg.monolingual_path = opt.monolingual;
  if (!opt.stoplist.empty()) cfg.stoplist_path = opt.stoplist;
  if (!opt.precisions.empty()) cfg.precision_table_path = opt.precisions;
  if (!opt.confidences.empty()) cfg.confidence_table_path = opt.confidences;
  if (!opt.gold_links.empty()) cfg.gold_links_path = opt.gold_links;
  if (!opt.gold_tags.empty()) cfg.gold_tags_path = opt.gold_tags;
  if (opt.accept_threshold >= 0) cfg.accept_threshold = opt.accept_threshold;
  if (opt.distance_threshold >= 0) cfg.distance_threshold = opt.distance_threshold;
  if (opt.merge_threshold >= 0) cfg.merge_threshold = opt.merge_threshold;
  if (!opt.filter_spec.empty()) cfg.filter_spec = opt.filter_spec;
  if (!opt.heuristics.empty()) {
    cfg.heuristic_chain.clear();
    for (const std::string& h : split(opt.heuristics, ','))
      cfg.heuristic_chain.push_back(heuristic_from_string(h));
  }
  if (!opt.combiner.empty()) cfg.combiner = combiner_from_string(opt.combiner);
  if (opt.max_path >= 0) cfg.max_path = opt.max_path;
  if (opt.max_iters >= 0) cfg.max_iters = opt.max_iters;
  if (!opt.tags.empty()) cfg.taxonomy_tags = opt.tags;
  if (opt.exclude_accepted) cfg.exclude_accepted = true;
  if (opt.no_exclude_accepted) cfg.exclude_accepted = false;
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"wnbuild: build a target-language wordnet from a wordnet skeleton,\n"
               "bilingual dumps and a monolingual dictionary"};
  app.require_subcommand(0, 1);

  std::string fixture_dir;
  app.add_option("--seed-fixture", fixture_dir,
                 "write the bundled demo dataset into this directory and exit");

  CliOptions opt;
  const std::vector<std::string> stage_names = {
      "merge-bilinguals", "link",           "seed-tag", "train-salient", "label",
      "top-beginners",    "build-taxonomy", "merge",    "report"};
  std::vector<CLI::App*> cmds;
  for (const std::string& name : stage_names) {
    CLI::App* cmd = app.add_subcommand(name, std::string("run the ") + name + " stage");
    add_common_options(cmd, opt);
    cmds.push_back(cmd);
  }
  CLI::App* run_all_cmd = app.add_subcommand("run-all", "run every stage in pipeline order");
  add_common_options(run_all_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!fixture_dir.empty()) {
      std::string config = materialize_fixture(fixture_dir);
      std::cout << "fixture written; config at " << config << "\n";
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return 0;
    }
    RunConfig cfg = build_config(opt);
    CLI::App* chosen = app.get_subcommands().front();
    if (chosen == run_all_cmd) {
      run_all(cfg);
      std::cout << "pipeline complete; artifacts in " << cfg.out_dir << "\n";
    } else {
      Stage stage = stage_from_string(chosen->get_name());
      run_stage(stage, cfg);
      std::cout << "stage " << chosen->get_name() << " complete\n";
    }
    return 0;
  } catch (const dependency_error& e) {
    std::cerr << "dependency error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "wnbuild/pipeline.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/tsv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

namespace fs = std::filesystem;
using nlohmann::json;

namespace wnbuild {

namespace {

std::string fmt_double(double v, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string fmt_roundtrip(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string path_in(const RunConfig& cfg, const char* name) {
  return (fs::path(cfg.out_dir) / name).string();
}

void require_artifact(const RunConfig& cfg, const char* name, const char* producing_stage) {
  if (!fs::exists(path_in(cfg, name)))
    throw dependency_error(std::string("missing artifact '") + name + "'; run stage '" +
                           producing_stage + "' first");
}

std::ofstream open_out(const std::string& path) {
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary); // '\n' line endings everywhere
  if (!out) throw input_error("cannot write " + path);
  return out;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

} // namespace

// --- config ------------------------------------------------------------------

RunConfig RunConfig::load_file(const std::string& path) {
  json j = read_json(path);
  if (!j.is_object()) throw config_error(path + ": config must be a JSON object");
  fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    if (p.empty()) return p;
    fs::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  RunConfig cfg;
  try {
    if (j.contains("wordnet")) cfg.wordnet_path = resolve(j.at("wordnet").get<std::string>());
    if (j.contains("bilinguals"))
      for (const auto& b : j.at("bilinguals")) cfg.bilingual_paths.push_back(resolve(b.get<std::string>()));
    if (j.contains("monolingual")) cfg.monolingual_path = resolve(j.at("monolingual").get<std::string>());
    if (j.contains("stoplist")) cfg.stoplist_path = resolve(j.at("stoplist").get<std::string>());
    if (j.contains("precisions")) cfg.precision_table_path = resolve(j.at("precisions").get<std::string>());
    if (j.contains("confidences")) cfg.confidence_table_path = resolve(j.at("confidences").get<std::string>());
    if (j.contains("gold_links")) cfg.gold_links_path = resolve(j.at("gold_links").get<std::string>());
    if (j.contains("gold_tags")) cfg.gold_tags_path = resolve(j.at("gold_tags").get<std::string>());
    if (j.contains("accept_threshold")) cfg.accept_threshold = j.at("accept_threshold").get<double>();
    if (j.contains("distance_threshold")) cfg.distance_threshold = j.at("distance_threshold").get<double>();
    if (j.contains("merge_threshold")) cfg.merge_threshold = j.at("merge_threshold").get<double>();
    if (j.contains("filter_spec")) cfg.filter_spec = j.at("filter_spec").get<std::string>();
    if (j.contains("heuristics")) {
      cfg.heuristic_chain.clear();
      for (const auto& h : j.at("heuristics"))
        cfg.heuristic_chain.push_back(heuristic_from_string(h.get<std::string>()));
    }
    if (j.contains("combiner")) cfg.combiner = combiner_from_string(j.at("combiner").get<std::string>());
    if (j.contains("exclude_accepted")) cfg.exclude_accepted = j.at("exclude_accepted").get<bool>();
    if (j.contains("max_path")) cfg.max_path = j.at("max_path").get<int>();
    if (j.contains("max_iters")) cfg.max_iters = j.at("max_iters").get<int>();
    if (j.contains("tags"))
      for (const auto& t : j.at("tags")) cfg.taxonomy_tags.push_back(fold_word(t.get<std::string>()));
    if (j.contains("out_dir")) cfg.out_dir = resolve(j.at("out_dir").get<std::string>());
  } catch (const json::exception& e) {
    throw config_error(path + ": " + e.what());
  }
  return cfg;
}

void RunConfig::validate() const {
  auto must_exist = [](const std::string& p, const char* what) {
    if (!p.empty() && !fs::exists(p))
      throw config_error(std::string(what) + " file does not exist: " + p);
  };
  must_exist(wordnet_path, "wordnet");
  for (const std::string& b : bilingual_paths) must_exist(b, "bilingual");
  must_exist(monolingual_path, "monolingual");
  must_exist(stoplist_path, "stoplist");
  must_exist(precision_table_path, "precision table");
  must_exist(confidence_table_path, "confidence table");
  must_exist(gold_links_path, "gold links");
  must_exist(gold_tags_path, "gold tags");
  auto in_unit = [](double v, const char* what) {
    if (v < 0.0 || v > 1.0) throw config_error(std::string(what) + " must be in [0,1]");
  };
  in_unit(accept_threshold, "accept_threshold");
  in_unit(merge_threshold, "merge_threshold");
  if (distance_threshold < 0.0) throw config_error("distance_threshold must be >= 0");
  if (max_path < 1) throw config_error("max_path must be >= 1");
  if (max_iters < 1) throw config_error("max_iters must be >= 1");
  if (heuristic_chain.empty()) throw config_error("heuristic chain must not be empty");
  if (out_dir.empty()) throw config_error("out_dir is required");
  parse_filter_spec(filter_spec);
}

Stage stage_from_string(const std::string& name) {
  std::string n = fold_word(name);
  if (n == "merge-bilinguals") return Stage::MergeBilinguals;
  if (n == "link") return Stage::Link;
  if (n == "seed-tag") return Stage::SeedTag;
  if (n == "train-salient") return Stage::TrainSalient;
  if (n == "label") return Stage::Label;
  if (n == "top-beginners") return Stage::TopBeginners;
  if (n == "build-taxonomy") return Stage::BuildTaxonomy;
  if (n == "merge") return Stage::Merge;
  if (n == "report") return Stage::Report;
  throw config_error("unknown stage '" + name + "'");
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::MergeBilinguals: return "merge-bilinguals";
    case Stage::Link: return "link";
    case Stage::SeedTag: return "seed-tag";
    case Stage::TrainSalient: return "train-salient";
    case Stage::Label: return "label";
    case Stage::TopBeginners: return "top-beginners";
    case Stage::BuildTaxonomy: return "build-taxonomy";
    case Stage::Merge: return "merge";
    case Stage::Report: return "report";
  }
  return "?";
}

// --- shared artifact IO -------------------------------------------------------

namespace {

void write_tagged_tsv(const std::string& path, const std::vector<TaggedDefinition>& defs) {
  std::ofstream out = open_out(path);
  for (const TaggedDefinition& t : defs) {
    out << t.def.headword << '\t' << t.def.sense_no << '\t' << t.def.genus << '\t' << t.def.text
        << '\t' << t.tag << '\t' << fmt_double(t.score) << '\t' << to_string(t.method) << '\t'
        << (t.ambiguous ? 1 : 0) << '\n';
  }
}

} // namespace

std::vector<TaggedDefinition> read_tagged_tsv(const std::string& path) {
  std::vector<TaggedDefinition> out;
  for_each_tsv_file(path, 8, [&](const TsvRecord& rec) {
    TaggedDefinition t;
    t.def.headword = fold_word(rec.at(0));
    try {
      t.def.sense_no = std::stoi(rec.at(1));
      t.score = std::stod(rec.at(5));
      t.ambiguous = std::stoi(rec.at(7)) != 0;
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad number");
    }
    t.def.genus = fold_word(rec.at(2));
    t.def.text = rec.at(3);
    t.def.tokens = tokenize(t.def.text);
    t.tag = fold_word(rec.at(4));
    std::string method = rec.at(6);
    if (method == "DISTANCE_SEED")
      t.method = TagMethod::DistanceSeed;
    else if (method == "SALIENT")
      t.method = TagMethod::Salient;
    else
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad method '" +
                        method + "'");
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<AcceptedLink> read_links_tsv(const std::string& path) {
  std::vector<AcceptedLink> out;
  for_each_tsv_file(path, 4, [&](const TsvRecord& rec) {
    AcceptedLink l;
    l.word = fold_word(rec.at(0));
    l.synset = trim(rec.at(1));
    try {
      l.confidence = std::stod(rec.at(2));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad confidence");
    }
    l.classes = split(rec.at(3), ',');
    out.push_back(std::move(l));
  });
  return out;
}

std::vector<TaxonomyRow> read_taxonomy_tsv(const std::string& path) {
  std::vector<TaxonomyRow> out;
  for_each_tsv_file(path, 5, [&](const TsvRecord& rec) {
    TaxonomyRow r;
    r.tag = fold_word(rec.at(0));
    r.node.headword = fold_word(rec.at(1));
    try {
      r.node.sense_no = std::stoi(rec.at(2));
      if (trim(rec.at(3)) != "-") {
        SenseKey p;
        p.headword = fold_word(rec.at(3));
        p.sense_no = std::stoi(rec.at(4));
        r.parent = p;
      }
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad sense number");
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::map<std::string, std::string> read_gold_links(const std::string& path) {
  std::map<std::string, std::string> gold;
  for_each_tsv_file(path, 2, [&](const TsvRecord& rec) {
    gold[fold_word(rec.at(0)) + "\t" + trim(rec.at(1))] = "";
  });
  return gold;
}

std::map<std::string, std::string> read_gold_tags(const std::string& path) {
  std::map<std::string, std::string> gold;
  for_each_tsv_file(path, 3, [&](const TsvRecord& rec) {
    gold[fold_word(rec.at(0)) + "\t" + trim(rec.at(1))] = fold_word(rec.at(2));
  });
  return gold;
}

// --- evaluation ---------------------------------------------------------------

EvalResult evaluate(const std::vector<std::pair<std::string, std::string>>& emitted,
                    const std::map<std::string, std::string>& gold) {
  if (gold.empty()) throw input_error("gold file is empty");
  long correct = 0;
  long in_domain = 0;
  for (const auto& [key, value] : emitted) {
    auto it = gold.find(key);
    if (it == gold.end()) continue;
    ++in_domain;
    if (it->second == value) ++correct;
  }
  EvalResult r;
  if (!emitted.empty()) r.precision = Rat(correct, static_cast<long long>(emitted.size()));
  r.coverage = Rat(in_domain, static_cast<long long>(gold.size()));
  return r;
}

// --- stages ---------------------------------------------------------------------

namespace {

void stage_merge_bilinguals(const RunConfig& cfg) {
  if (cfg.bilingual_paths.empty())
    throw config_error("no bilingual dictionaries configured");
  std::vector<HomogeneousBilingual> maps;
  for (const std::string& path : cfg.bilingual_paths) {
    std::string id = fs::path(path).stem().string();
    maps.push_back(HomogeneousBilingual::merge_directions(
        HomogeneousBilingual::parse_file(path, id)));
  }
  HomogeneousBilingual merged = HomogeneousBilingual::merge(maps);
  std::ofstream out = open_out(path_in(cfg, artifact::kHomogeneous));
  merged.save(out);
}

void stage_link(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kHomogeneous, "merge-bilinguals");
  if (cfg.wordnet_path.empty()) throw config_error("wordnet input is required for 'link'");
  if (cfg.precision_table_path.empty())
    throw config_error("precision table is required for 'link'");
  WordNetGraph g = WordNetGraph::load_file(cfg.wordnet_path);
  HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
  PrecisionTable precisions = PrecisionTable::load_file(cfg.precision_table_path);

  std::map<LinkClass, std::vector<LinkCandidate>> per_class;
  std::map<LinkClass, long> words_per_class;
  std::vector<LinkCandidate> all;
  for (const auto& [word, translations] : bi.entries()) {
    std::set<LinkClass> classes;
    classes.insert(classify_polysemy(word, bi, g));
    for (LinkClass c : classify_structural(word, bi, g)) classes.insert(c);
    if (auto c = classify_conceptual(word, bi, g, cfg.distance_threshold)) classes.insert(*c);
    for (LinkClass c : classes) {
      words_per_class[c] += 1;
      for (LinkCandidate& cand : generate_candidates(word, c, bi, g, cfg.distance_threshold)) {
        per_class[c].push_back(cand);
        all.push_back(std::move(cand));
      }
    }
  }
  std::vector<LinkCandidate> accepted =
      accept_links(all, precisions, cfg.accept_threshold, cfg.combiner);

  std::ofstream out = open_out(path_in(cfg, artifact::kLinks));
  for (const LinkCandidate& c : accepted) {
    std::vector<std::string> names;
    for (LinkClass cls : c.supporting) names.push_back(to_string(cls));
    out << c.word << '\t' << c.synset << '\t' << fmt_double(c.confidence) << '\t'
        << join(names, ',') << '\n';
  }

  // class pair intersection report; already-accepted classes are dropped
  // from the pairing when exclude_accepted is on
  json pairs = json::object();
  for (std::size_t i = 0; i < kClassCount; ++i) {
    for (std::size_t j = i + 1; j < kClassCount; ++j) {
      LinkClass a = kAllClasses[i], b = kAllClasses[j];
      if (cfg.exclude_accepted && (!precisions.has(a) || precisions.precision(a) >= cfg.accept_threshold ||
                                   !precisions.has(b) || precisions.precision(b) >= cfg.accept_threshold))
        continue;
      auto ia = per_class.find(a);
      auto ib = per_class.find(b);
      std::size_t n = 0;
      if (ia != per_class.end() && ib != per_class.end())
        n = intersect_classes(ia->second, ib->second).size();
      if (n > 0) pairs[std::string(to_string(a)) + "&" + to_string(b)] = n;
    }
  }
  json report;
  report["words"] = bi.entries().size();
  report["accepted"] = accepted.size();
  json by_class = json::object();
  for (const auto& [cls, cands] : per_class) {
    by_class[to_string(cls)] = {{"words", words_per_class[cls]}, {"candidates", cands.size()}};
  }
  report["classes"] = by_class;
  report["intersections"] = pairs;
  write_json(path_in(cfg, artifact::kLinkReport), report);
}

void stage_seed_tag(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kHomogeneous, "merge-bilinguals");
  if (cfg.wordnet_path.empty() || cfg.monolingual_path.empty() || cfg.stoplist_path.empty())
    throw config_error("'seed-tag' needs wordnet, monolingual and stoplist inputs");
  WordNetGraph g = WordNetGraph::load_file(cfg.wordnet_path);
  HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
  std::vector<Definition> defs = load_definitions(cfg.monolingual_path);
  Stoplist stop = Stoplist::load_file(cfg.stoplist_path);
  write_tagged_tsv(path_in(cfg, artifact::kSeedTagged), tag_seed_by_distance(defs, bi, g, stop));
}

void stage_train_salient(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kSeedTagged, "seed-tag");
  if (cfg.stoplist_path.empty()) throw config_error("'train-salient' needs a stoplist");
  std::vector<TaggedDefinition> corpus = read_tagged_tsv(path_in(cfg, artifact::kSeedTagged));
  Stoplist stop = Stoplist::load_file(cfg.stoplist_path);
  SalientLexicon lex = train_salient(corpus, stop);

  std::ofstream out = open_out(path_in(cfg, artifact::kSalient));
  for (const auto& [key, ar] : lex.scores)
    out << key.first << '\t' << key.second << '\t' << fmt_roundtrip(ar) << '\n';

  json meta;
  meta["total_tokens"] = lex.total_tokens;
  json classes = json::object();
  for (const auto& [tag, n] : lex.class_tokens) classes[tag] = n;
  meta["class_tokens"] = classes;
  json words = json::object();
  for (const auto& [w, n] : lex.word_counts) words[w] = n;
  meta["word_counts"] = words;
  json relevant = json::object();
  for (const auto& [tag, n] : lex.class_tokens) {
    json ranked = json::array();
    for (const RelevantWord& r : relevance_ranking(lex, tag, 5))
      ranked.push_back({{"word", r.word}, {"relevance", fmt_double(r.relevance)}});
    relevant[tag] = ranked;
  }
  meta["top_relevant"] = relevant;
  write_json(path_in(cfg, artifact::kSalientMeta), meta);
}

SalientLexicon load_salient(const RunConfig& cfg) {
  SalientLexicon lex;
  for_each_tsv_file(path_in(cfg, artifact::kSalient), 3, [&](const TsvRecord& rec) {
    try {
      lex.scores[{fold_word(rec.at(0)), fold_word(rec.at(1))}] = std::stod(rec.at(2));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad score");
    }
  });
  json meta = read_json(path_in(cfg, artifact::kSalientMeta));
  lex.total_tokens = meta.at("total_tokens").get<long>();
  for (const auto& [tag, n] : meta.at("class_tokens").items())
    lex.class_tokens[tag] = n.get<long>();
  if (meta.contains("word_counts"))
    for (const auto& [w, n] : meta.at("word_counts").items()) lex.word_counts[w] = n.get<long>();
  return lex;
}

void stage_label(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kSalient, "train-salient");
  require_artifact(cfg, artifact::kSalientMeta, "train-salient");
  if (cfg.monolingual_path.empty() || cfg.stoplist_path.empty())
    throw config_error("'label' needs monolingual and stoplist inputs");
  std::vector<Definition> defs = load_definitions(cfg.monolingual_path);
  Stoplist stop = Stoplist::load_file(cfg.stoplist_path);
  SalientLexicon lex = load_salient(cfg);
  write_tagged_tsv(path_in(cfg, artifact::kLabeled), label_definitions(defs, lex, stop));
}

std::vector<std::string> tags_in(const std::vector<TaggedDefinition>& defs,
                                 const RunConfig& cfg) {
  if (!cfg.taxonomy_tags.empty()) return cfg.taxonomy_tags;
  std::set<std::string> tags;
  for (const TaggedDefinition& d : defs) tags.insert(d.tag);
  return {tags.begin(), tags.end()};
}

void stage_top_beginners(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kLabeled, "label");
  require_artifact(cfg, artifact::kHomogeneous, "merge-bilinguals");
  if (cfg.wordnet_path.empty()) throw config_error("'top-beginners' needs the wordnet input");
  WordNetGraph g = WordNetGraph::load_file(cfg.wordnet_path);
  HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
  std::vector<TaggedDefinition> labeled = read_tagged_tsv(path_in(cfg, artifact::kLabeled));
  FilterSpec spec = parse_filter_spec(cfg.filter_spec);

  std::ofstream out = open_out(path_in(cfg, artifact::kTops));
  for (const std::string& tag : tags_in(labeled, cfg)) {
    for (const std::string& genus : select_top_beginners(labeled, tag, spec, bi, g))
      out << tag << '\t' << genus << '\n';
  }
}

void stage_build_taxonomy(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kLabeled, "label");
  require_artifact(cfg, artifact::kTops, "top-beginners");
  require_artifact(cfg, artifact::kHomogeneous, "merge-bilinguals");
  if (cfg.wordnet_path.empty() || cfg.monolingual_path.empty() || cfg.stoplist_path.empty())
    throw config_error("'build-taxonomy' needs wordnet, monolingual and stoplist inputs");
  WordNetGraph g = WordNetGraph::load_file(cfg.wordnet_path);
  HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
  std::vector<Definition> dict = load_definitions(cfg.monolingual_path);
  Stoplist stop = Stoplist::load_file(cfg.stoplist_path);
  std::vector<TaggedDefinition> labeled = read_tagged_tsv(path_in(cfg, artifact::kLabeled));
  SenseIndex senses(dict);

  std::map<std::string, std::set<std::string>> tops;
  for_each_tsv_file(path_in(cfg, artifact::kTops), 2, [&](const TsvRecord& rec) {
    tops[fold_word(rec.at(0))].insert(fold_word(rec.at(1)));
  });

  // genus resolution is tag independent: do it once per labeled definition
  std::vector<TaxonomyInput> inputs;
  for (const TaggedDefinition& d : labeled) {
    TaxonomyInput in;
    in.key = SenseKey{d.def.headword, d.def.sense_no};
    in.tag = d.tag;
    in.genus_word = d.def.genus;
    if (!in.genus_word.empty()) {
      GenusResolution r =
          disambiguate_genus(d.def, in.genus_word, senses, g, bi, cfg.heuristic_chain, stop);
      in.genus_sense = r.sense;
    }
    inputs.push_back(std::move(in));
  }

  std::ofstream out = open_out(path_in(cfg, artifact::kTaxonomy));
  json report = json::object();
  for (const std::string& tag : tags_in(labeled, cfg)) {
    std::set<std::string> tag_tops =
        tops.count(tag) ? tops.at(tag) : std::set<std::string>{};
    SenseTaxonomy tax = build_taxonomy(tag, tag_tops, inputs);
    for (const SenseKey& node : tax.nodes) {
      auto p = tax.parent.find(node);
      out << tag << '\t' << node.headword << '\t' << node.sense_no << '\t';
      if (p == tax.parent.end())
        out << "-\t-";
      else
        out << p->second.headword << '\t' << p->second.sense_no;
      out << '\n';
    }
    TopStructure structure = structure_tops(tag_tops, inputs, tag);
    json frag;
    frag["nodes"] = tax.nodes.size();
    frag["tops"] = tax.tops.size();
    frag["excluded_cross_tag"] = tax.excluded_cross_tag;
    frag["unresolved_attached"] = tax.unresolved_attached;
    frag["cycles"] = tax.reported_cycles.size();
    json top_edges = json::array();
    for (const TopEdge& e : structure.edges)
      top_edges.push_back({{"child", e.child}, {"parent", e.parent}, {"count", e.count}});
    frag["top_structure"] = top_edges;
    report[tag] = frag;
  }
  write_json(path_in(cfg, artifact::kTaxonomyReport), report);
}

void stage_merge(const RunConfig& cfg) {
  require_artifact(cfg, artifact::kTaxonomy, "build-taxonomy");
  require_artifact(cfg, artifact::kLinks, "link");
  require_artifact(cfg, artifact::kHomogeneous, "merge-bilinguals");
  if (cfg.wordnet_path.empty()) throw config_error("'merge' needs the wordnet input");
  WordNetGraph g = WordNetGraph::load_file(cfg.wordnet_path);
  HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
  ConfidenceTable conf = cfg.confidence_table_path.empty()
                             ? ConfidenceTable::builtin_defaults()
                             : ConfidenceTable::load_file(cfg.confidence_table_path);

  LinkSet a_links;
  for (const AcceptedLink& l : read_links_tsv(path_in(cfg, artifact::kLinks)))
    a_links.insert({l.word, l.synset});

  // taxonomy edges of every primitive feed one bootstrap run
  SenseTaxonomy combined;
  combined.primitive = "(all)";
  for (const TaxonomyRow& r : read_taxonomy_tsv(path_in(cfg, artifact::kTaxonomy))) {
    combined.nodes.insert(r.node);
    if (r.parent) combined.parent[r.node] = *r.parent;
  }

  BootstrapResult res = bootstrap(combined, g, a_links, bi, conf, cfg.merge_threshold,
                                  cfg.max_iters, cfg.max_path);

  {
    std::ofstream out = open_out(path_in(cfg, artifact::kInferred));
    std::vector<InferredLink> sorted = res.inferred;
    std::sort(sorted.begin(), sorted.end(), [](const InferredLink& a, const InferredLink& b) {
      return std::tie(a.iteration, a.word, a.synset) < std::tie(b.iteration, b.word, b.synset);
    });
    for (const InferredLink& l : sorted)
      out << l.word << '\t' << l.synset << '\t' << fmt_double(l.confidence) << '\t'
          << l.source_configuration << '\t' << l.iteration << '\n';
  }
  {
    std::map<std::pair<std::string, SynsetId>, std::string> source;
    for (const auto& pair : a_links) source[pair] = "link";
    for (const InferredLink& l : res.inferred) source[{l.word, l.synset}] = l.source_configuration;
    std::ofstream out = open_out(path_in(cfg, artifact::kLinksFinal));
    for (const auto& pair : res.final_links)
      out << pair.first << '\t' << pair.second << '\t' << source.at(pair) << '\n';
  }

  json ledger;
  json rounds = json::array();
  for (const BootstrapRound& r : res.ledger) {
    json jr;
    jr["round"] = r.round;
    jr["added"] = r.added;
    jr["boosts"] = r.boosts;
    json by_cfg = json::object();
    for (const auto& [cfg_id, n] : r.added_by_configuration) by_cfg[cfg_id] = n;
    jr["added_by_configuration"] = by_cfg;
    json by_sf = json::object();
    for (const auto& [sf, n] : r.added_by_semfile) by_sf[sf] = n;
    jr["added_by_semfile"] = by_sf;
    json inst = json::object();
    for (const auto& [c, n] : r.instances_by_configuration) inst[std::to_string(c)] = n;
    jr["instances_by_configuration"] = inst;
    rounds.push_back(jr);
  }
  ledger["rounds"] = rounds;
  ledger["final_links"] = res.final_links.size();
  write_json(path_in(cfg, artifact::kMergeLedger), ledger);
}

void stage_report(const RunConfig& cfg) {
  json report;
  std::ostringstream text;
  text << "wnbuild report\n==============\n";

  auto exists = [&](const char* name) { return fs::exists(path_in(cfg, name)); };

  if (exists(artifact::kHomogeneous)) {
    HomogeneousBilingual bi = HomogeneousBilingual::load_file(path_in(cfg, artifact::kHomogeneous));
    report["bilingual"] = {{"words", bi.entries().size()}, {"pairs", bi.pair_count()}};
    text << "bilingual: " << bi.entries().size() << " words, " << bi.pair_count() << " pairs\n";
  }

  std::vector<AcceptedLink> links;
  if (exists(artifact::kLinks)) {
    links = read_links_tsv(path_in(cfg, artifact::kLinks));
    std::set<std::string> words;
    std::set<SynsetId> synsets;
    for (const AcceptedLink& l : links) {
      words.insert(l.word);
      synsets.insert(l.synset);
    }
    report["links"] = {{"connections", links.size()},
                       {"words", words.size()},
                       {"synsets", synsets.size()}};
    text << "accepted links: " << links.size() << " (" << words.size() << " words, "
         << synsets.size() << " synsets)\n";
  }

  if (exists(artifact::kSeedTagged)) {
    auto seeds = read_tagged_tsv(path_in(cfg, artifact::kSeedTagged));
    std::map<std::string, long> per_tag;
    for (const auto& t : seeds) per_tag[t.tag] += 1;
    report["seed_tagged"] = {{"definitions", seeds.size()}, {"tags", per_tag.size()}};
    text << "seed-tagged definitions: " << seeds.size() << "\n";
  }

  std::vector<TaggedDefinition> labeled;
  if (exists(artifact::kLabeled)) {
    labeled = read_tagged_tsv(path_in(cfg, artifact::kLabeled));
    long ambiguous = 0;
    std::map<std::string, long> per_tag;
    for (const auto& t : labeled) {
      per_tag[t.tag] += 1;
      if (t.ambiguous) ++ambiguous;
    }
    json per = json::object();
    for (const auto& [tag, n] : per_tag) per[tag] = n;
    report["labeled"] = {{"definitions", labeled.size()},
                         {"ambiguous", ambiguous},
                         {"per_tag", per}};
    text << "labeled definitions: " << labeled.size() << " (" << ambiguous << " ambiguous)\n";
    if (!cfg.monolingual_path.empty() && fs::exists(cfg.monolingual_path)) {
      std::size_t total = load_definitions(cfg.monolingual_path).size();
      report["labeled"]["corpus_definitions"] = total;
      if (total > 0)
        report["labeled"]["coverage"] =
            Rat(static_cast<long long>(labeled.size()), static_cast<long long>(total))
                .to_decimal(4);
    }
  }

  if (exists(artifact::kTaxonomy)) {
    auto rows = read_taxonomy_tsv(path_in(cfg, artifact::kTaxonomy));
    std::map<std::string, long> nodes, roots;
    for (const TaxonomyRow& r : rows) {
      nodes[r.tag] += 1;
      if (!r.parent) roots[r.tag] += 1;
    }
    json per = json::object();
    for (const auto& [tag, n] : nodes)
      per[tag] = {{"nodes", n}, {"roots", roots.count(tag) ? roots[tag] : 0}};
    report["taxonomy"] = per;
    text << "taxonomy nodes: " << rows.size() << "\n";
  }

  if (exists(artifact::kLinksFinal)) {
    std::set<std::string> words;
    std::set<std::string> synsets;
    long connections = 0;
    long inferred = 0;
    for_each_tsv_file(path_in(cfg, artifact::kLinksFinal), 3, [&](const TsvRecord& rec) {
      words.insert(fold_word(rec.at(0)));
      synsets.insert(trim(rec.at(1)));
      ++connections;
      if (trim(rec.at(2)) != "link") ++inferred;
    });
    report["volumes"] = {{"words", words.size()},
                         {"synsets", synsets.size()},
                         {"connections", connections},
                         {"inferred", inferred}};
    text << "final volumes: " << words.size() << " words, " << synsets.size() << " synsets, "
         << connections << " connections (" << inferred << " inferred)\n";
  }

  if (exists(artifact::kMergeLedger)) {
    json ledger = read_json(path_in(cfg, artifact::kMergeLedger));
    report["merge_rounds"] = ledger.at("rounds").size();
  }

  json eval = json::object();
  if (!cfg.gold_links_path.empty()) {
    if (!exists(artifact::kLinksFinal) && !exists(artifact::kLinks))
      throw dependency_error("gold links supplied but no link artifacts present; run 'link'");
    std::vector<std::pair<std::string, std::string>> emitted;
    if (exists(artifact::kLinksFinal)) {
      for_each_tsv_file(path_in(cfg, artifact::kLinksFinal), 2, [&](const TsvRecord& rec) {
        emitted.push_back({fold_word(rec.at(0)) + "\t" + trim(rec.at(1)), ""});
      });
    } else {
      for (const AcceptedLink& l : links) emitted.push_back({l.word + "\t" + l.synset, ""});
    }
    EvalResult r = evaluate(emitted, read_gold_links(cfg.gold_links_path));
    eval["links"] = {{"precision", r.precision.to_decimal(4)},
                     {"coverage", r.coverage.to_decimal(4)}};
    text << "links vs gold: precision " << r.precision.to_decimal(4) << ", coverage "
         << r.coverage.to_decimal(4) << "\n";
  }
  if (!cfg.gold_tags_path.empty()) {
    if (!exists(artifact::kLabeled))
      throw dependency_error("gold tags supplied but no labeled artifact present; run 'label'");
    std::vector<std::pair<std::string, std::string>> emitted;
    for (const TaggedDefinition& t : labeled)
      emitted.push_back(
          {t.def.headword + "\t" + std::to_string(t.def.sense_no), t.tag});
    EvalResult r = evaluate(emitted, read_gold_tags(cfg.gold_tags_path));
    eval["tags"] = {{"precision", r.precision.to_decimal(4)},
                    {"coverage", r.coverage.to_decimal(4)}};
    text << "tags vs gold: precision " << r.precision.to_decimal(4) << ", coverage "
         << r.coverage.to_decimal(4) << "\n";
  }
  if (!eval.empty()) report["evaluation"] = eval;

  write_json(path_in(cfg, artifact::kReportJson), report);
  std::ofstream out = open_out(path_in(cfg, artifact::kReportText));
  out << text.str();
}

} // namespace

void run_stage(Stage stage, const RunConfig& cfg) {
  cfg.validate();
  switch (stage) {
    case Stage::MergeBilinguals: stage_merge_bilinguals(cfg); break;
    case Stage::Link: stage_link(cfg); break;
    case Stage::SeedTag: stage_seed_tag(cfg); break;
    case Stage::TrainSalient: stage_train_salient(cfg); break;
    case Stage::Label: stage_label(cfg); break;
    case Stage::TopBeginners: stage_top_beginners(cfg); break;
    case Stage::BuildTaxonomy: stage_build_taxonomy(cfg); break;
    case Stage::Merge: stage_merge(cfg); break;
    case Stage::Report: stage_report(cfg); break;
  }
}

void run_all(const RunConfig& cfg) {
  for (Stage s : {Stage::MergeBilinguals, Stage::Link, Stage::SeedTag, Stage::TrainSalient,
                  Stage::Label, Stage::TopBeginners, Stage::BuildTaxonomy, Stage::Merge,
                  Stage::Report})
    run_stage(s, cfg);
}

} // namespace wnbuild

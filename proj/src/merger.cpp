#include "wnbuild/merger.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/text.hpp"
#include "wnbuild/tsv.hpp"

#include <algorithm>
#include <tuple>

namespace wnbuild {

const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::A: return "A";
    case LinkKind::B: return "B";
    case LinkKind::None: return "NONE";
  }
  return "?";
}

void ConfidenceTable::set_default(int configuration, double confidence) {
  if (configuration < 1 || configuration > 8)
    throw config_error("configuration must be 1..8, got " + std::to_string(configuration));
  if (confidence < 0.0 || confidence > 1.0)
    throw config_error("confidence out of [0,1] for configuration " +
                       std::to_string(configuration));
  defaults_[configuration] = confidence;
}

void ConfidenceTable::set_override(int configuration, const std::string& semfile,
                                   double confidence) {
  if (configuration < 1 || configuration > 8)
    throw config_error("configuration must be 1..8, got " + std::to_string(configuration));
  if (confidence < 0.0 || confidence > 1.0)
    throw config_error("confidence out of [0,1] for configuration " +
                       std::to_string(configuration));
  overrides_[{configuration, fold_word(semfile)}] = confidence;
}

double ConfidenceTable::confidence(int configuration, const std::string& semfile) const {
  auto it = overrides_.find({configuration, fold_word(semfile)});
  if (it != overrides_.end()) return it->second;
  auto d = defaults_.find(configuration);
  if (d == defaults_.end())
    throw config_error("no confidence registered for configuration " +
                       std::to_string(configuration));
  return d->second;
}

ConfidenceTable ConfidenceTable::load_file(const std::string& path) {
  ConfidenceTable t;
  for_each_tsv_file(path, 2, [&](const TsvRecord& rec) {
    int cfg = 0;
    double conf = 0.0;
    try {
      cfg = std::stoi(rec.at(0));
      conf = std::stod(rec.at(1));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad number");
    }
    try {
      if (rec.fields.size() > 2 && !trim(rec.fields[2]).empty())
        t.set_override(cfg, trim(rec.fields[2]), conf);
      else
        t.set_default(cfg, conf);
    } catch (const config_error& e) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": " + e.what());
    }
  });
  return t;
}

ConfidenceTable ConfidenceTable::builtin_defaults() {
  ConfidenceTable t;
  // Per-semantic-file cells where measured, 0.50 floor elsewhere.
  // One-sided configurations produce no links; their cells stay at zero.
  t.set_default(1, 0.99);
  t.set_default(2, 0.50);
  t.set_default(3, 0.0);
  t.set_default(4, 0.50);
  t.set_default(5, 0.50);
  t.set_default(6, 0.0);
  t.set_default(7, 0.0);
  t.set_default(8, 0.0);
  t.set_override(2, "artifact", 0.50);
  t.set_override(2, "mental_process", 0.50);
  t.set_override(4, "artifact", 0.85);
  t.set_override(4, "mental_process", 0.65);
  t.set_override(4, "communication", 0.50);
  t.set_override(4, "food", 0.74);
  return t;
}

int classify_pattern(LinkKind above, LinkKind below) {
  if (above == LinkKind::A && below == LinkKind::A) return 1;
  if (above == LinkKind::A && below == LinkKind::B) return 2;
  if (above == LinkKind::A && below == LinkKind::None) return 3;
  if (above == LinkKind::B && below == LinkKind::A) return 4;
  if (above == LinkKind::B && below == LinkKind::B) return 5;
  if (above == LinkKind::B && below == LinkKind::None) return 6;
  if (above == LinkKind::None && below == LinkKind::A) return 7;
  if (above == LinkKind::None && below == LinkKind::B) return 8;
  throw config_error("pattern with no connection on either side");
}

namespace {

// synsets a word is B-connected to: any synset of any of its translations
std::set<SynsetId> b_synsets(const std::string& word, const HomogeneousBilingual& b,
                             const WordNetGraph& g) {
  std::set<SynsetId> out;
  for (const std::string& tr : b.translations(word))
    for (const SynsetId& s : g.synsets_of(tr)) out.insert(s);
  return out;
}

std::set<SynsetId> a_synsets(const std::string& word, const LinkSet& a) {
  std::set<SynsetId> out;
  for (auto it = a.lower_bound({word, ""}); it != a.end() && it->first == word; ++it)
    out.insert(it->second);
  return out;
}

LinkKind side_kind(const std::string& word, const SynsetId& synset, const std::set<SynsetId>& a,
                   const std::set<SynsetId>& b) {
  (void)word;
  if (a.count(synset)) return LinkKind::A; // A shadows B
  if (b.count(synset)) return LinkKind::B;
  return LinkKind::None;
}

// hypernym ancestors within `max_path` edges, paired with nothing else;
// multi-parent paths all contribute, duplicates collapse
std::set<SynsetId> ancestors_within(const WordNetGraph& g, const SynsetId& start, int max_path) {
  std::set<SynsetId> out;
  std::vector<std::pair<SynsetId, int>> work{{start, 0}};
  while (!work.empty()) {
    auto [id, hops] = work.back();
    work.pop_back();
    if (hops == max_path) continue;
    for (const SynsetId& h : g.synset(id).hypernyms) {
      out.insert(h);
      work.push_back({h, hops + 1});
    }
  }
  return out;
}

std::set<SynsetId> descendants_within(const WordNetGraph& g, const SynsetId& start, int max_path) {
  std::set<SynsetId> out;
  std::vector<std::pair<SynsetId, int>> work{{start, 0}};
  while (!work.empty()) {
    auto [id, hops] = work.back();
    work.pop_back();
    if (hops == max_path) continue;
    for (const SynsetId& h : g.synset(id).hyponyms) {
      out.insert(h);
      work.push_back({h, hops + 1});
    }
  }
  return out;
}

} // namespace

std::vector<PatternInstance> enumerate_patterns(const SenseTaxonomy& tax, const WordNetGraph& g,
                                                const LinkSet& a_links,
                                                const HomogeneousBilingual& b, int max_path) {
  if (max_path < 1) throw config_error("max_path must be >= 1");
  std::vector<PatternInstance> out;
  for (const auto& [child, parent] : tax.parent) {
    const std::string& word_below = child.headword;
    const std::string& word_above = parent.headword;
    std::set<SynsetId> a_below = a_synsets(word_below, a_links);
    std::set<SynsetId> a_above = a_synsets(word_above, a_links);
    std::set<SynsetId> b_below = b_synsets(word_below, b, g);
    std::set<SynsetId> b_above = b_synsets(word_above, b, g);

    // candidate synset pairs seeded from whichever side is connected
    std::set<std::pair<SynsetId, SynsetId>> pairs;
    std::set<SynsetId> connected_below = a_below;
    connected_below.insert(b_below.begin(), b_below.end());
    std::set<SynsetId> connected_above = a_above;
    connected_above.insert(b_above.begin(), b_above.end());
    for (const SynsetId& lo : connected_below)
      for (const SynsetId& hi : ancestors_within(g, lo, max_path)) pairs.insert({lo, hi});
    for (const SynsetId& hi : connected_above)
      for (const SynsetId& lo : descendants_within(g, hi, max_path)) pairs.insert({lo, hi});

    for (const auto& [lo, hi] : pairs) {
      PatternInstance p;
      p.sp_hypo = child;
      p.sp_hyper = parent;
      p.en_hypo = lo;
      p.en_hyper = hi;
      p.below_kind = side_kind(word_below, lo, a_below, b_below);
      p.above_kind = side_kind(word_above, hi, a_above, b_above);
      if (p.above_kind == LinkKind::None && p.below_kind == LinkKind::None) continue;
      p.configuration = classify_pattern(p.above_kind, p.below_kind);
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

struct Promotion {
  std::string word;
  SynsetId synset;
  int configuration;
  double confidence;
};

std::vector<Promotion> promotions_of(const PatternInstance& p, const ConfidenceTable& conf,
                                     const WordNetGraph& g) {
  std::vector<Promotion> out;
  auto cell = [&](int cfg, const SynsetId& s) { return conf.confidence(cfg, g.synset(s).semfile); };
  switch (p.configuration) {
    case 2:
      out.push_back({p.sp_hypo.headword, p.en_hypo, 2, cell(2, p.en_hypo)});
      break;
    case 4:
      out.push_back({p.sp_hyper.headword, p.en_hyper, 4, cell(4, p.en_hyper)});
      break;
    case 5:
      out.push_back({p.sp_hypo.headword, p.en_hypo, 5, cell(5, p.en_hypo)});
      out.push_back({p.sp_hyper.headword, p.en_hyper, 5, cell(5, p.en_hyper)});
      break;
    default:
      break; // 1 boosts; 3/6/7/8 detected and reported only
  }
  return out;
}

} // namespace

std::vector<CombinedCandidate> combine_patterns(const std::vector<PatternInstance>& instances,
                                                const ConfidenceTable& conf,
                                                const WordNetGraph& g) {
  std::map<std::pair<std::string, SynsetId>, std::pair<bool, bool>> support; // (has2, has4)
  for (const PatternInstance& p : instances) {
    if (p.configuration == 2) support[{p.sp_hypo.headword, p.en_hypo}].first = true;
    if (p.configuration == 4) support[{p.sp_hyper.headword, p.en_hyper}].second = true;
  }
  std::vector<CombinedCandidate> out;
  for (const auto& [key, has] : support) {
    if (!has.first || !has.second) continue;
    const std::string& semfile = g.synset(key.second).semfile;
    double c2 = conf.confidence(2, semfile);
    double c4 = conf.confidence(4, semfile);
    out.push_back({key.first, key.second, 1.0 - (1.0 - c2) * (1.0 - c4)});
  }
  return out;
}

InferenceResult infer_links(const std::vector<PatternInstance>& instances,
                            const ConfidenceTable& conf, double accept_threshold,
                            const WordNetGraph& g, const LinkSet& existing, int iteration) {
  InferenceResult res;
  std::set<std::tuple<std::string, SynsetId, SenseKey, int>> seen_boosts;
  std::map<std::pair<std::string, SynsetId>, InferredLink> best;

  for (const PatternInstance& p : instances) {
    res.instances_by_configuration[p.configuration] += 1;
    // validate the table covers this configuration up front
    conf.confidence(p.configuration, g.synset(p.en_hyper).semfile);

    if (p.configuration == 1) {
      if (seen_boosts.insert({p.sp_hyper.headword, p.en_hyper, p.sp_hyper, 1}).second)
        res.boosts.push_back({p.sp_hyper.headword, p.en_hyper, p.sp_hyper, 1});
      if (seen_boosts.insert({p.sp_hypo.headword, p.en_hypo, p.sp_hypo, 1}).second)
        res.boosts.push_back({p.sp_hypo.headword, p.en_hypo, p.sp_hypo, 1});
      continue;
    }
    for (const Promotion& pr : promotions_of(p, conf, g)) {
      if (existing.count({pr.word, pr.synset})) continue;
      InferredLink link{pr.word, pr.synset, std::to_string(pr.configuration), pr.confidence,
                        iteration};
      auto [it, inserted] = best.emplace(std::make_pair(pr.word, pr.synset), link);
      if (!inserted && link.confidence > it->second.confidence) it->second = link;
    }
  }

  // class-2 x class-4 combinations override single-class confidence
  for (const CombinedCandidate& c : combine_patterns(instances, conf, g)) {
    if (existing.count({c.word, c.synset})) continue;
    auto it = best.find({c.word, c.synset});
    InferredLink link{c.word, c.synset, "2+4", c.confidence, iteration};
    if (it == best.end())
      best.emplace(std::make_pair(c.word, c.synset), link);
    else if (c.confidence >= it->second.confidence)
      it->second = link;
  }

  for (const auto& [key, link] : best)
    if (link.confidence >= accept_threshold) res.new_links.push_back(link);
  return res;
}

BootstrapResult bootstrap(const SenseTaxonomy& tax, const WordNetGraph& g, LinkSet a_links,
                          const HomogeneousBilingual& b, const ConfidenceTable& conf,
                          double accept_threshold, int max_iters, int max_path) {
  if (max_iters < 1) throw config_error("max_iters must be >= 1");
  BootstrapResult res;
  for (int round = 1; round <= max_iters; ++round) {
    std::vector<PatternInstance> instances = enumerate_patterns(tax, g, a_links, b, max_path);
    InferenceResult inf = infer_links(instances, conf, accept_threshold, g, a_links, round);

    BootstrapRound ledger;
    ledger.round = round;
    ledger.added = static_cast<long>(inf.new_links.size());
    ledger.boosts = static_cast<long>(inf.boosts.size());
    ledger.instances_by_configuration = inf.instances_by_configuration;
    for (const InferredLink& link : inf.new_links) {
      ledger.added_by_configuration[link.source_configuration] += 1;
      ledger.added_by_semfile[g.synset(link.synset).semfile] += 1;
      a_links.insert({link.word, link.synset});
      res.inferred.push_back(link);
    }
    res.ledger.push_back(std::move(ledger));
    if (inf.new_links.empty()) break; // fixpoint
  }
  res.final_links = std::move(a_links);
  return res;
}

} // namespace wnbuild

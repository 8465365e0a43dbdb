#include "wnbuild/taxonomy.hpp"

#include "wnbuild/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace wnbuild {

GenusTable collect_genus(const std::vector<TaggedDefinition>& defs, const std::string& tag) {
  GenusTable t;
  t.tag = tag;
  for (const TaggedDefinition& d : defs) {
    if (d.tag != tag || d.def.genus.empty()) continue;
    t.counts[d.def.genus] += 1;
  }
  return t;
}

GlobalGenusCounts collect_genus_all(const std::vector<TaggedDefinition>& defs) {
  GlobalGenusCounts g;
  for (const TaggedDefinition& d : defs) {
    if (d.def.genus.empty()) continue;
    g[d.def.genus][d.tag] += 1;
  }
  return g;
}

GenusTable filter_f1(const GenusTable& t, const HomogeneousBilingual& bi, const WordNetGraph& g) {
  GenusTable out;
  out.tag = t.tag;
  for (const auto& [genus, count] : t.counts) {
    bool keep = false;
    for (const std::string& tr : bi.translations(genus)) {
      for (const SynsetId& s : g.synsets_of(tr)) {
        if (g.synset(s).semfile == t.tag) {
          keep = true;
          break;
        }
      }
      if (keep) break;
    }
    if (keep) out.counts.emplace(genus, count);
  }
  return out;
}

GenusTable filter_f2(const GenusTable& t, const GlobalGenusCounts& global) {
  GenusTable out;
  out.tag = t.tag;
  for (const auto& [genus, count] : t.counts) {
    bool keep = true;
    auto it = global.find(genus);
    if (it != global.end()) {
      for (const auto& [tag, other] : it->second) {
        if (tag == t.tag) continue;
        if (other >= count) { // ties removed
          keep = false;
          break;
        }
      }
    }
    if (keep) out.counts.emplace(genus, count);
  }
  return out;
}

GenusTable filter_f3(const GenusTable& t, long n) {
  GenusTable out;
  out.tag = t.tag;
  for (const auto& [genus, count] : t.counts)
    if (count > n) out.counts.emplace(genus, count);
  return out;
}

FilterSpec parse_filter_spec(const std::string& spec) {
  FilterSpec out;
  out.text = spec;
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return out;

  for (const std::string& raw : split(s, '+')) {
    std::string step = raw;
    if (!step.empty() && step.front() == '(' && step.back() == ')')
      step = step.substr(1, step.size() - 2);
    if (step == "F1" || step == "f1") {
      out.steps.push_back({FilterStep::F1, 0});
    } else if (step == "F2" || step == "f2") {
      out.steps.push_back({FilterStep::F2, 0});
    } else if ((step.size() > 3) && (step[0] == 'F' || step[0] == 'f') && step[1] == '3' &&
               step[2] == '>') {
      long n = 0;
      try {
        std::size_t used = 0;
        n = std::stol(step.substr(3), &used);
        if (used != step.size() - 3) throw config_error("trailing characters");
      } catch (const std::exception&) {
        throw config_error("bad F3 threshold in filter spec '" + spec + "'");
      }
      if (n < 0) throw config_error("negative F3 threshold in filter spec '" + spec + "'");
      out.steps.push_back({FilterStep::F3, n});
    } else {
      throw config_error("unknown filter '" + step + "' in filter spec '" + spec + "'");
    }
  }
  return out;
}

std::set<std::string> select_top_beginners(const std::vector<TaggedDefinition>& defs,
                                           const std::string& tag, const FilterSpec& spec,
                                           const HomogeneousBilingual& bi, const WordNetGraph& g) {
  GenusTable table = collect_genus(defs, tag);
  GlobalGenusCounts global = collect_genus_all(defs);
  for (const FilterStep& step : spec.steps) {
    switch (step.kind) {
      case FilterStep::F1: table = filter_f1(table, bi, g); break;
      case FilterStep::F2: table = filter_f2(table, global); break;
      case FilterStep::F3: table = filter_f3(table, step.threshold); break;
    }
  }
  std::set<std::string> out;
  for (const auto& [genus, count] : table.counts) out.insert(genus);
  return out;
}

// --- genus sense disambiguation --------------------------------------------

GenusHeuristic heuristic_from_string(const std::string& name) {
  std::string n = fold_word(name);
  if (n == "monosemous") return GenusHeuristic::Monosemous;
  if (n == "distance") return GenusHeuristic::Distance;
  if (n == "first_sense" || n == "first-sense") return GenusHeuristic::FirstSense;
  throw config_error("unknown genus heuristic '" + name + "'");
}

const char* to_string(GenusHeuristic h) {
  switch (h) {
    case GenusHeuristic::Monosemous: return "monosemous";
    case GenusHeuristic::Distance: return "distance";
    case GenusHeuristic::FirstSense: return "first_sense";
  }
  return "?";
}

std::vector<GenusHeuristic> default_heuristic_chain() {
  return {GenusHeuristic::Monosemous, GenusHeuristic::Distance, GenusHeuristic::FirstSense};
}

SenseIndex::SenseIndex(const std::vector<Definition>& defs) {
  for (const Definition& d : defs) by_word_[d.headword].push_back(&d);
  for (auto& [word, senses] : by_word_)
    std::sort(senses.begin(), senses.end(),
              [](const Definition* a, const Definition* b) { return a->sense_no < b->sense_no; });
}

const std::vector<const Definition*>& SenseIndex::senses(std::string_view headword) const {
  static const std::vector<const Definition*> empty;
  auto it = by_word_.find(fold_word(headword));
  return it == by_word_.end() ? empty : it->second;
}

bool SenseIndex::has(std::string_view headword) const {
  return by_word_.count(fold_word(headword)) > 0;
}

namespace {

// Distance heuristic: score each candidate sense by the minimum
// conceptual distance between translations of that sense's own genus and
// translations of the headword being defined; decisive only on a unique
// finite minimum.
std::optional<SenseKey> distance_heuristic(const Definition& d, const std::string& genus_word,
                                           const std::vector<const Definition*>& senses,
                                           const WordNetGraph& g, const HomogeneousBilingual& bi,
                                           const Stoplist& stop) {
  const auto& head_tr = bi.translations(d.headword);
  if (head_tr.empty()) return std::nullopt;

  std::optional<Rat> best;
  std::optional<SenseKey> best_sense;
  bool tie = false;
  for (const Definition* s : senses) {
    auto own_genus = extract_genus(*s, stop);
    if (!own_genus) continue;
    std::optional<Rat> sense_score;
    for (const std::string& tg : bi.translations(*own_genus)) {
      for (const std::string& th : head_tr) {
        DistanceResult r = g.conceptual_distance(tg, th);
        if (!r.reachable()) continue;
        if (!sense_score || *r.distance < *sense_score) sense_score = r.distance;
      }
    }
    if (!sense_score) continue;
    if (!best || *sense_score < *best) {
      best = sense_score;
      best_sense = SenseKey{s->headword, s->sense_no};
      tie = false;
    } else if (*sense_score == *best) {
      tie = true;
    }
  }
  (void)genus_word;
  if (!best || tie) return std::nullopt;
  return best_sense;
}

} // namespace

GenusResolution disambiguate_genus(const Definition& d, const std::string& genus_word,
                                   const SenseIndex& dict, const WordNetGraph& g,
                                   const HomogeneousBilingual& bi,
                                   const std::vector<GenusHeuristic>& chain, const Stoplist& stop) {
  GenusResolution res;
  const auto& senses = dict.senses(genus_word);
  if (senses.empty()) return res; // unresolved: not in the dictionary

  for (GenusHeuristic h : chain) {
    switch (h) {
      case GenusHeuristic::Monosemous:
        if (senses.size() == 1) {
          res.sense = SenseKey{senses[0]->headword, senses[0]->sense_no};
          res.decided_by = h;
          return res;
        }
        break;
      case GenusHeuristic::Distance: {
        auto pick = distance_heuristic(d, genus_word, senses, g, bi, stop);
        if (pick) {
          res.sense = pick;
          res.decided_by = h;
          return res;
        }
        break;
      }
      case GenusHeuristic::FirstSense:
        res.sense = SenseKey{senses[0]->headword, senses[0]->sense_no};
        res.decided_by = h;
        return res;
    }
  }
  return res; // chain exhausted without a decision
}

// --- taxonomy assembly ------------------------------------------------------

namespace {

struct EdgeKey {
  SenseKey child;
  SenseKey parent;
  bool operator<(const EdgeKey& o) const {
    return std::tie(child, parent) < std::tie(o.child, o.parent);
  }
};

} // namespace

TopStructure structure_tops(const std::set<std::string>& tops,
                            const std::vector<TaxonomyInput>& defs, const std::string& tag) {
  TopStructure out;
  std::map<std::pair<std::string, std::string>, long> counts;
  for (const TaxonomyInput& d : defs) {
    if (d.tag != tag) continue;
    if (!tops.count(d.key.headword) || d.genus_word.empty()) continue;
    if (!tops.count(d.genus_word) || d.genus_word == d.key.headword) continue;
    counts[{d.key.headword, d.genus_word}] += 1;
  }

  std::map<std::string, std::vector<std::pair<std::string, long>>> adj; // child -> (parent,count)
  for (const auto& [edge, count] : counts) adj[edge.first].push_back({edge.second, count});

  // break cycles: repeatedly find one, drop its lowest-count edge
  // (largest (child,parent) among equals, so smaller names survive)
  auto find_cycle = [&]() -> std::vector<std::string> {
    std::map<std::string, int> color;
    std::vector<std::string> path;
    std::vector<std::string> cycle;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
      color[v] = 1;
      path.push_back(v);
      auto it = adj.find(v);
      if (it != adj.end()) {
        for (const auto& [next, count] : it->second) {
          if (color[next] == 1) {
            auto start = std::find(path.begin(), path.end(), next);
            cycle.assign(start, path.end());
            return true;
          }
          if (color[next] == 0 && dfs(next)) return true;
        }
      }
      color[v] = 2;
      path.pop_back();
      return false;
    };
    for (const auto& [v, unused] : adj)
      if (color[v] == 0 && dfs(v)) return cycle;
    return {};
  };

  while (true) {
    std::vector<std::string> cycle = find_cycle();
    if (cycle.empty()) break;
    out.cycles.push_back(cycle);
    std::pair<std::string, std::string> worst;
    long worst_count = -1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::string& child = cycle[i];
      const std::string& parent = cycle[(i + 1) % cycle.size()];
      long c = counts.at({child, parent});
      std::pair<std::string, std::string> key{child, parent};
      if (worst_count < 0 || c < worst_count || (c == worst_count && key > worst)) {
        worst_count = c;
        worst = key;
      }
    }
    out.dropped.push_back({worst.first, worst.second, worst_count});
    counts.erase(worst);
    auto& edges = adj[worst.first];
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const auto& e) { return e.first == worst.second; }),
                edges.end());
  }

  for (const auto& [edge, count] : counts) out.edges.push_back({edge.first, edge.second, count});
  std::set<std::string> with_parent;
  for (const TopEdge& e : out.edges) with_parent.insert(e.child);
  for (const std::string& t : tops)
    if (!with_parent.count(t)) out.roots.insert(t);
  return out;
}

SenseTaxonomy build_taxonomy(const std::string& tag, const std::set<std::string>& tops,
                             const std::vector<TaxonomyInput>& defs) {
  SenseTaxonomy tax;
  tax.primitive = tag;

  std::map<SenseKey, std::string> label;
  for (const TaxonomyInput& d : defs) label[d.key] = d.tag;

  // candidate nodes: this primitive's definitions minus cross-tag genus;
  // top-beginner senses are exempt, their genus naturally points upward
  // out of the category
  std::vector<const TaxonomyInput*> members;
  for (const TaxonomyInput& d : defs) {
    if (d.tag != tag) continue;
    if (!tops.count(d.key.headword) && d.genus_sense) {
      auto it = label.find(*d.genus_sense);
      if (it != label.end() && it->second != tag) {
        tax.excluded_cross_tag += 1;
        continue;
      }
    }
    members.push_back(&d);
    tax.nodes.insert(d.key);
  }

  // candidate parent pointers; top-beginner senses only structure under
  // other tops
  std::map<SenseKey, SenseKey> parent;
  std::map<SenseKey, const TaxonomyInput*> by_key;
  for (const TaxonomyInput* d : members) by_key[d->key] = d;
  for (const TaxonomyInput* d : members) {
    if (!d->genus_sense || !tax.nodes.count(*d->genus_sense) || *d->genus_sense == d->key)
      continue;
    if (tops.count(d->key.headword) && !tops.count(d->genus_sense->headword)) continue;
    parent[d->key] = *d->genus_sense;
  }

  // cycle breaking over the parent-pointer rings: reject the edge with
  // the lowest word-level support, largest key among equals
  auto edge_count = [&](const SenseKey& child, const SenseKey& par) {
    long n = 0;
    for (const TaxonomyInput* d : members)
      if (d->key.headword == child.headword && d->genus_sense && *d->genus_sense == par) ++n;
    return n;
  };
  std::map<SenseKey, int> state; // 0 unvisited, 1 on stack, 2 done
  for (const auto& node : tax.nodes) {
    if (state[node]) continue;
    std::vector<SenseKey> chain;
    SenseKey cur = node;
    while (true) {
      auto st = state.find(cur);
      if (st != state.end() && st->second == 2) break;
      if (st != state.end() && st->second == 1) {
        // ring found: cur .. chain.back()
        auto start = std::find(chain.begin(), chain.end(), cur);
        std::vector<SenseKey> ring(start, chain.end());
        tax.reported_cycles.push_back(ring);
        EdgeKey worst{ring[0], parent.at(ring[0])};
        long worst_count = edge_count(worst.child, worst.parent);
        for (std::size_t i = 1; i < ring.size(); ++i) {
          EdgeKey e{ring[i], parent.at(ring[i])};
          long c = edge_count(e.child, e.parent);
          if (c < worst_count || (c == worst_count && worst < e)) {
            worst = e;
            worst_count = c;
          }
        }
        parent.erase(worst.child); // attach to primitive root
        break;
      }
      state[cur] = 1;
      chain.push_back(cur);
      auto p = parent.find(cur);
      if (p == parent.end()) break;
      cur = p->second;
    }
    for (const SenseKey& k : chain) state[k] = 2;
  }

  // anchoring: keep structure only along chains that reach a top-beginner
  // sense; everything else flattens to the primitive root
  std::map<SenseKey, bool> anchored;
  std::function<bool(const SenseKey&)> is_anchored = [&](const SenseKey& k) -> bool {
    auto memo = anchored.find(k);
    if (memo != anchored.end()) return memo->second;
    bool value = false;
    if (tops.count(k.headword)) {
      value = true;
    } else {
      auto p = parent.find(k);
      value = p != parent.end() && is_anchored(p->second);
    }
    anchored[k] = value;
    return value;
  };
  for (const auto& node : tax.nodes) {
    if (!is_anchored(node)) parent.erase(node);
  }

  tax.parent = std::move(parent);
  for (const auto& node : tax.nodes) {
    if (tax.parent.find(node) == tax.parent.end()) {
      tax.tops.insert(node);
      const TaxonomyInput* d = by_key.at(node);
      if (!d->genus_word.empty() && !d->genus_sense) tax.unresolved_attached += 1;
    }
  }
  return tax;
}

} // namespace wnbuild

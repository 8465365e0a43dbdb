#include "wnbuild/wordnet.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/text.hpp"
#include "wnbuild/tsv.hpp"

#include <algorithm>
#include <fstream>
#include <queue>

namespace wnbuild {

const char* to_string(StructRel r) {
  switch (r) {
    case StructRel::SharedSynset: return "SHARED_SYNSET";
    case StructRel::DirectHyponym: return "DIRECT_HYPONYM";
    case StructRel::DirectHypernym: return "DIRECT_HYPERNYM";
    case StructRel::Sibling: return "SIBLING";
    case StructRel::None: return "NONE";
  }
  return "?";
}

WordNetGraph WordNetGraph::load(std::istream& in, const std::string& source) {
  WordNetGraph g;
  for_each_tsv_record(in, source, 4, [&](const TsvRecord& rec) {
    Synset s;
    s.id = trim(rec.at(0));
    if (s.id.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": empty synset id");
    if (g.synsets_.count(s.id))
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": duplicate synset id '" +
                        s.id + "'");
    s.pos = trim(rec.at(1));
    s.semfile = fold_word(rec.at(2));
    for (const std::string& lemma : split(rec.at(3), '|')) {
      std::string w = fold_word(lemma);
      if (w.empty()) continue;
      if (std::find(s.lemmas.begin(), s.lemmas.end(), w) == s.lemmas.end()) s.lemmas.push_back(w);
    }
    if (s.lemmas.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": synset '" + s.id +
                        "' has no lemmas");
    if (rec.fields.size() > 4) {
      for (const std::string& h : split(rec.fields[4], ',')) {
        std::string id = trim(h);
        if (id.empty()) continue;
        if (id == s.id)
          throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": synset '" + s.id +
                            "' lists itself as hypernym");
        if (std::find(s.hypernyms.begin(), s.hypernyms.end(), id) == s.hypernyms.end())
          s.hypernyms.push_back(id);
      }
    }
    std::sort(s.hypernyms.begin(), s.hypernyms.end());
    g.synsets_.emplace(s.id, std::move(s));
  });
  g.finish_load(source);
  return g;
}

WordNetGraph WordNetGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open wordnet file: " + path);
  return load(in, path);
}

void WordNetGraph::finish_load(const std::string& source) {
  // dangling references, hyponym inversion
  for (auto& [id, s] : synsets_) {
    for (const SynsetId& h : s.hypernyms) {
      auto it = synsets_.find(h);
      if (it == synsets_.end())
        throw input_error(source + ": synset '" + id + "' references unknown hypernym '" + h + "'");
      it->second.hyponyms.push_back(id);
    }
  }
  for (auto& [id, s] : synsets_) {
    std::sort(s.hyponyms.begin(), s.hyponyms.end());
    for (const std::string& w : s.lemmas) lemma_index_[w].push_back(id);
  }
  for (auto& [w, ids] : lemma_index_) std::sort(ids.begin(), ids.end());

  // cycle check over hypernym edges: iterative DFS, colors 0/1/2
  std::map<SynsetId, int> color;
  for (const auto& [start, unused] : synsets_) {
    if (color[start]) continue;
    std::vector<std::pair<SynsetId, std::size_t>> stack{{start, 0}};
    std::vector<SynsetId> path{start};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      const auto& hyps = synsets_.at(id).hypernyms;
      if (next < hyps.size()) {
        const SynsetId& h = hyps[next++];
        int c = color[h];
        if (c == 1) {
          auto it = std::find(path.begin(), path.end(), h);
          std::string cycle;
          for (; it != path.end(); ++it) cycle += *it + " -> ";
          cycle += h;
          throw input_error(source + ": hypernym cycle: " + cycle);
        }
        if (c == 0) {
          color[h] = 1;
          stack.emplace_back(h, 0);
          path.push_back(h);
        }
      } else {
        color[id] = 2;
        stack.pop_back();
        path.pop_back();
      }
    }
  }

  // depth: roots 1, otherwise 1 + min over hypernym depths
  for (const auto& [id, unused] : synsets_) {
    if (depth_.count(id)) continue;
    std::vector<SynsetId> work{id};
    while (!work.empty()) {
      const SynsetId cur = work.back();
      const Synset& s = synsets_.at(cur);
      if (s.hypernyms.empty()) {
        depth_[cur] = 1;
        work.pop_back();
        continue;
      }
      int best = -1;
      bool ready = true;
      for (const SynsetId& h : s.hypernyms) {
        auto it = depth_.find(h);
        if (it == depth_.end()) {
          work.push_back(h);
          ready = false;
        } else if (best < 0 || it->second < best) {
          best = it->second;
        }
      }
      if (ready) {
        depth_[cur] = best + 1;
        work.pop_back();
      }
    }
  }
}

const Synset& WordNetGraph::synset(const SynsetId& id) const {
  auto it = synsets_.find(id);
  if (it == synsets_.end()) throw input_error("unknown synset id '" + id + "'");
  return it->second;
}

const std::vector<SynsetId>& WordNetGraph::synsets_of(std::string_view word) const {
  static const std::vector<SynsetId> empty;
  auto it = lemma_index_.find(fold_word(word));
  return it == lemma_index_.end() ? empty : it->second;
}

int WordNetGraph::depth(const SynsetId& id) const {
  auto it = depth_.find(id);
  if (it == depth_.end()) throw input_error("unknown synset id '" + id + "'");
  return it->second;
}

namespace {

// Uniform-cost search over the undirected hyper/hyponym edge set with
// node costs 1/depth; the start node's own cost is part of the total.
std::map<SynsetId, Rat> node_weighted_dijkstra(const WordNetGraph& g, const SynsetId& start) {
  std::map<SynsetId, Rat> dist;
  using Item = std::pair<Rat, SynsetId>;
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second; // smaller id first among equal costs
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  Rat d0 = Rat::inverse(g.depth(start));
  dist.emplace(start, d0);
  pq.emplace(d0, start);
  while (!pq.empty()) {
    auto [d, id] = pq.top();
    pq.pop();
    auto it = dist.find(id);
    if (it != dist.end() && it->second < d) continue;
    const Synset& s = g.synset(id);
    auto relax = [&](const SynsetId& next) {
      Rat nd = d + Rat::inverse(g.depth(next));
      auto found = dist.find(next);
      if (found == dist.end() || nd < found->second) {
        dist[next] = nd;
        pq.emplace(nd, next);
      }
    };
    for (const SynsetId& h : s.hypernyms) relax(h);
    for (const SynsetId& h : s.hyponyms) relax(h);
  }
  return dist;
}

} // namespace

std::optional<Rat> WordNetGraph::synset_distance(const SynsetId& a, const SynsetId& b) const {
  auto dist = node_weighted_dijkstra(*this, a);
  auto it = dist.find(b);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

DistanceResult WordNetGraph::conceptual_distance(std::string_view w1, std::string_view w2) const {
  DistanceResult best;
  const auto& s1 = synsets_of(w1);
  const auto& s2 = synsets_of(w2);
  if (s1.empty() || s2.empty()) return best;
  for (const SynsetId& c1 : s1) {
    auto dist = node_weighted_dijkstra(*this, c1);
    for (const SynsetId& c2 : s2) {
      auto it = dist.find(c2);
      if (it == dist.end()) continue;
      std::pair<SynsetId, SynsetId> pair{c1, c2};
      if (!best.distance || it->second < *best.distance ||
          (it->second == *best.distance && pair < best.chosen_pair)) {
        best.distance = it->second;
        best.chosen_pair = pair;
      }
    }
  }
  return best;
}

std::set<StructRel> WordNetGraph::structural_relation(std::string_view a, std::string_view b) const {
  std::set<StructRel> rels;
  const auto& sa = synsets_of(a);
  const auto& sb = synsets_of(b);
  for (const SynsetId& x : sa)
    if (std::binary_search(sb.begin(), sb.end(), x)) rels.insert(StructRel::SharedSynset);
  for (const SynsetId& x : sa) {
    const Synset& sx = synset(x);
    for (const SynsetId& y : sb) {
      if (x == y) continue;
      const Synset& sy = synset(y);
      if (std::binary_search(sx.hypernyms.begin(), sx.hypernyms.end(), y))
        rels.insert(StructRel::DirectHyponym);
      if (std::binary_search(sy.hypernyms.begin(), sy.hypernyms.end(), x))
        rels.insert(StructRel::DirectHypernym);
      std::vector<SynsetId> shared;
      std::set_intersection(sx.hypernyms.begin(), sx.hypernyms.end(), sy.hypernyms.begin(),
                            sy.hypernyms.end(), std::back_inserter(shared));
      if (!shared.empty()) rels.insert(StructRel::Sibling);
    }
  }
  if (rels.empty()) rels.insert(StructRel::None);
  return rels;
}

} // namespace wnbuild

#include "wnbuild/linker.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/text.hpp"
#include "wnbuild/tsv.hpp"

#include <algorithm>

namespace wnbuild {

ClassDim dimension_of(LinkClass c) {
  switch (c) {
    case LinkClass::MonoMono:
    case LinkClass::MonoPoly:
    case LinkClass::MultiMono:
    case LinkClass::MultiPoly:
      return ClassDim::Polysemy;
    case LinkClass::SharedSynset:
    case LinkClass::HyponymyPair:
    case LinkClass::SiblingPair:
      return ClassDim::Structural;
    case LinkClass::LowDistance:
      return ClassDim::Conceptual;
  }
  return ClassDim::Polysemy;
}

const char* to_string(LinkClass c) {
  switch (c) {
    case LinkClass::MonoMono: return "MONO_MONO";
    case LinkClass::MonoPoly: return "MONO_POLY";
    case LinkClass::MultiMono: return "MULTI_MONO";
    case LinkClass::MultiPoly: return "MULTI_POLY";
    case LinkClass::SharedSynset: return "SHARED_SYNSET";
    case LinkClass::HyponymyPair: return "HYPONYMY_PAIR";
    case LinkClass::SiblingPair: return "SIBLING_PAIR";
    case LinkClass::LowDistance: return "LOW_DISTANCE";
  }
  return "?";
}

const char* to_string(ClassDim d) {
  switch (d) {
    case ClassDim::Polysemy: return "polysemy";
    case ClassDim::Structural: return "structural";
    case ClassDim::Conceptual: return "conceptual";
  }
  return "?";
}

LinkClass link_class_from_string(const std::string& name) {
  for (LinkClass c : kAllClasses)
    if (name == to_string(c)) return c;
  throw config_error("unknown link class '" + name + "'");
}

Combiner combiner_from_string(const std::string& name) {
  std::string n = fold_word(name);
  if (n == "noisy_or" || n == "noisy-or") return Combiner::NoisyOr;
  if (n == "vote_count" || n == "vote-count") return Combiner::VoteCount;
  throw config_error("unknown combiner '" + name + "'");
}

void PrecisionTable::set(LinkClass c, double precision, long sample_size) {
  if (precision < 0.0 || precision > 1.0)
    throw config_error(std::string("precision for ") + to_string(c) + " out of [0,1]");
  rows_[c] = ClassPrecision{c, precision, sample_size};
}

double PrecisionTable::precision(LinkClass c) const {
  auto it = rows_.find(c);
  if (it == rows_.end())
    throw config_error(std::string("no precision registered for class ") + to_string(c));
  return it->second.precision;
}

bool PrecisionTable::has(LinkClass c) const { return rows_.count(c) > 0; }

PrecisionTable PrecisionTable::load_file(const std::string& path) {
  PrecisionTable t;
  for_each_tsv_file(path, 4, [&](const TsvRecord& rec) {
    LinkClass c = link_class_from_string(trim(rec.at(1)));
    std::string dim = fold_word(rec.at(0));
    if (dim != to_string(dimension_of(c)))
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": class " +
                        to_string(c) + " belongs to dimension " +
                        to_string(dimension_of(c)) + ", not '" + dim + "'");
    double p = 0.0;
    long n = 0;
    try {
      p = std::stod(rec.at(2));
      n = std::stol(rec.at(3));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad number");
    }
    if (p < 0.0 || p > 1.0)
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) +
                        ": precision out of [0,1]");
    t.set(c, p, n);
  });
  return t;
}

namespace {

// translations of `word` present in the lemma index
std::vector<std::string> indexed_translations(std::string_view word,
                                              const HomogeneousBilingual& bi,
                                              const WordNetGraph& g) {
  std::vector<std::string> out;
  for (const std::string& t : bi.translations(word))
    if (!g.synsets_of(t).empty()) out.push_back(t);
  return out;
}

} // namespace

LinkClass classify_polysemy(std::string_view word, const HomogeneousBilingual& bi,
                            const WordNetGraph& g) {
  const auto& trs = bi.translations(word);
  if (trs.empty())
    throw input_error("word '" + std::string(word) + "' has no translations");
  std::vector<std::size_t> senses; // synset counts of indexed translations
  for (const std::string& t : trs) {
    std::size_t n = g.synsets_of(t).size();
    if (n > 0) senses.push_back(n);
  }
  if (trs.size() == 1) {
    if (senses.size() == 1 && senses[0] == 1) return LinkClass::MonoMono;
    if (senses.size() == 1 && senses[0] > 1) return LinkClass::MonoPoly;
    return LinkClass::MultiPoly; // unindexed single translation: catch-all
  }
  if (!senses.empty() &&
      std::all_of(senses.begin(), senses.end(), [](std::size_t n) { return n == 1; }))
    return LinkClass::MultiMono;
  return LinkClass::MultiPoly;
}

std::set<LinkClass> classify_structural(std::string_view word, const HomogeneousBilingual& bi,
                                        const WordNetGraph& g) {
  std::set<LinkClass> out;
  std::vector<std::string> trs = indexed_translations(word, bi, g);
  if (trs.size() < 2) return out;
  for (std::size_t i = 0; i < trs.size(); ++i) {
    for (std::size_t j = i + 1; j < trs.size(); ++j) {
      for (StructRel r : g.structural_relation(trs[i], trs[j])) {
        switch (r) {
          case StructRel::SharedSynset: out.insert(LinkClass::SharedSynset); break;
          case StructRel::DirectHyponym:
          case StructRel::DirectHypernym: out.insert(LinkClass::HyponymyPair); break;
          case StructRel::Sibling: out.insert(LinkClass::SiblingPair); break;
          case StructRel::None: break;
        }
      }
    }
  }
  return out;
}

namespace {

struct PairDistance {
  Rat distance;
  std::pair<SynsetId, SynsetId> synsets;
};

// minimum pairwise conceptual distance over distinct translation pairs
std::optional<PairDistance> min_pairwise_distance(std::string_view word,
                                                  const HomogeneousBilingual& bi,
                                                  const WordNetGraph& g) {
  std::vector<std::string> trs = indexed_translations(word, bi, g);
  std::optional<PairDistance> best;
  for (std::size_t i = 0; i < trs.size(); ++i) {
    for (std::size_t j = i + 1; j < trs.size(); ++j) {
      DistanceResult r = g.conceptual_distance(trs[i], trs[j]);
      if (!r.reachable()) continue;
      if (!best || *r.distance < best->distance ||
          (*r.distance == best->distance && r.chosen_pair < best->synsets))
        best = PairDistance{*r.distance, r.chosen_pair};
    }
  }
  return best;
}

} // namespace

std::optional<LinkClass> classify_conceptual(std::string_view word, const HomogeneousBilingual& bi,
                                             const WordNetGraph& g, double threshold) {
  std::vector<std::string> trs = indexed_translations(word, bi, g);
  if (trs.size() < 2) return std::nullopt;
  auto best = min_pairwise_distance(word, bi, g);
  if (best && best->distance.to_double() < threshold) return LinkClass::LowDistance;
  return std::nullopt;
}

std::vector<LinkCandidate> generate_candidates(std::string_view word, LinkClass cls,
                                               const HomogeneousBilingual& bi,
                                               const WordNetGraph& g, double distance_threshold) {
  std::set<SynsetId> chosen;
  const auto& trs = bi.translations(word);
  std::vector<std::string> indexed = indexed_translations(word, bi, g);
  switch (cls) {
    case LinkClass::MonoMono:
    case LinkClass::MonoPoly: {
      // all synsets of the single translation (one of them for MonoMono)
      if (trs.size() == 1)
        for (const SynsetId& s : g.synsets_of(*trs.begin())) chosen.insert(s);
      break;
    }
    case LinkClass::MultiMono: {
      for (const std::string& t : indexed)
        for (const SynsetId& s : g.synsets_of(t)) chosen.insert(s);
      break;
    }
    case LinkClass::MultiPoly: {
      for (const std::string& t : indexed)
        for (const SynsetId& s : g.synsets_of(t)) chosen.insert(s);
      break;
    }
    case LinkClass::SharedSynset: {
      // synsets listing at least two distinct translations
      for (std::size_t i = 0; i < indexed.size(); ++i) {
        const auto& si = g.synsets_of(indexed[i]);
        for (std::size_t j = i + 1; j < indexed.size(); ++j) {
          const auto& sj = g.synsets_of(indexed[j]);
          std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                std::inserter(chosen, chosen.end()));
        }
      }
      break;
    }
    case LinkClass::HyponymyPair: {
      for (std::size_t i = 0; i < indexed.size(); ++i) {
        for (std::size_t j = i + 1; j < indexed.size(); ++j) {
          for (const SynsetId& a : g.synsets_of(indexed[i])) {
            const Synset& sa = g.synset(a);
            for (const SynsetId& b : g.synsets_of(indexed[j])) {
              if (a == b) continue;
              const Synset& sb = g.synset(b);
              bool rel = std::binary_search(sa.hypernyms.begin(), sa.hypernyms.end(), b) ||
                         std::binary_search(sb.hypernyms.begin(), sb.hypernyms.end(), a);
              if (rel) {
                chosen.insert(a);
                chosen.insert(b);
              }
            }
          }
        }
      }
      break;
    }
    case LinkClass::SiblingPair: {
      for (std::size_t i = 0; i < indexed.size(); ++i) {
        for (std::size_t j = i + 1; j < indexed.size(); ++j) {
          for (const SynsetId& a : g.synsets_of(indexed[i])) {
            const Synset& sa = g.synset(a);
            for (const SynsetId& b : g.synsets_of(indexed[j])) {
              if (a == b) continue;
              const Synset& sb = g.synset(b);
              std::vector<SynsetId> shared;
              std::set_intersection(sa.hypernyms.begin(), sa.hypernyms.end(), sb.hypernyms.begin(),
                                    sb.hypernyms.end(), std::back_inserter(shared));
              if (!shared.empty()) {
                chosen.insert(a);
                chosen.insert(b);
              }
            }
          }
        }
      }
      break;
    }
    case LinkClass::LowDistance: {
      auto best = min_pairwise_distance(word, bi, g);
      if (best && best->distance.to_double() < distance_threshold) {
        chosen.insert(best->synsets.first);
        chosen.insert(best->synsets.second);
      }
      break;
    }
  }
  std::vector<LinkCandidate> out;
  for (const SynsetId& s : chosen) {
    LinkCandidate c;
    c.word = fold_word(word);
    c.synset = s;
    c.supporting = {cls};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LinkCandidate> intersect_classes(const std::vector<LinkCandidate>& a,
                                             const std::vector<LinkCandidate>& b) {
  std::map<std::pair<std::string, SynsetId>, const LinkCandidate*> index;
  for (const LinkCandidate& c : b) index[{c.word, c.synset}] = &c;
  std::map<std::pair<std::string, SynsetId>, LinkCandidate> out;
  for (const LinkCandidate& c : a) {
    auto it = index.find({c.word, c.synset});
    if (it == index.end()) continue;
    LinkCandidate merged = c;
    merged.supporting.insert(it->second->supporting.begin(), it->second->supporting.end());
    auto [pos, inserted] = out.emplace(std::make_pair(c.word, c.synset), merged);
    if (!inserted)
      pos->second.supporting.insert(merged.supporting.begin(), merged.supporting.end());
  }
  std::vector<LinkCandidate> v;
  for (auto& [key, c] : out) v.push_back(std::move(c));
  return v;
}

double score_candidate(const LinkCandidate& c, const PrecisionTable& precisions,
                       Combiner combiner) {
  if (c.supporting.empty()) throw config_error("candidate with no supporting classes");
  switch (combiner) {
    case Combiner::NoisyOr: {
      double miss = 1.0;
      for (LinkClass cls : c.supporting) miss *= 1.0 - precisions.precision(cls);
      return 1.0 - miss;
    }
    case Combiner::VoteCount: {
      for (LinkClass cls : c.supporting) precisions.precision(cls); // registration check
      return static_cast<double>(c.supporting.size()) / static_cast<double>(kClassCount);
    }
  }
  return 0.0;
}

std::vector<LinkCandidate> accept_links(const std::vector<LinkCandidate>& candidates,
                                        const PrecisionTable& precisions, double threshold,
                                        Combiner combiner) {
  std::map<std::pair<std::string, SynsetId>, LinkCandidate> merged;
  for (const LinkCandidate& c : candidates) {
    auto [it, inserted] = merged.emplace(std::make_pair(c.word, c.synset), c);
    if (!inserted) it->second.supporting.insert(c.supporting.begin(), c.supporting.end());
  }
  std::vector<LinkCandidate> out;
  for (auto& [key, c] : merged) {
    c.confidence = score_candidate(c, precisions, combiner);
    c.accepted = c.confidence >= threshold;
    if (c.accepted) out.push_back(std::move(c));
  }
  return out;
}

} // namespace wnbuild

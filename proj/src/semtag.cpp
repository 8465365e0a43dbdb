#include "wnbuild/semtag.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/tsv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wnbuild {

const char* to_string(TagMethod m) {
  switch (m) {
    case TagMethod::DistanceSeed: return "DISTANCE_SEED";
    case TagMethod::Salient: return "SALIENT";
  }
  return "?";
}

std::vector<Definition> parse_definitions(std::istream& in, const std::string& source) {
  std::vector<Definition> out;
  std::set<std::pair<std::string, int>> seen;
  for_each_tsv_record(in, source, 4, [&](const TsvRecord& rec) {
    Definition d;
    d.headword = fold_word(rec.at(0));
    if (d.headword.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": empty headword");
    try {
      d.sense_no = std::stoi(rec.at(1));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad sense number '" +
                        rec.at(1) + "'");
    }
    if (d.sense_no <= 0)
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) +
                        ": sense number must be positive");
    d.genus = fold_word(rec.at(2));
    d.text = trim(rec.at(3));
    d.tokens = tokenize(d.text);
    if (d.tokens.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": empty definition text");
    if (!seen.insert({d.headword, d.sense_no}).second)
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": duplicate sense " +
                        d.headword + "#" + std::to_string(d.sense_no));
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<Definition> load_definitions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open monolingual dictionary: " + path);
  return parse_definitions(in, path);
}

std::optional<std::string> extract_genus(const Definition& d, const Stoplist& stop) {
  if (!d.genus.empty()) return d.genus;
  for (const std::string& tok : d.tokens)
    if (!stop.contains(tok)) return tok;
  return std::nullopt;
}

std::vector<TaggedDefinition> tag_seed_by_distance(const std::vector<Definition>& defs,
                                                   const HomogeneousBilingual& bi,
                                                   const WordNetGraph& g, const Stoplist& stop) {
  std::vector<TaggedDefinition> out;
  for (const Definition& d : defs) {
    auto genus = extract_genus(d, stop);
    if (!genus) continue;
    const auto& head_tr = bi.translations(d.headword);
    const auto& genus_tr = bi.translations(*genus);
    if (head_tr.empty() || genus_tr.empty()) continue;

    // globally minimal concept pair over all translation word pairs
    std::optional<Rat> best;
    std::pair<SynsetId, SynsetId> best_pair;
    for (const std::string& th : head_tr) {
      for (const std::string& tg : genus_tr) {
        DistanceResult r = g.conceptual_distance(th, tg);
        if (!r.reachable()) continue;
        if (!best || *r.distance < *best ||
            (*r.distance == *best && r.chosen_pair < best_pair)) {
          best = r.distance;
          best_pair = r.chosen_pair;
        }
      }
    }
    if (!best) continue; // untranslatable into the net or disconnected

    TaggedDefinition t;
    t.def = d;
    t.def.genus = *genus;
    t.tag = g.synset(best_pair.first).semfile; // headword-side synset
    t.score = best->to_double();
    t.method = TagMethod::DistanceSeed;
    out.push_back(std::move(t));
  }
  return out;
}

double SalientLexicon::score(const std::string& word, const std::string& tag) const {
  auto it = scores.find({word, tag});
  return it == scores.end() ? 0.0 : it->second;
}

std::set<std::string> SalientLexicon::tags() const {
  std::set<std::string> out;
  for (const auto& [key, unused] : class_tokens) out.insert(key);
  return out;
}

void SalientLexicon::save(std::ostream& out) const {
  std::ostringstream fmt;
  for (const auto& [key, ar] : scores) {
    fmt.str("");
    fmt.precision(12);
    fmt << ar;
    out << key.first << '\t' << key.second << '\t' << fmt.str() << '\n';
  }
}

SalientLexicon train_salient(const std::vector<TaggedDefinition>& corpus, const Stoplist& stop) {
  SalientLexicon lex;
  for (const TaggedDefinition& t : corpus) {
    for (const std::string& tok : t.def.tokens) {
      if (stop.contains(tok)) continue;
      lex.total_tokens += 1;
      lex.class_tokens[t.tag] += 1;
      lex.word_counts[tok] += 1;
      lex.class_word_counts[{tok, t.tag}] += 1;
    }
  }
  if (lex.total_tokens == 0) return lex;
  for (const auto& [key, count] : lex.class_word_counts) {
    const auto& [word, tag] = key;
    double p_w_sc = static_cast<double>(count) / static_cast<double>(lex.class_tokens.at(tag));
    double p_w = static_cast<double>(lex.word_counts.at(word)) /
                 static_cast<double>(lex.total_tokens);
    double ar = p_w_sc * std::log2(p_w_sc / p_w);
    if (ar > 0.0) lex.scores[{word, tag}] = ar;
  }
  return lex;
}

std::vector<RelevantWord> relevance_ranking(const SalientLexicon& lex, const std::string& tag,
                                            std::size_t limit) {
  std::vector<RelevantWord> out;
  for (const auto& [key, ar] : lex.scores) {
    if (key.second != tag) continue;
    auto freq = lex.class_word_counts.find(key);
    long count = freq == lex.class_word_counts.end() ? 1 : freq->second;
    out.push_back({key.first, ar * static_cast<double>(count)});
  }
  std::sort(out.begin(), out.end(), [](const RelevantWord& a, const RelevantWord& b) {
    if (a.relevance != b.relevance) return a.relevance > b.relevance;
    return a.word < b.word;
  });
  if (limit > 0 && out.size() > limit) out.resize(limit);
  return out;
}

std::vector<TaggedDefinition> label_definitions(const std::vector<Definition>& defs,
                                                const SalientLexicon& lex, const Stoplist& stop) {
  std::vector<TaggedDefinition> out;
  std::set<std::string> all_tags = lex.tags();
  for (const Definition& d : defs) {
    std::map<std::string, double> weight;
    for (const std::string& tok : d.tokens) {
      if (stop.contains(tok)) continue;
      for (const std::string& tag : all_tags) {
        double ar = lex.score(tok, tag);
        if (ar > 0.0) weight[tag] += ar;
      }
    }
    if (weight.empty()) continue; // all-zero: left untagged

    double best = 0.0;
    for (const auto& [tag, w] : weight) best = std::max(best, w);
    std::vector<std::string> top;
    for (const auto& [tag, w] : weight)
      if (w == best) top.push_back(tag);

    TaggedDefinition t;
    t.def = d;
    t.def.genus = extract_genus(d, stop).value_or("");
    t.score = best;
    t.method = TagMethod::Salient;
    t.ambiguous = top.size() > 1;
    if (top.size() == 1) {
      t.tag = top[0];
    } else {
      // tie: larger class token mass wins, then lexicographic tag order
      std::sort(top.begin(), top.end(), [&](const std::string& a, const std::string& b) {
        long ma = lex.class_tokens.count(a) ? lex.class_tokens.at(a) : 0;
        long mb = lex.class_tokens.count(b) ? lex.class_tokens.at(b) : 0;
        if (ma != mb) return ma > mb;
        return a < b;
      });
      t.tag = top[0];
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::set<std::string> select_core_concepts(const std::set<std::string>& words,
                                           const std::map<std::string, long>& genus_freq,
                                           const std::map<std::string, long>& defcorpus_freq,
                                           const std::map<std::string, long>& extcorpus_freq,
                                           const CoreThresholds& t) {
  auto freq = [](const std::map<std::string, long>& m, const std::string& w) {
    auto it = m.find(w);
    return it == m.end() ? 0L : it->second;
  };
  std::set<std::string> kept;
  for (const std::string& w : words) {
    bool by_genus = freq(genus_freq, w) >= t.genus_min;
    bool by_corpora = freq(defcorpus_freq, w) >= t.defcorpus_min &&
                      freq(extcorpus_freq, w) >= t.extcorpus_min;
    if (by_genus || by_corpora) kept.insert(w);
  }
  return kept;
}

std::map<std::string, long> load_frequency_table(const std::string& path) {
  std::map<std::string, long> out;
  for_each_tsv_file(path, 2, [&](const TsvRecord& rec) {
    try {
      out[fold_word(rec.at(0))] = std::stol(rec.at(1));
    } catch (const std::exception&) {
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": bad count");
    }
  });
  return out;
}

} // namespace wnbuild

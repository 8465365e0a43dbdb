#include "wnbuild/bilingual.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/text.hpp"
#include "wnbuild/tsv.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace wnbuild {

void HomogeneousBilingual::add_entry(const DirectedEntry& e) {
  std::string head = fold_word(e.headword);
  for (const std::string& raw : e.translations) {
    std::string tr = fold_word(raw);
    if (tr.empty()) continue;
    // normalize to (target, source) regardless of entry direction
    const std::string& target = e.direction == Direction::TgtToSrc ? head : tr;
    const std::string& source = e.direction == Direction::TgtToSrc ? tr : head;
    map_[target].insert(source);
    if (!e.dictionary_id.empty()) provenance_[{target, source}].insert(e.dictionary_id);
  }
}

HomogeneousBilingual HomogeneousBilingual::merge_directions(
    const std::vector<DirectedEntry>& entries) {
  HomogeneousBilingual bi;
  for (const DirectedEntry& e : entries) bi.add_entry(e);
  return bi;
}

HomogeneousBilingual HomogeneousBilingual::merge(const std::vector<HomogeneousBilingual>& maps) {
  HomogeneousBilingual out;
  for (const HomogeneousBilingual& m : maps) {
    for (const auto& [word, trs] : m.map_) out.map_[word].insert(trs.begin(), trs.end());
    for (const auto& [pair, dicts] : m.provenance_)
      out.provenance_[pair].insert(dicts.begin(), dicts.end());
  }
  return out;
}

bool HomogeneousBilingual::has_word(std::string_view target_word) const {
  return map_.count(fold_word(target_word)) > 0;
}

const std::set<std::string>& HomogeneousBilingual::translations(std::string_view target_word) const {
  static const std::set<std::string> empty;
  auto it = map_.find(fold_word(target_word));
  return it == map_.end() ? empty : it->second;
}

const std::set<std::string>& HomogeneousBilingual::provenance(std::string_view target_word,
                                                              std::string_view translation) const {
  static const std::set<std::string> empty;
  auto it = provenance_.find({fold_word(target_word), fold_word(translation)});
  return it == provenance_.end() ? empty : it->second;
}

std::size_t HomogeneousBilingual::pair_count() const {
  std::size_t n = 0;
  for (const auto& [word, trs] : map_) n += trs.size();
  return n;
}

std::vector<DirectedEntry> HomogeneousBilingual::parse_entries(std::istream& in,
                                                               const std::string& source,
                                                               const std::string& dictionary_id) {
  std::vector<DirectedEntry> out;
  for_each_tsv_record(in, source, 3, [&](const TsvRecord& rec) {
    DirectedEntry e;
    std::string dir = fold_word(rec.at(0));
    if (dir == "st")
      e.direction = Direction::SrcToTgt;
    else if (dir == "ts")
      e.direction = Direction::TgtToSrc;
    else
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) +
                        ": direction must be 'st' or 'ts', got '" + dir + "'");
    e.headword = fold_word(rec.at(1));
    if (e.headword.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) + ": empty headword");
    for (const std::string& t : split(rec.at(2), '|')) {
      std::string w = fold_word(t);
      if (w.empty()) continue;
      if (std::find(e.translations.begin(), e.translations.end(), w) == e.translations.end())
        e.translations.push_back(w);
    }
    if (e.translations.empty())
      throw input_error(rec.source + ":" + std::to_string(rec.line_no) +
                        ": entry '" + e.headword + "' has no translations");
    e.dictionary_id = dictionary_id;
    out.push_back(std::move(e));
  });
  return out;
}

std::vector<DirectedEntry> HomogeneousBilingual::parse_file(const std::string& path,
                                                            const std::string& dictionary_id) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open bilingual file: " + path);
  return parse_entries(in, path, dictionary_id);
}

void HomogeneousBilingual::save(std::ostream& out) const {
  for (const auto& [word, trs] : map_) {
    for (const std::string& tr : trs) {
      out << word << '\t' << tr << '\t';
      auto it = provenance_.find({word, tr});
      if (it != provenance_.end()) {
        bool first = true;
        for (const std::string& d : it->second) {
          if (!first) out << ',';
          out << d;
          first = false;
        }
      }
      out << '\n';
    }
  }
}

HomogeneousBilingual HomogeneousBilingual::load(std::istream& in, const std::string& source) {
  HomogeneousBilingual bi;
  for_each_tsv_record(in, source, 2, [&](const TsvRecord& rec) {
    std::string word = fold_word(rec.at(0));
    std::string tr = fold_word(rec.at(1));
    bi.map_[word].insert(tr);
    if (rec.fields.size() > 2) {
      for (const std::string& d : split(rec.fields[2], ',')) {
        std::string id = trim(d);
        if (!id.empty()) bi.provenance_[{word, tr}].insert(id);
      }
    }
  });
  return bi;
}

HomogeneousBilingual HomogeneousBilingual::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open homogeneous bilingual: " + path);
  return load(in, path);
}

} // namespace wnbuild

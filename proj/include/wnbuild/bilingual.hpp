#ifndef WNBUILD_BILINGUAL_HPP
#define WNBUILD_BILINGUAL_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wnbuild {

// st: headword is a source-language (skeleton) word, translations are
//     target-language words.
// ts: headword is a target-language word, translations are source-language.
enum class Direction { SrcToTgt, TgtToSrc };

struct DirectedEntry {
  std::string headword;
  Direction direction = Direction::TgtToSrc;
  std::vector<std::string> translations; // non-empty, no duplicates
  std::string dictionary_id;
};

// Both dictionary directions mixed into one symmetric map: target word ->
// set of source translations. Translation order is deliberately dropped;
// provenance per pair is kept for reporting.
class HomogeneousBilingual {
public:
  void add_entry(const DirectedEntry& e);

  static HomogeneousBilingual merge_directions(const std::vector<DirectedEntry>& entries);
  static HomogeneousBilingual merge(const std::vector<HomogeneousBilingual>& maps);

  bool has_word(std::string_view target_word) const;
  // Source-language translations of a target word; empty set if absent.
  const std::set<std::string>& translations(std::string_view target_word) const;
  const std::set<std::string>& provenance(std::string_view target_word,
                                          std::string_view translation) const;

  const std::map<std::string, std::set<std::string>>& entries() const { return map_; }
  std::size_t pair_count() const;

  // Bilingual TSV: direction<TAB>headword<TAB>t1|t2|...
  static std::vector<DirectedEntry> parse_entries(std::istream& in, const std::string& source,
                                                  const std::string& dictionary_id);
  static std::vector<DirectedEntry> parse_file(const std::string& path,
                                               const std::string& dictionary_id);

  // Homogeneous artifact: word<TAB>translation<TAB>dict1,dict2
  void save(std::ostream& out) const;
  static HomogeneousBilingual load(std::istream& in, const std::string& source);
  static HomogeneousBilingual load_file(const std::string& path);

private:
  std::map<std::string, std::set<std::string>> map_;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> provenance_;
};

} // namespace wnbuild

#endif

#ifndef WNBUILD_TEXT_HPP
#define WNBUILD_TEXT_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wnbuild {

// Word matching is trim + ASCII case fold, no stemming. Non-ASCII bytes
// pass through untouched, so accented forms compare bytewise.
std::string fold_word(std::string_view raw);

std::string trim(std::string_view s);

// Split on a single-char delimiter; empty fields preserved.
std::vector<std::string> split(std::string_view s, char delim);

// Whitespace tokenizer for definition text: folds case and strips
// surrounding punctuation from every token.
std::vector<std::string> tokenize(std::string_view text);

struct Stoplist {
  std::set<std::string> words;

  bool contains(std::string_view w) const { return words.count(fold_word(w)) > 0; }

  // One token per line, UTF-8, '#' comments.
  static Stoplist load_file(const std::string& path);
  static Stoplist from_words(std::initializer_list<const char*> ws);
};

} // namespace wnbuild

#endif

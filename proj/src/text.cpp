#include "wnbuild/text.hpp"

#include "wnbuild/errors.hpp"

#include <cctype>
#include <fstream>

namespace wnbuild {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string fold_word(std::string_view raw) {
  std::string w = trim(raw);
  for (char& c : w)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

namespace {

bool is_token_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '"': case '\'': case '[': case ']':
      return true;
    default:
      return false;
  }
}

} // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0, n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::size_t b = i, e = j;
      while (b < e && is_token_punct(text[b])) ++b;
      while (e > b && is_token_punct(text[e - 1])) --e;
      if (e > b) out.push_back(fold_word(text.substr(b, e - b)));
    }
    i = j;
  }
  return out;
}

Stoplist Stoplist::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open stoplist: " + path);
  Stoplist sl;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    sl.words.insert(fold_word(w));
  }
  return sl;
}

Stoplist Stoplist::from_words(std::initializer_list<const char*> ws) {
  Stoplist sl;
  for (const char* w : ws) sl.words.insert(fold_word(w));
  return sl;
}

} // namespace wnbuild

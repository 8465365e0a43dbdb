#include "wnbuild/tsv.hpp"

#include "wnbuild/errors.hpp"
#include "wnbuild/text.hpp"

#include <fstream>
#include <istream>

namespace wnbuild {

const std::string& TsvRecord::at(std::size_t i) const {
  if (i >= fields.size())
    throw input_error(source + ":" + std::to_string(line_no) + ": missing column " +
                      std::to_string(i + 1));
  return fields[i];
}

void for_each_tsv_record(std::istream& in, const std::string& source, std::size_t min_fields,
                         const std::function<void(const TsvRecord&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    TsvRecord rec;
    rec.fields = split(line, '\t');
    rec.source = source;
    rec.line_no = line_no;
    if (rec.fields.size() < min_fields)
      throw input_error(source + ":" + std::to_string(line_no) + ": expected at least " +
                        std::to_string(min_fields) + " tab-separated columns, got " +
                        std::to_string(rec.fields.size()));
    fn(rec);
  }
}

void for_each_tsv_file(const std::string& path, std::size_t min_fields,
                       const std::function<void(const TsvRecord&)>& fn) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  for_each_tsv_record(in, path, min_fields, fn);
}

std::string join(const std::vector<std::string>& parts, char delim) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(delim);
    out += parts[i];
  }
  return out;
}

} // namespace wnbuild

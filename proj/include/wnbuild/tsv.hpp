#ifndef WNBUILD_TSV_HPP
#define WNBUILD_TSV_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace wnbuild {

struct TsvRecord {
  std::vector<std::string> fields;
  std::string source; // file name or stream label
  std::size_t line_no = 0;

  const std::string& at(std::size_t i) const; // throws input_error naming the line
};

// Streams tab-separated records, skipping blank lines and '#' comments.
// Parse failures inside the callback should throw input_error; this
// function only enforces the minimum column count.
void for_each_tsv_record(std::istream& in, const std::string& source, std::size_t min_fields,
                         const std::function<void(const TsvRecord&)>& fn);

void for_each_tsv_file(const std::string& path, std::size_t min_fields,
                       const std::function<void(const TsvRecord&)>& fn);

std::string join(const std::vector<std::string>& parts, char delim);

} // namespace wnbuild

#endif

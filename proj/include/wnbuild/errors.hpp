#ifndef WNBUILD_ERRORS_HPP
#define WNBUILD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wnbuild {

// Error categories map onto the CLI exit codes: input/parse -> 1,
// missing stage artifact -> 2, bad configuration -> 3.

struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dependency_error : std::runtime_error {
  explicit dependency_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wnbuild

#endif

#ifndef WNBUILD_FIXTURE_HPP
#define WNBUILD_FIXTURE_HPP

#include <string>

namespace wnbuild {

// Materializes the bundled demo dataset (wordnet skeleton, two bilingual
// dumps, a monolingual dictionary, stoplist, precision and confidence
// tables, gold files and a ready-to-run config.json) into `dir`.
// Returns the path of the written config file.
std::string materialize_fixture(const std::string& dir);

} // namespace wnbuild

#endif

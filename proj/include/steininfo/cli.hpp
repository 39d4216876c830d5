#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace steininfo::cli {

// Runs one command. Exit status 0 on success, 1 on parameter/domain/io
// errors (one-line diagnostic on err), 2 when a check suite finds a
// violated invariant.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Which command exercises each library operation; the mapping is kept
// explicit so coverage can be asserted.
std::vector<std::pair<std::string, std::string>> coverage_map();

}  // namespace steininfo::cli

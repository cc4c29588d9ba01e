#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bistellar::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Runs one command line. Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bistellar::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tough::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Runs one invocation. args excludes the program name. Returns 0 when the
/// predicate holds or the sweep is clean, 1 when it fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tough::cli

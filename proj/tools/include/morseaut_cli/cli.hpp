#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morseaut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitTheoremFailure = 2;

/// Runs one command. `args` excludes the program name. Standard streams are
/// passed in so the tool can be driven from tests.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace morseaut::cli

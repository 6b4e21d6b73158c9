#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p1z::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one command line (args excludes the program name). The JSON envelope
// or CSV goes to `out` unless --out names a file; usage errors and help text
// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace p1z::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace endcohom::cli {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// messages to `err`; "-" inputs are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace endcohom::cli

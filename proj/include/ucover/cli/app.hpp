#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kGrammar =
    "usage: cover {construct|optimize|search|verify|render|reproduce-smooth} [flags]";

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucover::cli

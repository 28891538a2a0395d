#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tess::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs every *.json case file in `dir`; prints one line per case and a
// summary to `out`. Returns kOk when all cases match.
int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace tess::cli

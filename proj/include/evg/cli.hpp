#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evg/evolving_graph.hpp"

namespace evg {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// The three-slice example graph used throughout the docs and tests:
/// 1->2 at t1, 1->3 at t2, 2->3 at t3.
std::vector<EdgeRecord> three_slice_records();

/// Runs the tool. args[0] is the program name. Output is deterministic for
/// identical arguments except for bench timings.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evg

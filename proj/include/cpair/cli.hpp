#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "cpair/geometry.hpp"
#include "cpair/solvers.hpp"

namespace cpair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvalid = 3;

// Each command writes its report to `out` and throws on bad input:
// ParseError for malformed files, std::invalid_argument (including
// InsufficientPoints and InvalidPartition) for bad arguments.

/// Prints "i j distance dc_count".
void cmd_solve(const PointSet& set, Algorithm algorithm, std::optional<std::int64_t> a,
               std::ostream& out);

/// CSV "a,dc_count,distance".
void cmd_sweep(std::int64_t n, std::uint64_t seed, std::int64_t a_lo, std::int64_t a_hi,
               std::ostream& out);

/// CSV "a,wins", one row per a in [2, n].
void cmd_trials(std::int64_t n, std::int64_t trials, std::uint64_t seed, std::int64_t jobs,
                std::ostream& out);

/// CSV "a,strip_cost,local_cost,total".
void cmd_model(std::int64_t n, std::int64_t a_lo, std::int64_t a_hi, std::ostream& out);

/// Point file on `out`, one "x y" line per point.
void cmd_gen(std::int64_t n, std::uint64_t seed, std::ostream& out);

/// Full command line entry point; args excludes the program name.
/// Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cpair::cli

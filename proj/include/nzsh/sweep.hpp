#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nzsh/construct.hpp"

namespace nzsh {

struct SweepSpec {
    int v_min = 3, v_max = 10;
    int parity = 0;          // 0 any, 1 odd, 2 even
    int t_fixed = 0;         // 0 = every divisor of v
    int64_t nk_max = 60;
    bool square_only = false;
    bool totally_filled = false;
    uint64_t seed = 0;
    bool timings = false;
};

struct SweepRow {
    std::string group;
    int t = 1;
    int64_t lambda = 0;
    int m = 0, n = 0, h = 0, k = 0;
    std::string outcome; // "infeasible" | "built:<tag>" | "open"
    bool verified = false;
    int64_t wall_ms = 0;
};

// One construct() per parameter tuple over cyclic groups, tuple-seeded from
// the master seed; rows come back in enumeration order regardless of the
// thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timings);

} // namespace nzsh

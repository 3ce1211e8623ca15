#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nzsh/group.hpp"
#include "nzsh/rational.hpp"
#include "nzsh/skeleton.hpp"

namespace nzsh {

struct BoundReport {
    Rational ex_rows;  // expected number of rows hitting their target
    Rational ex_cols;
    Rational total;
    bool feasible = false; // total < 1
};

// lambda * (m/(mh-h+1) + n/(nk-k+1)), exact.
BoundReport expected_zero_bound(int m, int n, int h, int k, int64_t lambda);

// Per-line union bound for one tile: a line with c filled cells contributes
// 1/(|S|-c+1). Strictly below 1 for every certified family in range.
BoundReport tile_bound(const Tile& tile);

struct FillRequest {
    Tile tile;
    std::vector<Elem> s_list;            // duplicate-free, |S| = |tile|
    std::map<int, Elem> forbidden_rows;  // row -> target sum (from the tile's run start)
    std::map<int, Elem> forbidden_cols;  // col -> target sum
};

struct TileFill {
    std::vector<Elem> values; // aligned with tile.cells (sorted order)
};

// True iff every constrained line's ordered run sum avoids its target.
bool fill_satisfies(const FiniteGroup& g, const FillRequest& req, const std::vector<Elem>& values);

// Seeded rejection sampling (64*|S| shuffles), then exhaustive backtracking
// in deterministic order. Throws NotNice when no assignment exists, which is
// unreachable for certified tiles.
TileFill fill_tile(const FiniteGroup& g, const FillRequest& req, uint64_t seed);

} // namespace nzsh

#pragma once

// Brute-force reference implementations used to validate the library. These
// deliberately avoid the library's search machinery: plain enumeration over
// skeletons, leaf-checked value assignments, and full permutation scans.

#include <optional>
#include <vector>

#include "nzsh/pfarray.hpp"
#include "nzsh/tiles.hpp"

namespace nzsh::oracle {

// every 0/1 skeleton with h filled cells per row and k per column
std::vector<std::vector<std::vector<bool>>> all_skeletons(int m, int n, int h, int k);

// does any array with these parameters exist? exhaustive over skeletons and
// entry assignments; intended for v <= 5 and nk <= 6
bool exists_array(const FiniteGroup& g, const Subgroup& j, const Params& p);

// all |S|! assignments, checked against the tile's run orders directly
bool fill_exists(const FiniteGroup& g, const FillRequest& req);

// Def-style niceness: for the given S, every target vector over the tile's
// nonempty lines admits an assignment. Exhaustive over targets.
bool nice_for(const FiniteGroup& g, const Tile& tile, const std::vector<Elem>& s);

// ordered run sum of `values` (aligned with tile.cells) along a line
Elem run_sum(const FiniteGroup& g, const Tile& tile, const std::vector<Elem>& values, bool is_row,
             int line);

} // namespace nzsh::oracle

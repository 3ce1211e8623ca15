#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nzsh/pfarray.hpp"

namespace nzsh {

struct CellSet {
    std::vector<Cell> cells; // sorted row-major, no duplicates
    int m = 0, n = 0;
    bool contains(const Cell& c) const;
};

inline int wrap_index(int x, int mod) { return (x - 1) % mod + ((x - 1) % mod < 0 ? mod : 0) + 1; }

enum class TileFamily { Rect3b, Rect2b, Stair32, DStair21, DStair31, Diag3b, Diag4b, Diag5b, FullQ };

std::string family_name(TileFamily f);
std::optional<TileFamily> family_from_name(const std::string& name);

// A cyclically contiguous tile: every nonempty row is one cyclic column run
// starting at row_start[r], every nonempty column one cyclic row run starting
// at col_start[c]. Rectangular families may stand upright (transposed), which
// swaps the roles of the two dimensions but changes nothing else.
struct Tile {
    std::vector<Cell> cells; // sorted
    TileFamily family = TileFamily::Rect3b;
    int b = 0;
    bool transposed = false;
    int m = 0, n = 0;                // ambient dimensions
    std::map<int, int> row_start;    // row -> beta_r
    std::map<int, int> col_start;    // col -> gamma_c
    int size() const { return static_cast<int>(cells.size()); }
    std::vector<Cell> row_run(int r) const; // cells of row r from beta_r in cyclic order
    std::vector<Cell> col_run(int c) const;
};

struct TilePlan {
    std::vector<Tile> tiles; // ordered row-major by anchor cell
    CellSet skeleton;
    int max_tile_size() const;
};

// Cell layout with exactly h filled cells per row and k per column:
// the staircase of k x h blocks when nk = lcm(m,n), the doubled staircase
// when nk = 2 lcm(m,n), the union of r diagonal cosets of <(1,1)> otherwise.
CellSet coset_skeleton(int m, int n, int h, int k);

struct V3Skeleton {
    CellSet b;
    CellSet h1; // rows i*k, present when 3 | k
    CellSet h2; // columns j*h, present when 3 | h
};

// Block-diagonal layout plus the two sign-flip cell sets driving the order-3
// construction. Requires m >= k and n >= h.
V3Skeleton v3_skeleton(int m, int n, int h, int k);

// Cyclically k-diagonal n x n skeleton: column i holds rows i..i+k-1 (mod n).
CellSet square_diagonal_skeleton(int n, int k);

// Builds and certifies one tile of the given family at a 1-based anchor,
// wrapping modulo the ambient dimensions. Throws FamilyBoundViolation when
// the family's b-range or ambient conditions are violated.
Tile tile_catalog(TileFamily family, int b, Cell anchor, int m, int n, bool transposed = false);

// Re-derives line runs and checks the contiguity and family conditions;
// used both by tile_catalog and by the plan validator.
void certify_tile(Tile& tile);

// Partition of the skeleton for (m,n,h,k) into certified tiles, following
// the regime the parameters fall into. The caller is responsible for
// canonical orientation: m <= n for totally filled, h < k for the staircase
// regimes, n >= m for the diagonal-band regime. Throws NoPlan outside every
// covered regime.
TilePlan plan_tiling(int m, int n, int h, int k);

// disjointness, coverage, certification, max size <= 21
void verify_plan(const TilePlan& plan);

// Deterministic decomposition of `total` into parts drawn from `allowed`:
// equal parts with the largest valid size when possible, otherwise greedy
// largest-part-while-the-remainder-decomposes. nullopt when impossible.
std::optional<std::vector<int>> decompose_into(int total, const std::vector<int>& allowed);

} // namespace nzsh

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nzsh/group.hpp"

namespace nzsh {

// 1-based cell coordinates, matching the row/column conventions used
// throughout the constructions.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

// m x n partially filled array over a group. Dense storage, -1 = empty.
class PFArray {
public:
    PFArray() = default;
    PFArray(int m, int n, GroupPtr group);

    int m() const { return m_; }
    int n() const { return n_; }
    const GroupPtr& group() const { return group_; }

    bool filled(int r, int c) const { return at(r, c) >= 0; }
    Elem get(int r, int c) const { return at(r, c); }
    void set(int r, int c, Elem x);
    void clear(int r, int c) { at(r, c) = -1; }

    int fill_count() const;
    std::vector<Cell> skeleton() const;           // row-major
    std::vector<Cell> row_cells(int r) const;     // filled cells, left to right
    std::vector<Cell> col_cells(int c) const;     // filled cells, top to bottom
    std::vector<Elem> entries() const;            // row-major values

    PFArray transposed() const;

private:
    Elem& at(int r, int c);
    Elem at(int r, int c) const;

    int m_ = 0, n_ = 0;
    GroupPtr group_;
    std::vector<Elem> cells_; // row-major, -1 empty
};

struct Params {
    int m = 0, n = 0, h = 0, k = 0;
    int64_t lambda = 0;
    int t = 1;
    Params transposed() const { return Params{n, m, k, h, lambda, t}; }
};

// Ordered sum of a row (left to right) or column (top to bottom); empty
// lines sum to zero. Order matters for non-abelian groups.
Elem row_sum(const PFArray& a, int r);
Elem col_sum(const PFArray& a, int c);

// For x outside J: occurrences of x plus occurrences of -x across the filled
// cells. For x in J: the raw occurrence count (zero on any valid array).
std::vector<int64_t> coverage_multiset(const PFArray& a, const Subgroup& j);

struct VerifyReport {
    bool row_counts_ok = true;
    bool col_counts_ok = true;
    bool coverage_ok = true;
    bool nonzero_sums_ok = true;
    struct Failure {
        std::string kind;  // "row_count" | "col_count" | "coverage" | "row_sum" | "col_sum" | "params"
        int64_t index = 0; // line index or element index
        std::string detail;
    };
    std::vector<Failure> failures;
    bool pass() const { return row_counts_ok && col_counts_ok && coverage_ok && nonzero_sums_ok; }
};

VerifyReport verify_array(const PFArray& a, const Subgroup& j, const Params& p);

struct DiagonalProfile {
    enum class Kind { KDiagonal, CyclicallyKDiagonal, Other };
    Kind kind = Kind::Other;
    int k = 0;
};

// Classifies a square skeleton against the wrapped diagonals
// D_i = {(i,1),(i+1,2),...,(i-1,n)}.
DiagonalProfile diagonal_profile(const PFArray& a);

} // namespace nzsh

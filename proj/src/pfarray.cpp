#include "nzsh/pfarray.hpp"

#include <algorithm>
#include <cassert>

namespace nzsh {

PFArray::PFArray(int m, int n, GroupPtr group)
    : m_(m), n_(n), group_(std::move(group)), cells_(static_cast<size_t>(m) * static_cast<size_t>(n), -1) {
    if (m < 1 || n < 1) throw bad_params("array dimensions must be positive");
}

Elem& PFArray::at(int r, int c) {
    assert(r >= 1 && r <= m_ && c >= 1 && c <= n_);
    return cells_[static_cast<size_t>(r - 1) * static_cast<size_t>(n_) + static_cast<size_t>(c - 1)];
}

Elem PFArray::at(int r, int c) const {
    assert(r >= 1 && r <= m_ && c >= 1 && c <= n_);
    return cells_[static_cast<size_t>(r - 1) * static_cast<size_t>(n_) + static_cast<size_t>(c - 1)];
}

void PFArray::set(int r, int c, Elem x) {
    if (x < 0 || x >= group_->order()) throw bad_params("element index out of range");
    at(r, c) = x;
}

int PFArray::fill_count() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](Elem e) { return e >= 0; }));
}

std::vector<Cell> PFArray::skeleton() const {
    std::vector<Cell> out;
    for (int r = 1; r <= m_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (filled(r, c)) out.push_back({r, c});
    return out;
}

std::vector<Cell> PFArray::row_cells(int r) const {
    std::vector<Cell> out;
    for (int c = 1; c <= n_; ++c)
        if (filled(r, c)) out.push_back({r, c});
    return out;
}

std::vector<Cell> PFArray::col_cells(int c) const {
    std::vector<Cell> out;
    for (int r = 1; r <= m_; ++r)
        if (filled(r, c)) out.push_back({r, c});
    return out;
}

std::vector<Elem> PFArray::entries() const {
    std::vector<Elem> out;
    for (Elem e : cells_)
        if (e >= 0) out.push_back(e);
    return out;
}

PFArray PFArray::transposed() const {
    PFArray t(n_, m_, group_);
    for (int r = 1; r <= m_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (filled(r, c)) t.set(c, r, get(r, c));
    return t;
}

Elem row_sum(const PFArray& a, int r) {
    const FiniteGroup& g = *a.group();
    Elem s = g.zero();
    for (int c = 1; c <= a.n(); ++c)
        if (a.filled(r, c)) s = g.add(s, a.get(r, c));
    return s;
}

Elem col_sum(const PFArray& a, int c) {
    const FiniteGroup& g = *a.group();
    Elem s = g.zero();
    for (int r = 1; r <= a.m(); ++r)
        if (a.filled(r, c)) s = g.add(s, a.get(r, c));
    return s;
}

std::vector<int64_t> coverage_multiset(const PFArray& a, const Subgroup& j) {
    const FiniteGroup& g = *a.group();
    std::vector<int64_t> occ(static_cast<size_t>(g.order()), 0);
    for (Elem e : a.entries()) occ[static_cast<size_t>(e)]++;
    std::vector<int64_t> cov(static_cast<size_t>(g.order()), 0);
    for (Elem x = 0; x < g.order(); ++x) {
        if (j.contains(x))
            cov[static_cast<size_t>(x)] = occ[static_cast<size_t>(x)];
        else
            cov[static_cast<size_t>(x)] = occ[static_cast<size_t>(x)] + occ[static_cast<size_t>(g.neg(x))];
    }
    return cov;
}

VerifyReport verify_array(const PFArray& a, const Subgroup& j, const Params& p) {
    VerifyReport rep;
    auto fail = [&rep](const std::string& kind, int64_t index, const std::string& detail) {
        rep.failures.push_back({kind, index, detail});
    };
    if (p.m != a.m() || p.n != a.n()) {
        rep.row_counts_ok = rep.col_counts_ok = false;
        fail("params", 0, "declared dimensions do not match the array");
        return rep;
    }

    for (int r = 1; r <= a.m(); ++r) {
        int cnt = static_cast<int>(a.row_cells(r).size());
        if (cnt != p.h) {
            rep.row_counts_ok = false;
            fail("row_count", r, "row has " + std::to_string(cnt) + " filled cells, expected " + std::to_string(p.h));
        }
    }
    for (int c = 1; c <= a.n(); ++c) {
        int cnt = static_cast<int>(a.col_cells(c).size());
        if (cnt != p.k) {
            rep.col_counts_ok = false;
            fail("col_count", c, "column has " + std::to_string(cnt) + " filled cells, expected " + std::to_string(p.k));
        }
    }

    const FiniteGroup& g = *a.group();
    auto cov = coverage_multiset(a, j);
    for (Elem x = 0; x < g.order(); ++x) {
        int64_t want = j.contains(x) ? 0 : p.lambda;
        if (cov[static_cast<size_t>(x)] != want) {
            rep.coverage_ok = false;
            fail("coverage", x,
                 "element covered " + std::to_string(cov[static_cast<size_t>(x)]) + " times, expected " + std::to_string(want));
        }
    }

    for (int r = 1; r <= a.m(); ++r) {
        if (a.row_cells(r).empty()) continue;
        if (row_sum(a, r) == g.zero()) {
            rep.nonzero_sums_ok = false;
            fail("row_sum", r, "row sums to zero");
        }
    }
    for (int c = 1; c <= a.n(); ++c) {
        if (a.col_cells(c).empty()) continue;
        if (col_sum(a, c) == g.zero()) {
            rep.nonzero_sums_ok = false;
            fail("col_sum", c, "column sums to zero");
        }
    }
    return rep;
}

DiagonalProfile diagonal_profile(const PFArray& a) {
    if (a.m() != a.n()) throw not_square("diagonal profile needs a square array");
    int n = a.n();
    // D_i holds cell (i+c-1 mod n, c) for c = 1..n (residues in 1..n).
    std::vector<char> full(static_cast<size_t>(n + 1), 1);
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c <= n; ++c) {
            int r = (i + c - 2) % n + 1;
            if (!a.filled(r, c)) { full[static_cast<size_t>(i)] = 0; break; }
        }
    std::vector<int> diags;
    for (int i = 1; i <= n; ++i)
        if (full[static_cast<size_t>(i)]) diags.push_back(i);
    // the skeleton must be exactly the union of those diagonals
    int64_t expect = static_cast<int64_t>(diags.size()) * n;
    if (expect != a.fill_count()) return {DiagonalProfile::Kind::Other, 0};

    int k = static_cast<int>(diags.size());
    if (k == 0) return {DiagonalProfile::Kind::Other, 0};
    if (k == n) return {DiagonalProfile::Kind::CyclicallyKDiagonal, k};
    // consecutive mod n <=> the complement residues form gaps; check there is
    // a single cyclic run
    std::vector<char> present(static_cast<size_t>(n + 1), 0);
    for (int d : diags) present[static_cast<size_t>(d)] = 1;
    int runs = 0;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        if (present[static_cast<size_t>(i)] && !present[static_cast<size_t>(prev)]) ++runs;
    }
    if (runs == 1) return {DiagonalProfile::Kind::CyclicallyKDiagonal, k};
    return {DiagonalProfile::Kind::KDiagonal, k};
}

} // namespace nzsh

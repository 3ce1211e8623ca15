#include "nzsh/feasibility.hpp"

#include <numeric>

#include "nzsh/tiles.hpp"

namespace nzsh {

int coset_ratio(const Params& p) {
    int64_t L = std::lcm(static_cast<int64_t>(p.m), static_cast<int64_t>(p.n));
    return static_cast<int>(static_cast<int64_t>(p.n) * p.k / L);
}

bool complement_has_involution(const FiniteGroup& g, const Subgroup& j) {
    for (Elem x : g.involution_set())
        if (!j.contains(x)) return true;
    return false;
}

bool is_elementary_two_group(const FiniteGroup& g) {
    return g.abelian() && static_cast<int>(g.involution_set().size()) == g.order() - 1;
}

std::optional<std::string> necessary_failure(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    int v = g.order();
    int t = j.t();
    if (p.m < 1 || p.n < 1 || p.h < 1 || p.k < 1) return "dimensions and fill counts must be positive";
    if (p.h > p.n) return "h exceeds the number of columns";
    if (p.k > p.m) return "k exceeds the number of rows";
    if (p.t != t) return "declared t does not match the subgroup order";
    if (v % t != 0) return "t does not divide v";
    int64_t nk = static_cast<int64_t>(p.n) * p.k;
    if (nk != static_cast<int64_t>(p.m) * p.h) return "nk != mh";
    if (p.lambda < 1) return "lambda must be positive";
    if (p.lambda * (v - t) != 2 * nk) return "v != 2nk/lambda + t";
    if (p.lambda % 2 != 0 && complement_has_involution(g, j))
        return "G\\J contains an involution, so lambda must be even";
    if (v == 2 && (p.h % 2 == 0 || p.k % 2 == 0)) return "over the order-2 group h*k must be odd";
    if ((p.m == 1 || p.n == 1) && is_elementary_two_group(g) && v > 2) {
        // single-row arrays over elementary 2-groups: the complement must sum
        // to a non-identity element, which pins t = 2 and lambda/2 odd
        if (t != 2) return "single-row arrays over elementary 2-groups need t = 2";
        if ((p.lambda / 2) % 2 == 0) return "single-row arrays over elementary 2-groups need lambda/2 odd";
    }
    return std::nullopt;
}

namespace {

bool r_z2(const FiniteGroup& g, const Subgroup&, const Params&) { return g.order() == 2; }
bool r_one_row(const FiniteGroup&, const Subgroup&, const Params& p) { return p.m == 1 || p.n == 1; }
bool r_v3(const FiniteGroup& g, const Subgroup&, const Params&) { return g.order() == 3; }
bool r_odd_square(const FiniteGroup& g, const Subgroup&, const Params& p) {
    return g.abelian() && g.order() % 2 == 1 && p.m == p.n;
}
bool r_h1(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    if (p.h != 1 && p.k != 1) return false;
    int vt = g.order() - j.t();
    return std::max(p.h, p.k) == 1 || vt >= 4;
}
bool r_nk2(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    return p.m == p.n && p.h == 2 && p.k == 2 && g.order() - j.t() >= 4;
}
bool r_total(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    return p.h == p.n && p.k == p.m && g.order() - j.t() >= 15;
}
bool r_r1(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    return coset_ratio(p) == 1 && g.order() - j.t() >= 18;
}
bool r_r2(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    return coset_ratio(p) == 2 && g.order() - j.t() >= 20;
}
bool r_r3(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    return coset_ratio(p) >= 3 && g.order() - j.t() >= 21;
}
bool r_bound(const FiniteGroup&, const Subgroup&, const Params& p) {
    return expected_zero_bound(p.m, p.n, p.h, p.k, p.lambda).feasible;
}

} // namespace

const std::vector<Regime>& regime_table() {
    static const std::vector<Regime> table = {
        {"z2_all_ones", "order-2 group, all cells filled with the involution", r_z2},
        {"one_row", "single row or column", r_one_row},
        {"v3_direct", "order-3 group, block layout with sign flips", r_v3},
        {"odd_abelian_square", "square array over an odd abelian group", r_odd_square},
        {"h1", "one filled cell per row (or column)", r_h1},
        {"nk2", "square with two filled cells per line", r_nk2},
        {"tiling_total", "totally filled, tiled by rectangle bands (v-t >= 15)", r_total},
        {"tiling_r1", "staircase layout, tiled (v-t >= 18)", r_r1},
        {"tiling_r2", "doubled staircase layout, tiled (v-t >= 20)", r_r2},
        {"tiling_r3", "diagonal coset bands, tiled (v-t >= 21)", r_r3},
        {"random_bound", "uniform placement, expected-value bound below one", r_bound},
    };
    return table;
}

Feasibility feasibility(const FiniteGroup& g, const Subgroup& j, const Params& p) {
    if (auto why = necessary_failure(g, j, p)) return {Feasibility::Kind::Infeasible, *why};
    for (const Regime& r : regime_table())
        if (r.applies(g, j, p)) return {Feasibility::Kind::FeasibleBy, r.tag};
    return {Feasibility::Kind::Open, "no guaranteed construction covers these parameters"};
}

} // namespace nzsh

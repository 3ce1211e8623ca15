#include "nzsh/construct.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "nzsh/rng.hpp"

namespace nzsh {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw regime_violation(msg);
}

void require_necessary(const BuildRequest& req) {
    if (auto why = necessary_failure(*req.group, req.j, req.params)) throw regime_violation(*why);
}

PFArray fill_skeleton_with(const CellSet& b, GroupPtr g, Elem value) {
    PFArray a(b.m, b.n, std::move(g));
    for (const Cell& c : b.cells) a.set(c.row, c.col, value);
    return a;
}

} // namespace

PFArray construct_z2_all_ones(const BuildRequest& req) {
    const auto& p = req.params;
    require_necessary(req);
    require(req.group->order() == 2 && req.j.t() == 1, "needs the order-2 group with trivial subgroup");
    require(p.h % 2 == 1 && p.k % 2 == 1, "needs h*k odd");
    CellSet b = coset_skeleton(p.m, p.n, p.h, p.k);
    return fill_skeleton_with(b, req.group, 1);
}

PFArray construct_one_row(const BuildRequest& req) {
    const auto& p = req.params;
    if (p.n == 1 && p.m > 1) {
        BuildRequest tr{req.group, req.j, p.transposed(), req.seed};
        return construct_one_row(tr).transposed();
    }
    require_necessary(req);
    require(p.m == 1, "needs a single-row array");
    const FiniteGroup& g = *req.group;
    int vt = g.order() - req.j.t();
    PFArray a(1, p.n, req.group);

    if (is_elementary_two_group(g)) {
        // every complement element is its own negative, so the row content is
        // forced; the parity conditions checked upstream make the sum nonzero
        auto comp = complement_of(g, req.j);
        for (int i = 0; i < p.n; ++i) a.set(1, i + 1, comp[static_cast<size_t>(i % vt)]);
        require(row_sum(a, 1) != g.zero(), "row sums to zero");
        return a;
    }

    bool split = p.lambda % 2 != 0;
    std::vector<Elem> prefix;
    bool swap_repair = false;
    if (!g.abelian()) {
        if (auto pair = find_noncommuting_pair(g, req.j)) {
            prefix = {pair->first, pair->second};
            swap_repair = true;
        }
    }
    if (prefix.empty()) {
        auto x = find_noninvolution(g, req.j);
        require(x.has_value(), "no usable leading element");
        prefix = {*x};
    }
    auto ord = ordered_complement(g, req.j, {split, false}, prefix);
    auto om = omega(g, req.j, p.lambda, ord);
    require(static_cast<int64_t>(om.layout.size()) == p.n, "layout length mismatch");
    for (int i = 0; i < p.n; ++i) a.set(1, i + 1, om.layout[static_cast<size_t>(i)]);

    if (row_sum(a, 1) == g.zero()) {
        if (swap_repair) {
            Elem x = a.get(1, 1), y = a.get(1, 2);
            a.set(1, 1, y);
            a.set(1, 2, x);
        } else {
            a.set(1, 1, g.neg(a.get(1, 1)));
        }
    }
    require(row_sum(a, 1) != g.zero(), "row sums to zero after repair");
    return a;
}

PFArray construct_v3(const BuildRequest& req) {
    const auto& p = req.params;
    require_necessary(req);
    require(req.group->order() == 3 && req.j.t() == 1, "needs the order-3 group with trivial subgroup");
    const FiniteGroup& g = *req.group;
    const Elem one = 1, minus_one = g.neg(1);

    V3Skeleton sk = v3_skeleton(p.m, p.n, p.h, p.k);
    PFArray a = fill_skeleton_with(sk.b, req.group, one);
    if (p.k % 3 == 0) {
        for (const Cell& c : sk.h1.cells) a.set(c.row, c.col, minus_one);
        // each column must meet the flipped rows in 1 or 2 cells
        std::vector<int> cnt(static_cast<size_t>(p.n + 1), 0);
        for (const Cell& c : sk.h1.cells) cnt[static_cast<size_t>(c.col)]++;
        for (int c = 1; c <= p.n; ++c)
            if (cnt[static_cast<size_t>(c)] < 1 || cnt[static_cast<size_t>(c)] > 2)
                throw bad_params("column meets the flip rows " + std::to_string(cnt[static_cast<size_t>(c)]) + " times");
    }
    if (p.h % 3 == 0) {
        std::vector<int> cnt(static_cast<size_t>(p.m + 1), 0);
        for (const Cell& c : sk.h2.cells) {
            a.set(c.row, c.col, a.get(c.row, c.col) == one ? minus_one : one);
            cnt[static_cast<size_t>(c.row)]++;
        }
        for (int r = 1; r <= p.m; ++r)
            if (cnt[static_cast<size_t>(r)] < 1 || cnt[static_cast<size_t>(r)] > 2)
                throw bad_params("row meets the flip columns " + std::to_string(cnt[static_cast<size_t>(r)]) + " times");
    }
    return a;
}

PFArray construct_square_odd_abelian(const BuildRequest& req) {
    const auto& p = req.params;
    require_necessary(req);
    const FiniteGroup& g = *req.group;
    require(g.abelian() && g.order() % 2 == 1 && p.m == p.n, "needs a square array over an odd abelian group");
    if (g.order() == 3) return construct_v3(req);
    int n = p.n, k = p.k;
    int vt = g.order() - req.j.t();
    require(vt >= 4, "needs v - t >= 4");
    int hs = vt / 2;

    auto ord = ordered_complement(g, req.j, {true, false});
    std::vector<Elem> half(ord.sequence.begin(), ord.sequence.begin() + hs);

    // element supply: lambda copies of the half list
    std::vector<Elem> supply;
    for (int64_t c = 0; c < p.lambda; ++c) supply.insert(supply.end(), half.begin(), half.end());

    CellSet b = square_diagonal_skeleton(n, k);
    PFArray a(n, n, req.group);

    if (k == 1) {
        for (int i = 1; i <= n; ++i) a.set(i, i, supply[static_cast<size_t>(i - 1)]);
        return a;
    }

    std::vector<Elem> xs(static_cast<size_t>(n + 1)), ys(static_cast<size_t>(n + 1));
    std::vector<int64_t> used(static_cast<size_t>(g.order()), 0);
    for (int i = 1; i <= n; ++i) {
        ys[static_cast<size_t>(i)] = half[static_cast<size_t>((2 * i - 1) % hs)];
        xs[static_cast<size_t>(i)] = half[static_cast<size_t>((2 * i) % hs)];
        used[static_cast<size_t>(ys[static_cast<size_t>(i)])]++;
        used[static_cast<size_t>(xs[static_cast<size_t>(i)])]++;
    }
    for (int i = 1; i <= n; ++i) {
        a.set(i, i, ys[static_cast<size_t>(i)]);
        a.set(wrap_index(i + 1, n), i, xs[static_cast<size_t>(i)]);
    }
    // remaining supply onto the remaining cells, list order, row-major
    std::vector<Elem> rest;
    for (Elem e : supply) {
        if (used[static_cast<size_t>(e)] > 0) { used[static_cast<size_t>(e)]--; continue; }
        rest.push_back(e);
    }
    size_t next = 0;
    for (const Cell& c : b.cells)
        if (!a.filled(c.row, c.col)) {
            require(next < rest.size(), "element supply exhausted");
            a.set(c.row, c.col, rest[next++]);
        }
    require(next == rest.size(), "element supply left over");

    // per column pick the sign of x_i so that the sum avoids zero whichever
    // sign y_i ends up with
    for (int i = 1; i <= n; ++i) {
        Elem x = xs[static_cast<size_t>(i)];
        Elem y = ys[static_cast<size_t>(i)];
        Elem base = g.zero();
        for (int s = 0; s < k; ++s) {
            int r = wrap_index(i + s, n);
            if (r == i || r == wrap_index(i + 1, n)) continue;
            base = g.add(base, a.get(r, i));
        }
        auto works = [&](Elem xx) {
            Elem with_y = g.add(g.add(base, xx), y);
            Elem with_neg_y = g.add(g.add(base, xx), g.neg(y));
            return with_y != g.zero() && with_neg_y != g.zero();
        };
        if (works(x)) continue;
        require(works(g.neg(x)), "neither sign of x keeps the column nonzero");
        a.set(wrap_index(i + 1, n), i, g.neg(x));
    }
    // flip y_i in every zero-sum row
    for (int r = 1; r <= n; ++r)
        if (row_sum(a, r) == g.zero()) a.set(r, r, g.neg(a.get(r, r)));
    return a;
}

PFArray construct_h1(const BuildRequest& req) {
    const auto& p = req.params;
    if (p.k == 1 && p.h > 1) {
        BuildRequest tr{req.group, req.j, p.transposed(), req.seed};
        return construct_h1(tr).transposed();
    }
    require_necessary(req);
    require(p.h == 1, "needs one filled cell per row");
    const FiniteGroup& g = *req.group;
    int m = p.m, n = p.n, k = p.k;
    require(m == n * k, "m must equal nk when h = 1");

    bool split = p.lambda % 2 != 0;
    OrderedComplement ord = k >= 2 ? ordered_complement(g, req.j, {split, true})
                                   : ordered_complement(g, req.j, {split, false});
    auto om = omega(g, req.j, p.lambda, ord);
    require(static_cast<int64_t>(om.layout.size()) == m, "layout length mismatch");

    PFArray a(m, n, req.group);
    for (int r = 1; r <= m; ++r) a.set(r, (r - 1) / k + 1, om.layout[static_cast<size_t>(r - 1)]);
    if (k <= 2) {
        for (int c = 1; c <= n; ++c) require(col_sum(a, c) != g.zero(), "column sums to zero");
        return a;
    }

    // left-to-right repair: a zero column swaps its last element with the
    // first of the next column; if that zeroes the next column, rotate the
    // three boundary elements instead
    for (int c = 1; c <= n; ++c) {
        if (col_sum(a, c) != g.zero()) continue;
        int cn = c % n + 1;
        int last_r = c * k;                    // last cell of column c
        int first_r = (cn - 1) * k + 1;        // first cell of column cn
        int second_r = first_r + 1;
        Elem va = a.get(last_r, c), vb = a.get(first_r, cn), vc = a.get(second_r, cn);
        require(va != vb && vb != vc && va != vc, "boundary elements collide");
        a.set(last_r, c, vb);
        a.set(first_r, cn, va);
        if (col_sum(a, cn) == g.zero()) {
            a.set(last_r, c, vc);
            a.set(second_r, cn, vb);
        }
        require(col_sum(a, c) != g.zero() && col_sum(a, cn) != g.zero(), "repair failed");
    }
    for (int c = 1; c <= n; ++c) require(col_sum(a, c) != g.zero(), "column sums to zero after repairs");
    return a;
}

PFArray construct_nk2(const BuildRequest& req) {
    const auto& p = req.params;
    require_necessary(req);
    const FiniteGroup& g = *req.group;
    int vt = g.order() - req.j.t();
    require(p.m == p.n && p.h == 2 && p.k == 2 && vt >= 4, "needs a square with two cells per line and v-t >= 4");
    int n = p.n;
    PFArray a(n, n, req.group);

    if (p.lambda % 2 == 0) {
        auto ord = ordered_complement(g, req.j, {false, true});
        for (int i = 1; i <= n; ++i) {
            Elem first = ord.sequence[static_cast<size_t>((2 * i - 2) % vt)];
            Elem second = ord.sequence[static_cast<size_t>((2 * i - 1) % vt)];
            a.set(i, i, first);
            a.set(i, wrap_index(i + 1, n), second);
        }
    } else {
        auto ord = ordered_complement(g, req.j, {true, false});
        int hs = vt / 2;
        for (int i = 1; i <= n; ++i) {
            a.set(i, i, ord.sequence[static_cast<size_t>((2 * i - 2) % hs)]);
            a.set(i, wrap_index(i + 1, n), ord.sequence[static_cast<size_t>((2 * i - 1) % hs)]);
        }
    }
    return a;
}

FillRequest forbidden_targets(const PFArray& partial, const CellSet& skeleton, const Tile& tile,
                              std::vector<Elem> s_list) {
    const FiniteGroup& g = *partial.group();
    FillRequest req;
    req.tile = tile;
    req.s_list = std::move(s_list);

    auto walk_line = [&](bool is_row, int line) -> std::optional<Elem> {
        // cells of the skeleton on this line outside the tile, ordered
        // cyclically from just past the tile's run
        auto run = is_row ? tile.row_run(line) : tile.col_run(line);
        int mod = is_row ? tile.n : tile.m;
        int start = is_row ? tile.row_start.at(line) : tile.col_start.at(line);
        int len = static_cast<int>(run.size());
        Elem sum = g.zero();
        bool any_outside = false;
        for (int off = len; off < mod; ++off) {
            int pos = wrap_index(start + off, mod);
            Cell c = is_row ? Cell{line, pos} : Cell{pos, line};
            if (!skeleton.contains(c)) continue;
            if (std::binary_search(tile.cells.begin(), tile.cells.end(), c))
                throw plan_inconsistent("tile line run does not cover its cells");
            if (!partial.filled(c.row, c.col)) return std::nullopt; // line stays open
            any_outside = true;
            sum = g.add(sum, partial.get(c.row, c.col));
        }
        return any_outside ? g.neg(sum) : g.zero();
    };

    for (const auto& [r, beta] : tile.row_start)
        if (auto target = walk_line(true, r)) req.forbidden_rows[r] = *target;
    for (const auto& [c, gamma] : tile.col_start)
        if (auto target = walk_line(false, c)) req.forbidden_cols[c] = *target;
    return req;
}

PFArray assemble_by_tiling(const BuildRequest& req, TilePlan* plan_out) {
    const auto& p = req.params;
    require_necessary(req);
    const FiniteGroup& g = *req.group;

    bool transpose;
    if (p.h == p.n && p.k == p.m)
        transpose = p.m > p.n;
    else if (coset_ratio(p) >= 3)
        transpose = p.m > p.n;
    else
        transpose = p.h > p.k;
    Params cp = transpose ? p.transposed() : p;

    TilePlan plan = plan_tiling(cp.m, cp.n, cp.h, cp.k);
    int vt = g.order() - req.j.t();
    require(plan.max_tile_size() <= vt, "largest tile exceeds v - t");

    bool split = p.lambda % 2 != 0;
    auto ord = ordered_complement(g, req.j, {split, false});
    auto om = omega(g, req.j, p.lambda, ord);
    std::vector<int> sizes;
    for (const auto& t : plan.tiles) sizes.push_back(t.size());
    auto slices = slice_lists(om.layout, sizes);

    for (int attempt = 0; attempt < 8; ++attempt) {
        PFArray a(cp.m, cp.n, req.group);
        for (size_t ti = 0; ti < plan.tiles.size(); ++ti) {
            FillRequest fr = forbidden_targets(a, plan.skeleton, plan.tiles[ti], slices[ti]);
            TileFill fill =
                fill_tile(g, fr, derive_seed(req.seed, 1000 * static_cast<uint64_t>(attempt) + ti));
            for (size_t ci = 0; ci < plan.tiles[ti].cells.size(); ++ci) {
                const Cell& c = plan.tiles[ti].cells[ci];
                a.set(c.row, c.col, fill.values[ci]);
            }
        }
        PFArray out = transpose ? a.transposed() : a;
        if (verify_array(out, req.j, p).pass()) {
            if (plan_out) *plan_out = plan;
            return out;
        }
    }
    throw retries_exhausted("tiling assembly failed verification");
}

namespace {

// ---- bounded global search -------------------------------------------------

struct SearchLimits {
    int64_t skeleton_cap = 20000;
    int64_t node_cap = 30'000'000;
    int random_attempts = 10000;
};

// all 0/1 skeletons with exact line counts, capped
bool enumerate_skeletons(int m, int n, int h, int k, int64_t cap,
                         std::vector<std::vector<uint32_t>>& out) {
    std::vector<uint32_t> rows(static_cast<size_t>(m), 0);
    std::vector<int> colcnt(static_cast<size_t>(n), 0);
    bool capped = false;
    auto rec = [&](auto&& self, int r) -> void {
        if (capped) return;
        if (r == m) {
            out.push_back(rows);
            if (static_cast<int64_t>(out.size()) > cap) capped = true;
            return;
        }
        // choose h columns for row r
        std::vector<int> pick;
        auto choose = [&](auto&& go, int start, int left) -> void {
            if (capped) return;
            if (left == 0) {
                uint32_t mask = 0;
                for (int c : pick) mask |= 1u << c;
                rows[static_cast<size_t>(r)] = mask;
                self(self, r + 1);
                return;
            }
            for (int c = start; c <= n - left; ++c) {
                if (colcnt[static_cast<size_t>(c)] + 1 > k) continue;
                if (k - colcnt[static_cast<size_t>(c)] > m - r) continue;
                colcnt[static_cast<size_t>(c)]++;
                pick.push_back(c);
                go(go, c + 1, left - 1);
                pick.pop_back();
                colcnt[static_cast<size_t>(c)]--;
            }
        };
        choose(choose, 0, h);
    };
    rec(rec, 0);
    if (capped) return false;
    // filter exact column counts: the recursion already enforces <= k and
    // reachability, completed skeletons still need == k
    std::vector<std::vector<uint32_t>> exact;
    for (const auto& sk : out) {
        std::vector<int> cc(static_cast<size_t>(n), 0);
        for (uint32_t mask : sk)
            for (int c = 0; c < n; ++c)
                if (mask & (1u << c)) cc[static_cast<size_t>(c)]++;
        bool ok = true;
        for (int c = 0; c < n; ++c)
            if (cc[static_cast<size_t>(c)] != k) { ok = false; break; }
        if (ok) exact.push_back(sk);
    }
    out = std::move(exact);
    return true;
}

// DFS over cell values with pair-capacity and line-sum pruning. Returns true
// with `a` filled on success; sets `exhausted` when the whole space was seen.
struct ValueSearch {
    const FiniteGroup& g;
    const Subgroup& j;
    int64_t lambda;
    std::vector<Cell> cells; // row-major
    PFArray& a;
    std::vector<int64_t> pair_used; // per canonical pair representative
    std::vector<Elem> canon;        // x -> min(x, -x)
    std::vector<int> row_left, col_left;
    int64_t nodes = 0;
    int64_t node_cap;
    bool capped = false;

    ValueSearch(const FiniteGroup& g_, const Subgroup& j_, int64_t lambda_, std::vector<Cell> cells_,
                PFArray& a_, int64_t cap)
        : g(g_), j(j_), lambda(lambda_), cells(std::move(cells_)), a(a_), node_cap(cap) {
        pair_used.assign(static_cast<size_t>(g.order()), 0);
        canon.resize(static_cast<size_t>(g.order()));
        for (Elem x = 0; x < g.order(); ++x) canon[static_cast<size_t>(x)] = std::min(x, g.neg(x));
        row_left.assign(static_cast<size_t>(a.m() + 1), 0);
        col_left.assign(static_cast<size_t>(a.n() + 1), 0);
        for (const Cell& c : cells) {
            row_left[static_cast<size_t>(c.row)]++;
            col_left[static_cast<size_t>(c.col)]++;
        }
    }

    bool dfs(size_t idx) {
        if (++nodes > node_cap) { capped = true; return false; }
        if (idx == cells.size()) return true;
        const Cell& c = cells[idx];
        for (Elem x = 0; x < g.order(); ++x) {
            if (j.contains(x)) continue;
            Elem rep = canon[static_cast<size_t>(x)];
            int64_t weight = g.is_involution(x) ? 2 : 1;
            if (pair_used[static_cast<size_t>(rep)] + weight > lambda) continue;
            pair_used[static_cast<size_t>(rep)] += weight;
            a.set(c.row, c.col, x);
            row_left[static_cast<size_t>(c.row)]--;
            col_left[static_cast<size_t>(c.col)]--;
            bool ok = (row_left[static_cast<size_t>(c.row)] > 0 || row_sum(a, c.row) != g.zero()) &&
                      (col_left[static_cast<size_t>(c.col)] > 0 || col_sum(a, c.col) != g.zero());
            if (ok && dfs(idx + 1)) return true;
            row_left[static_cast<size_t>(c.row)]++;
            col_left[static_cast<size_t>(c.col)]++;
            a.clear(c.row, c.col);
            pair_used[static_cast<size_t>(rep)] -= weight;
            if (capped) return false;
        }
        return false;
    }
};

std::optional<BuildResult> global_search(const BuildRequest& req) {
    const auto& p = req.params;
    const FiniteGroup& g = *req.group;
    SearchLimits lim;

    // exhaustive route: all skeletons x all value assignments, pruned
    std::vector<std::vector<uint32_t>> skeletons;
    bool complete = p.n <= 30 && enumerate_skeletons(p.m, p.n, p.h, p.k, lim.skeleton_cap, skeletons);
    if (complete) {
        int64_t budget = lim.node_cap;
        bool any_capped = false;
        for (const auto& sk : skeletons) {
            PFArray a(p.m, p.n, req.group);
            std::vector<Cell> cells;
            for (int r = 1; r <= p.m; ++r)
                for (int c = 1; c <= p.n; ++c)
                    if (sk[static_cast<size_t>(r - 1)] & (1u << (c - 1))) cells.push_back({r, c});
            ValueSearch vs(g, req.j, p.lambda, std::move(cells), a, budget);
            if (vs.dfs(0)) {
                BuildResult res;
                res.outcome = BuildResult::Outcome::Built;
                res.tag = "search_exhaustive";
                res.array = a;
                return res;
            }
            budget -= vs.nodes;
            if (vs.capped || budget <= 0) { any_capped = true; break; }
        }
        if (!any_capped) {
            BuildResult res;
            res.outcome = BuildResult::Outcome::Infeasible;
            res.tag = "exhaustive search over all skeletons and fillings found no array";
            return res;
        }
    }

    // randomized route on the canonical skeleton
    std::vector<Elem> supply;
    {
        bool split = p.lambda % 2 != 0;
        if (split && complement_has_involution(g, req.j)) return std::nullopt; // caught upstream
        auto ord = ordered_complement(g, req.j, {split, false});
        auto om = omega(g, req.j, p.lambda, ord);
        supply = om.layout;
    }
    CellSet b = coset_skeleton(p.m, p.n, p.h, p.k);
    Rng rng(derive_seed(req.seed, 0xf00d));
    for (int attempt = 0; attempt < lim.random_attempts; ++attempt) {
        rng.shuffle(supply);
        PFArray a(p.m, p.n, req.group);
        for (size_t i = 0; i < b.cells.size(); ++i) a.set(b.cells[i].row, b.cells[i].col, supply[i]);
        bool ok = true;
        for (int r = 1; r <= p.m && ok; ++r) ok = row_sum(a, r) != g.zero();
        for (int c = 1; c <= p.n && ok; ++c) ok = col_sum(a, c) != g.zero();
        if (ok) {
            BuildResult res;
            res.outcome = BuildResult::Outcome::Built;
            res.tag = "search_random";
            res.array = a;
            return res;
        }
    }
    return std::nullopt;
}

} // namespace

BuildResult construct(const BuildRequest& req) {
    BuildResult res;
    res.seed = req.seed;
    Feasibility feas = feasibility(*req.group, req.j, req.params);
    if (feas.kind == Feasibility::Kind::Infeasible) {
        res.outcome = BuildResult::Outcome::Infeasible;
        res.tag = feas.detail;
        return res;
    }

    if (feas.kind == Feasibility::Kind::FeasibleBy && feas.detail != "random_bound") {
        try {
            std::optional<PFArray> built;
            TilePlan plan;
            bool have_plan = false;
            const std::string& tag = feas.detail;
            if (tag == "z2_all_ones") built = construct_z2_all_ones(req);
            else if (tag == "one_row") built = construct_one_row(req);
            else if (tag == "v3_direct") built = construct_v3(req);
            else if (tag == "odd_abelian_square") built = construct_square_odd_abelian(req);
            else if (tag == "h1") built = construct_h1(req);
            else if (tag == "nk2") built = construct_nk2(req);
            else {
                built = assemble_by_tiling(req, &plan);
                have_plan = true;
            }
            if (built) {
                res.report = verify_array(*built, req.j, req.params);
                if (res.report.pass()) {
                    res.outcome = BuildResult::Outcome::Built;
                    res.tag = tag;
                    res.array = std::move(built);
                    if (have_plan) res.plan = std::move(plan);
                    return res;
                }
            }
        } catch (const Error&) {
            // fall through to the global search; the regime table promised
            // more than the constructor delivered, which the sweep suite
            // treats as a bug signal
        }
    }

    if (auto found = global_search(req)) {
        found->seed = req.seed;
        if (found->outcome == BuildResult::Outcome::Built) {
            found->report = verify_array(*found->array, req.j, req.params);
            if (!found->report.pass()) {
                res.outcome = BuildResult::Outcome::Open;
                res.tag = "search produced an invalid array";
                return res;
            }
        }
        return *found;
    }
    res.outcome = BuildResult::Outcome::Open;
    res.tag = "search budget exhausted";
    return res;
}

} // namespace nzsh

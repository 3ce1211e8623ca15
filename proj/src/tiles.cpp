#include "nzsh/tiles.hpp"

#include <algorithm>
#include <cassert>

#include "nzsh/rng.hpp"

namespace nzsh {

BoundReport expected_zero_bound(int m, int n, int h, int k, int64_t lambda) {
    if (m < 1 || n < 1 || h < 1 || k < 1 || lambda < 1) throw bad_params("bound needs positive parameters");
    Rational rows = Rational(lambda) * Rational(m, static_cast<int64_t>(m) * h - h + 1);
    Rational cols = Rational(lambda) * Rational(n, static_cast<int64_t>(n) * k - k + 1);
    Rational total = rows + cols;
    return BoundReport{rows, cols, total, total < Rational(1)};
}

BoundReport tile_bound(const Tile& tile) {
    int64_t s = tile.size();
    Rational rows(0), cols(0);
    for (const auto& [r, beta] : tile.row_start) {
        int64_t c = static_cast<int64_t>(tile.row_run(r).size());
        rows = rows + Rational(1, s - c + 1);
    }
    for (const auto& [c, gamma] : tile.col_start) {
        int64_t cnt = static_cast<int64_t>(tile.col_run(c).size());
        cols = cols + Rational(1, s - cnt + 1);
    }
    Rational total = rows + cols;
    return BoundReport{rows, cols, total, total < Rational(1)};
}

namespace {

// Per-line metadata for constraint checking during search: the cell indices
// (into tile.cells) in run order, and the target to avoid.
struct LineCheck {
    std::vector<int> run;
    Elem target;
};

struct FillContext {
    const FiniteGroup& g;
    std::vector<LineCheck> lines;
    std::vector<std::vector<int>> finish_at; // cell position -> line ids completed there
    int size;

    FillContext(const FiniteGroup& g_, const FillRequest& req) : g(g_), size(req.tile.size()) {
        auto index_of = [&](const Cell& c) {
            auto it = std::lower_bound(req.tile.cells.begin(), req.tile.cells.end(), c);
            assert(it != req.tile.cells.end() && *it == c);
            return static_cast<int>(it - req.tile.cells.begin());
        };
        finish_at.assign(static_cast<size_t>(size), {});
        auto add_line = [&](const std::vector<Cell>& run_cells, Elem target) {
            LineCheck lc;
            lc.target = target;
            int last = -1;
            for (const Cell& c : run_cells) {
                int idx = index_of(c);
                lc.run.push_back(idx);
                last = std::max(last, idx);
            }
            finish_at[static_cast<size_t>(last)].push_back(static_cast<int>(lines.size()));
            lines.push_back(std::move(lc));
        };
        for (const auto& [r, target] : req.forbidden_rows) {
            if (!req.tile.row_start.count(r)) throw plan_inconsistent("row target outside the tile");
            add_line(req.tile.row_run(r), target);
        }
        for (const auto& [c, target] : req.forbidden_cols) {
            if (!req.tile.col_start.count(c)) throw plan_inconsistent("column target outside the tile");
            add_line(req.tile.col_run(c), target);
        }
    }

    bool line_ok(const LineCheck& lc, const std::vector<Elem>& values) const {
        Elem s = g.zero();
        for (int idx : lc.run) s = g.add(s, values[static_cast<size_t>(idx)]);
        return s != lc.target;
    }

    bool all_ok(const std::vector<Elem>& values) const {
        for (const auto& lc : lines)
            if (!line_ok(lc, values)) return false;
        return true;
    }

    // cells assigned in index order 0..size-1; check lines as they complete
    bool backtrack(std::vector<Elem>& values, std::vector<Elem>& pool, size_t pos) {
        if (pos == static_cast<size_t>(size)) return true;
        for (size_t i = 0; i < pool.size(); ++i) {
            Elem x = pool[i];
            if (i > 0 && x == pool[i - 1]) continue; // pool is sorted; duplicates impossible anyway
            values[pos] = x;
            bool ok = true;
            for (int li : finish_at[pos])
                if (!line_ok(lines[static_cast<size_t>(li)], values)) { ok = false; break; }
            if (ok) {
                pool.erase(pool.begin() + static_cast<long>(i));
                if (backtrack(values, pool, pos + 1)) return true;
                pool.insert(pool.begin() + static_cast<long>(i), x);
            }
        }
        values[pos] = -1;
        return false;
    }
};

} // namespace

bool fill_satisfies(const FiniteGroup& g, const FillRequest& req, const std::vector<Elem>& values) {
    if (values.size() != req.tile.cells.size()) return false;
    FillContext ctx(g, req);
    return ctx.all_ok(values);
}

TileFill fill_tile(const FiniteGroup& g, const FillRequest& req, uint64_t seed) {
    const int size = req.tile.size();
    if (static_cast<int>(req.s_list.size()) != size) throw size_mismatch("|S| must match the tile size");
    {
        auto sorted = req.s_list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw size_mismatch("S must be duplicate-free");
    }
    FillContext ctx(g, req);

    std::vector<Elem> values = req.s_list;
    Rng rng(seed);
    for (int attempt = 0; attempt < 64 * size; ++attempt) {
        rng.shuffle(values);
        if (ctx.all_ok(values)) return TileFill{values};
    }

    std::vector<Elem> pool = req.s_list;
    std::sort(pool.begin(), pool.end());
    std::vector<Elem> out(static_cast<size_t>(size), -1);
    if (ctx.backtrack(out, pool, 0)) return TileFill{out};
    throw not_nice("no assignment avoids the prescribed targets");
}

} // namespace nzsh

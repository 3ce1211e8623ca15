#include "nzsh/skeleton.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace nzsh {

bool CellSet::contains(const Cell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

std::string family_name(TileFamily f) {
    switch (f) {
    case TileFamily::Rect3b: return "rect3b";
    case TileFamily::Rect2b: return "rect2b";
    case TileFamily::Stair32: return "stair32";
    case TileFamily::DStair21: return "dstair21";
    case TileFamily::DStair31: return "dstair31";
    case TileFamily::Diag3b: return "diag3b";
    case TileFamily::Diag4b: return "diag4b";
    case TileFamily::Diag5b: return "diag5b";
    case TileFamily::FullQ: return "fullQ";
    }
    return "?";
}

std::optional<TileFamily> family_from_name(const std::string& name) {
    for (TileFamily f : {TileFamily::Rect3b, TileFamily::Rect2b, TileFamily::Stair32,
                         TileFamily::DStair21, TileFamily::DStair31, TileFamily::Diag3b,
                         TileFamily::Diag4b, TileFamily::Diag5b, TileFamily::FullQ})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    auto it = std::unique(cells.begin(), cells.end());
    cells.erase(it, cells.end());
    return cells;
}

// Start of the unique cyclic run of `vals` within 1..mod, or nullopt if the
// positions do not form a single cyclic interval. A full line is a run whose
// start is chosen by the caller.
std::optional<int> cyclic_run_start(const std::vector<int>& vals, int mod) {
    if (vals.empty()) return std::nullopt;
    if (static_cast<int>(vals.size()) > mod) return std::nullopt;
    std::vector<char> present(static_cast<size_t>(mod + 1), 0);
    for (int v : vals) present[static_cast<size_t>(v)] = 1;
    if (static_cast<int>(vals.size()) == mod) return vals.front();
    int runs = 0, start = -1;
    for (int i = 1; i <= mod; ++i) {
        int prev = i == 1 ? mod : i - 1;
        if (present[static_cast<size_t>(i)] && !present[static_cast<size_t>(prev)]) {
            ++runs;
            start = i;
        }
    }
    if (runs != 1) return std::nullopt;
    return start;
}

} // namespace

std::vector<Cell> Tile::row_run(int r) const {
    auto it = row_start.find(r);
    assert(it != row_start.end());
    std::vector<Cell> run;
    int c = it->second;
    while (true) {
        Cell cell{r, c};
        if (!std::binary_search(cells.begin(), cells.end(), cell)) break;
        run.push_back(cell);
        if (static_cast<int>(run.size()) == n) break;
        c = wrap_index(c + 1, n);
    }
    return run;
}

std::vector<Cell> Tile::col_run(int c) const {
    auto it = col_start.find(c);
    assert(it != col_start.end());
    std::vector<Cell> run;
    int r = it->second;
    while (true) {
        Cell cell{r, c};
        if (!std::binary_search(cells.begin(), cells.end(), cell)) break;
        run.push_back(cell);
        if (static_cast<int>(run.size()) == m) break;
        r = wrap_index(r + 1, m);
    }
    return run;
}

int TilePlan::max_tile_size() const {
    int mx = 0;
    for (const auto& t : tiles) mx = std::max(mx, t.size());
    return mx;
}

CellSet coset_skeleton(int m, int n, int h, int k) {
    if (m < 1 || n < 1 || h < 1 || k < 1 || h > n || k > m)
        throw bad_params("need 1 <= h <= n and 1 <= k <= m");
    if (static_cast<int64_t>(n) * k != static_cast<int64_t>(m) * h)
        throw bad_params("nk != mh");
    std::vector<Cell> cells;
    int64_t L = std::lcm(static_cast<int64_t>(m), static_cast<int64_t>(n));
    int64_t r = static_cast<int64_t>(n) * k / L;
    if (h == n && k == m) {
        for (int i = 1; i <= m; ++i)
            for (int jj = 1; jj <= n; ++jj) cells.push_back({i, jj});
    } else if (r == 1) {
        int blocks = n / h; // = gcd(m,n)
        for (int i = 0; i < blocks; ++i)
            for (int dr = 0; dr < k; ++dr)
                for (int dc = 0; dc < h; ++dc) cells.push_back({i * k + dr + 1, i * h + dc + 1});
    } else if (r == 2) {
        int trans = 2 * n / h;
        int qr = k / 2, qc = h / 2;
        for (int i = 0; i < trans; ++i)
            for (int dr = 0; dr < qr; ++dr)
                for (int dc = 0; dc < 2 * qc; ++dc)
                    cells.push_back({wrap_index(i * qr + dr + 1, m), wrap_index(i * qc + dc + 1, n)});
    } else {
        for (int64_t x = 0; x < L; ++x)
            for (int64_t c = 0; c < r; ++c)
                cells.push_back({static_cast<int>(x % m) + 1, static_cast<int>((x + c) % n) + 1});
    }
    auto uniq = sorted_unique(cells);
    if (uniq.size() != cells.size()) throw bad_params("skeleton translates overlap");
    CellSet b{std::move(uniq), m, n};
    // exact per-line counts
    std::vector<int> rc(static_cast<size_t>(m + 1), 0), cc(static_cast<size_t>(n + 1), 0);
    for (const Cell& c : b.cells) {
        rc[static_cast<size_t>(c.row)]++;
        cc[static_cast<size_t>(c.col)]++;
    }
    for (int i = 1; i <= m; ++i)
        if (rc[static_cast<size_t>(i)] != h) throw bad_params("row fill count mismatch");
    for (int jj = 1; jj <= n; ++jj)
        if (cc[static_cast<size_t>(jj)] != k) throw bad_params("column fill count mismatch");
    return b;
}

V3Skeleton v3_skeleton(int m, int n, int h, int k) {
    if (m < k || n < h) throw bad_params("needs m >= k and n >= h");
    if (static_cast<int64_t>(n) * k != static_cast<int64_t>(m) * h) throw bad_params("nk != mh");
    int64_t L = std::lcm(static_cast<int64_t>(m), static_cast<int64_t>(n));
    int r = static_cast<int>(static_cast<int64_t>(n) * k / L);
    if (k % r != 0 || h % r != 0) throw bad_params("r does not divide h and k");
    int qr = k / r, qc = h / r;
    int outer = r * n / h; // = gcd(m,n)
    std::vector<Cell> cells;
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < outer; ++i)
            for (int dr = 0; dr < qr; ++dr)
                for (int dc = 0; dc < qc; ++dc)
                    cells.push_back({wrap_index(i * qr + dr + 1, m), wrap_index(j * qc + i * qc + dc + 1, n)});
    auto uniq = sorted_unique(cells);
    if (uniq.size() != cells.size()) throw bad_params("skeleton translates overlap");
    V3Skeleton out;
    out.b = CellSet{std::move(uniq), m, n};

    if (k % 3 == 0) {
        std::set<int> rows;
        int reps = (n + h - 1) / h;
        for (int i = 1; i <= reps; ++i) rows.insert(wrap_index(i * k, m));
        std::vector<Cell> h1;
        for (const Cell& c : out.b.cells)
            if (rows.count(c.row)) h1.push_back(c);
        out.h1 = CellSet{std::move(h1), m, n};
    } else {
        out.h1 = CellSet{{}, m, n};
    }
    if (h % 3 == 0) {
        std::set<int> cols;
        int reps = (m + k - 1) / k;
        for (int j = 1; j <= reps; ++j) cols.insert(wrap_index(j * h, n));
        std::vector<Cell> h2;
        for (const Cell& c : out.b.cells)
            if (cols.count(c.col)) h2.push_back(c);
        out.h2 = CellSet{std::move(h2), m, n};
    } else {
        out.h2 = CellSet{{}, m, n};
    }
    return out;
}

CellSet square_diagonal_skeleton(int n, int k) {
    if (n < k || k < 1) throw bad_params("needs n >= k >= 1");
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int s = 0; s < k; ++s) cells.push_back({wrap_index(i + s, n), i});
    return CellSet{sorted_unique(cells), n, n};
}

void certify_tile(Tile& tile) {
    if (tile.cells.empty()) throw family_bound_violation("empty tile");
    tile.cells = sorted_unique(std::move(tile.cells));
    tile.row_start.clear();
    tile.col_start.clear();

    std::map<int, std::vector<int>> by_row, by_col;
    for (const Cell& c : tile.cells) {
        by_row[c.row].push_back(c.col);
        by_col[c.col].push_back(c.row);
    }
    for (auto& [r, cols] : by_row) {
        auto start = cyclic_run_start(cols, tile.n);
        if (!start) throw family_bound_violation("row " + std::to_string(r) + " is not a cyclic interval");
        tile.row_start[r] = *start;
    }
    for (auto& [c, rows] : by_col) {
        auto start = cyclic_run_start(rows, tile.m);
        if (!start) throw family_bound_violation("column " + std::to_string(c) + " is not a cyclic interval");
        tile.col_start[c] = *start;
    }

    int nrows = static_cast<int>(by_row.size());
    int ncols = static_cast<int>(by_col.size());
    auto all_lines_have = [&](const std::map<int, std::vector<int>>& lines, int want) {
        for (const auto& [idx, v] : lines)
            if (static_cast<int>(v.size()) != want) return false;
        return true;
    };
    int b = tile.b;
    auto need = [&](bool cond, const std::string& msg) {
        if (!cond) throw family_bound_violation(family_name(tile.family) + ": " + msg);
    };
    switch (tile.family) {
    case TileFamily::Rect3b:
        need(b >= 3, "b >= 3 required");
        if (!tile.transposed)
            need(nrows == 3 && ncols == b && all_lines_have(by_row, b) && all_lines_have(by_col, 3), "not a 3 x b block");
        else
            need(ncols == 3 && nrows == b && all_lines_have(by_col, b) && all_lines_have(by_row, 3), "not a b x 3 block");
        break;
    case TileFamily::Rect2b:
        need(b >= 4, "b >= 4 required");
        if (!tile.transposed)
            need(nrows == 2 && ncols == b && all_lines_have(by_row, b) && all_lines_have(by_col, 2), "not a 2 x b block");
        else
            need(ncols == 2 && nrows == b && all_lines_have(by_col, b) && all_lines_have(by_row, 2), "not a b x 2 block");
        break;
    case TileFamily::Stair32:
        need(b >= 2, "b >= 2 required");
        need(3 * b <= tile.m && 2 * b <= tile.n, "stair exceeds the array");
        need(nrows == 3 * b && ncols == 2 * b && all_lines_have(by_row, 2) && all_lines_have(by_col, 3), "not a (3,2)-stair");
        break;
    case TileFamily::DStair21: {
        // b = n closes the staircase into a ring and merges the end columns
        bool closed = b == tile.n;
        need(b >= 3, "b >= 3 required");
        need(2 * b <= tile.m && (closed || b + 1 <= tile.n), "stair exceeds the array");
        need(nrows == 2 * b && ncols == (closed ? b : b + 1) && all_lines_have(by_row, 2),
             "not a double (2,1)-stair");
        int ends = 0, mids = 0;
        for (const auto& [c, rows] : by_col) {
            if (rows.size() == 2) ++ends;
            else if (rows.size() == 4) ++mids;
        }
        need(closed ? (ends == 0 && mids == b) : (ends == 2 && mids == b - 1), "dstair21 column profile");
        break;
    }
    case TileFamily::DStair31: {
        bool closed = b == tile.n;
        need(b >= 2, "b >= 2 required");
        need(3 * b <= tile.m && (closed || b + 1 <= tile.n), "stair exceeds the array");
        need(nrows == 3 * b && ncols == (closed ? b : b + 1) && all_lines_have(by_row, 2),
             "not a double (3,1)-stair");
        int ends = 0, mids = 0;
        for (const auto& [c, rows] : by_col) {
            if (rows.size() == 3) ++ends;
            else if (rows.size() == 6) ++mids;
        }
        need(closed ? (ends == 0 && mids == b) : (ends == 2 && mids == b - 1), "dstair31 column profile");
        break;
    }
    case TileFamily::Diag3b:
        need(b >= 4 && (b <= tile.n - 2 || b == tile.m), "b >= 4 and b <= n-2 or b = m required");
        need(b <= tile.m && 3 < tile.n, "diagonal tile exceeds the array");
        need(nrows == std::min(b, tile.m) && all_lines_have(by_row, 3), "not a width-3 diagonal tile");
        break;
    case TileFamily::Diag4b:
        need(b >= 3 && (b <= tile.n - 3 || b == tile.m), "b >= 3 and b <= n-3 or b = m required");
        need(b <= tile.m && 4 < tile.n, "diagonal tile exceeds the array");
        need(nrows == std::min(b, tile.m) && all_lines_have(by_row, 4), "not a width-4 diagonal tile");
        break;
    case TileFamily::Diag5b:
        need(b >= 2 && (b <= tile.n - 4 || b == tile.m), "b >= 2 and b <= n-4 or b = m required");
        need(b <= tile.m && 5 < tile.n, "diagonal tile exceeds the array");
        need(nrows == std::min(b, tile.m) && all_lines_have(by_row, 5), "not a width-5 diagonal tile");
        break;
    case TileFamily::FullQ: {
        need(tile.size() == tile.m * tile.n, "fullQ must cover the whole array");
        int small = std::min(tile.m, tile.n), large = std::max(tile.m, tile.n);
        need((small == 3 && large >= 3) || (small == 2 && large >= 4), "fullQ shape is not a certified rectangle");
        break;
    }
    }
}

Tile tile_catalog(TileFamily family, int b, Cell anchor, int m, int n, bool transposed) {
    Tile t;
    t.family = family;
    t.b = b;
    t.transposed = transposed;
    t.m = m;
    t.n = n;
    auto put = [&](int dr, int dc) {
        if (transposed) std::swap(dr, dc);
        t.cells.push_back({wrap_index(anchor.row + dr, m), wrap_index(anchor.col + dc, n)});
    };
    switch (family) {
    case TileFamily::Rect3b:
        for (int dr = 0; dr < 3; ++dr)
            for (int dc = 0; dc < b; ++dc) put(dr, dc);
        break;
    case TileFamily::Rect2b:
        for (int dr = 0; dr < 2; ++dr)
            for (int dc = 0; dc < b; ++dc) put(dr, dc);
        break;
    case TileFamily::Stair32:
        for (int s = 0; s < b; ++s)
            for (int dr = 0; dr < 3; ++dr)
                for (int dc = 0; dc < 2; ++dc) put(3 * s + dr, 2 * s + dc);
        break;
    case TileFamily::DStair21:
        for (int s = 0; s < b; ++s)
            for (int dr = 0; dr < 2; ++dr)
                for (int dc = 0; dc < 2; ++dc) put(2 * s + dr, s + dc);
        break;
    case TileFamily::DStair31:
        for (int s = 0; s < b; ++s)
            for (int dr = 0; dr < 3; ++dr)
                for (int dc = 0; dc < 2; ++dc) put(3 * s + dr, s + dc);
        break;
    case TileFamily::Diag3b:
    case TileFamily::Diag4b:
    case TileFamily::Diag5b: {
        int w = family == TileFamily::Diag3b ? 3 : family == TileFamily::Diag4b ? 4 : 5;
        for (int x = 0; x < b; ++x)
            for (int jj = 0; jj < w; ++jj) put(x, x + jj);
        break;
    }
    case TileFamily::FullQ:
        for (int dr = 0; dr < m; ++dr)
            for (int dc = 0; dc < n; ++dc) put(dr, dc);
        break;
    }
    certify_tile(t);
    return t;
}

std::optional<std::vector<int>> decompose_into(int total, const std::vector<int>& allowed) {
    if (total <= 0 || allowed.empty()) return std::nullopt;
    std::vector<char> can(static_cast<size_t>(total + 1), 0);
    can[0] = 1;
    for (int s = 1; s <= total; ++s)
        for (int p : allowed)
            if (p <= s && can[static_cast<size_t>(s - p)]) { can[static_cast<size_t>(s)] = 1; break; }
    if (!can[static_cast<size_t>(total)]) return std::nullopt;

    for (auto it = allowed.rbegin(); it != allowed.rend(); ++it)
        if (total % *it == 0) return std::vector<int>(static_cast<size_t>(total / *it), *it);

    std::vector<int> parts;
    int rem = total;
    while (rem > 0) {
        int pick = -1;
        for (auto it = allowed.rbegin(); it != allowed.rend(); ++it)
            if (*it <= rem && can[static_cast<size_t>(rem - *it)]) { pick = *it; break; }
        assert(pick > 0);
        parts.push_back(pick);
        rem -= pick;
    }
    return parts;
}

namespace {

std::vector<int> allowed_range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

// Totally filled a x b sub-rectangle at a 1-based offset (wrapping allowed).
// Horizontal bands of 2-3 rows when they fit, upright bands otherwise.
std::optional<std::vector<Tile>> plan_full_rect(int a, int b, int row_off, int col_off, int m, int n) {
    auto horizontal = [&]() -> std::optional<std::vector<Tile>> {
        auto weights = decompose_into(a, {2, 3});
        if (!weights) return std::nullopt;
        // a weight-2 band needs runs of 4..7, weight-3 runs of 3..5
        for (int w : *weights)
            if (!decompose_into(b, w == 2 ? allowed_range(4, 7) : allowed_range(3, 5))) return std::nullopt;
        std::vector<Tile> tiles;
        int r0 = 0;
        for (int w : *weights) {
            auto parts = decompose_into(b, w == 2 ? allowed_range(4, 7) : allowed_range(3, 5));
            int c0 = 0;
            for (int p : *parts) {
                tiles.push_back(tile_catalog(w == 2 ? TileFamily::Rect2b : TileFamily::Rect3b, p,
                                             {wrap_index(row_off + r0, m), wrap_index(col_off + c0, n)}, m, n));
                c0 += p;
            }
            r0 += w;
        }
        return tiles;
    };
    auto vertical = [&]() -> std::optional<std::vector<Tile>> {
        auto weights = decompose_into(b, {2, 3});
        if (!weights) return std::nullopt;
        for (int w : *weights)
            if (!decompose_into(a, w == 2 ? allowed_range(4, 7) : allowed_range(3, 5))) return std::nullopt;
        std::vector<Tile> tiles;
        int c0 = 0;
        for (int w : *weights) {
            auto parts = decompose_into(a, w == 2 ? allowed_range(4, 7) : allowed_range(3, 5));
            int r0 = 0;
            for (int p : *parts) {
                tiles.push_back(tile_catalog(w == 2 ? TileFamily::Rect2b : TileFamily::Rect3b, p,
                                             {wrap_index(row_off + r0, m), wrap_index(col_off + c0, n)}, m, n,
                                             /*transposed=*/true));
                r0 += p;
            }
            c0 += w;
        }
        return tiles;
    };
    if (a <= b) {
        if (auto t = horizontal()) return t;
        return vertical();
    }
    if (auto t = vertical()) return t;
    return horizontal();
}

TilePlan finish_plan(std::vector<Tile> tiles, CellSet skeleton) {
    std::sort(tiles.begin(), tiles.end(),
              [](const Tile& x, const Tile& y) { return x.cells.front() < y.cells.front(); });
    TilePlan plan{std::move(tiles), std::move(skeleton)};
    verify_plan(plan);
    return plan;
}

TilePlan plan_total(int m, int n) {
    if (m > n) throw no_plan("totally filled plans assume m <= n");
    if (m < 2) throw no_plan("totally filled plans need m >= 2");
    auto tiles = plan_full_rect(m, n, 1, 1, m, n);
    if (!tiles) throw no_plan("no band decomposition for the totally filled array");
    return finish_plan(*tiles, coset_skeleton(m, n, n, m));
}

TilePlan plan_r1(int m, int n, int h, int k) {
    if (h >= k) throw no_plan("staircase plans assume h < k");
    CellSet skel = coset_skeleton(m, n, h, k);
    std::vector<Tile> tiles;
    int blocks = n / h;
    if (h == 2 && k == 3) {
        auto runs = decompose_into(blocks, {2, 3});
        if (!runs) throw no_plan("cannot split the staircase into stair runs");
        int i0 = 0;
        for (int len : *runs) {
            tiles.push_back(tile_catalog(TileFamily::Stair32, len, {3 * i0 + 1, 2 * i0 + 1}, m, n));
            i0 += len;
        }
    } else if (h >= 2) {
        for (int i = 0; i < blocks; ++i) {
            auto qt = plan_full_rect(k, h, i * k + 1, i * h + 1, m, n);
            if (!qt) throw no_plan("block of " + std::to_string(k) + "x" + std::to_string(h) + " has no rectangle plan");
            for (auto& t : *qt) tiles.push_back(std::move(t));
        }
    } else {
        throw no_plan("h = 1 is served by the direct column construction");
    }
    return finish_plan(std::move(tiles), std::move(skel));
}

TilePlan plan_r2(int m, int n, int h, int k) {
    if (h >= k) throw no_plan("doubled staircase plans assume h < k");
    if (h % 2 != 0 || k % 2 != 0) throw no_plan("doubled staircase needs even h and k");
    CellSet skel = coset_skeleton(m, n, h, k);
    std::vector<Tile> tiles;
    int trans = 2 * n / h;
    if (h == 2 && k == 4) {
        auto runs = decompose_into(trans, {3, 4, 5});
        if (!runs) throw no_plan("cannot split the doubled staircase");
        int i0 = 0;
        for (int len : *runs) {
            tiles.push_back(tile_catalog(TileFamily::DStair21, len, {2 * i0 + 1, i0 + 1}, m, n));
            i0 += len;
        }
    } else if (h == 2 && k == 6) {
        auto runs = decompose_into(trans, {2, 3});
        if (!runs) throw no_plan("cannot split the doubled staircase");
        int i0 = 0;
        for (int len : *runs) {
            tiles.push_back(tile_catalog(TileFamily::DStair31, len, {3 * i0 + 1, i0 + 1}, m, n));
            i0 += len;
        }
    } else {
        int qr = k / 2;
        for (int i = 0; i < trans; ++i) {
            auto qt = plan_full_rect(qr, h, i * qr + 1, i * (h / 2) + 1, m, n);
            if (!qt) throw no_plan("block of " + std::to_string(qr) + "x" + std::to_string(h) + " has no rectangle plan");
            for (auto& t : *qt) tiles.push_back(std::move(t));
        }
    }
    return finish_plan(std::move(tiles), std::move(skel));
}

TilePlan plan_r3(int m, int n, int h, int k, int r) {
    if (n < m) throw no_plan("diagonal-band plans assume n >= m");
    if (m <= r) throw no_plan("diagonal-band plans need m > r");
    CellSet skel = coset_skeleton(m, n, h, k);
    auto weights = decompose_into(r, {3, 4, 5});
    if (!weights) throw no_plan("cannot split the coset family into bands");
    int64_t L = std::lcm(static_cast<int64_t>(m), static_cast<int64_t>(n));

    std::vector<Tile> tiles;
    int c0 = 0;
    for (int w : *weights) {
        std::optional<std::vector<int>> parts;
        TileFamily fam;
        if (w == 3) {
            fam = TileFamily::Diag3b;
            parts = m <= 7 ? std::optional<std::vector<int>>{{m}}
                           : decompose_into(m, allowed_range(4, std::min(7, m - 4)));
        } else if (w == 4) {
            fam = TileFamily::Diag4b;
            parts = m == 5 ? std::optional<std::vector<int>>{{m}}
                           : decompose_into(m, allowed_range(3, std::min(5, m - 3)));
        } else {
            fam = TileFamily::Diag5b;
            parts = decompose_into(m, allowed_range(2, std::min(3, m - 4)));
        }
        if (!parts) throw no_plan("no chunk decomposition for band of width " + std::to_string(w));
        assert(L % m == 0);
        int64_t x0 = 0;
        for (int64_t rep = 0; rep < L / m; ++rep)
            for (int p : *parts) {
                tiles.push_back(tile_catalog(fam, p,
                                             {wrap_index(static_cast<int>(x0 % m) + 1, m),
                                              wrap_index(static_cast<int>((x0 + c0) % n) + 1, n)},
                                             m, n));
                x0 += p;
            }
        c0 += w;
    }
    return finish_plan(std::move(tiles), std::move(skel));
}

} // namespace

TilePlan plan_tiling(int m, int n, int h, int k) {
    if (static_cast<int64_t>(n) * k != static_cast<int64_t>(m) * h || h < 1 || k < 1 || h > n || k > m)
        throw no_plan("parameters violate nk = mh or the fill bounds");
    if (h == n && k == m) return plan_total(m, n);
    int64_t L = std::lcm(static_cast<int64_t>(m), static_cast<int64_t>(n));
    int64_t r = static_cast<int64_t>(n) * k / L;
    if (r == 1) return plan_r1(m, n, h, k);
    if (r == 2) return plan_r2(m, n, h, k);
    return plan_r3(m, n, h, k, static_cast<int>(r));
}

void verify_plan(const TilePlan& plan) {
    std::vector<Cell> all;
    for (const auto& t : plan.tiles) {
        Tile copy = t;
        certify_tile(copy); // re-derives runs; throws on any family violation
        if (copy.row_start != t.row_start || copy.col_start != t.col_start)
            throw plan_inconsistent("tile run starts disagree with certification");
        all.insert(all.end(), t.cells.begin(), t.cells.end());
        if (t.size() > 21) throw plan_inconsistent("tile exceeds 21 cells");
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw plan_inconsistent("tiles overlap");
    if (all != plan.skeleton.cells) throw plan_inconsistent("tiles do not cover the skeleton");
}

} // namespace nzsh

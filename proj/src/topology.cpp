#include "nzsh/topology.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nzsh/rng.hpp"

namespace nzsh {

namespace {

// Successor tables over the filled cells; the knight step for a fixed
// orientation is a permutation built from these.
struct SkeletonGraph {
    int m, n, size;
    std::vector<Cell> cells;            // index -> cell, row-major
    std::vector<int> index;             // (r-1)*n + (c-1) -> cell index or -1
    std::vector<int> row_next, row_prev, col_next, col_prev;

    explicit SkeletonGraph(const PFArray& a) : m(a.m()), n(a.n()) {
        cells = a.skeleton();
        size = static_cast<int>(cells.size());
        index.assign(static_cast<size_t>(m) * static_cast<size_t>(n), -1);
        for (int i = 0; i < size; ++i)
            index[static_cast<size_t>((cells[static_cast<size_t>(i)].row - 1) * n +
                                      cells[static_cast<size_t>(i)].col - 1)] = i;
        row_next.assign(static_cast<size_t>(size), -1);
        row_prev.assign(static_cast<size_t>(size), -1);
        col_next.assign(static_cast<size_t>(size), -1);
        col_prev.assign(static_cast<size_t>(size), -1);
        for (int r = 1; r <= m; ++r) link_line(a.row_cells(r), row_next, row_prev);
        for (int c = 1; c <= n; ++c) link_line(a.col_cells(c), col_next, col_prev);
    }

    void link_line(const std::vector<Cell>& line, std::vector<int>& next, std::vector<int>& prev) {
        if (line.empty()) return;
        int sz = static_cast<int>(line.size());
        for (int i = 0; i < sz; ++i) {
            int a_idx = at(line[static_cast<size_t>(i)]);
            int b_idx = at(line[static_cast<size_t>((i + 1) % sz)]);
            next[static_cast<size_t>(a_idx)] = b_idx;
            prev[static_cast<size_t>(b_idx)] = a_idx;
        }
    }

    int at(const Cell& c) const { return index[static_cast<size_t>((c.row - 1) * n + c.col - 1)]; }

    int step(int ci, const Orientation& o) const {
        const Cell& c = cells[static_cast<size_t>(ci)];
        int mid = o.rows[static_cast<size_t>(c.row - 1)] > 0 ? row_next[static_cast<size_t>(ci)]
                                                             : row_prev[static_cast<size_t>(ci)];
        const Cell& cm = cells[static_cast<size_t>(mid)];
        return o.cols[static_cast<size_t>(cm.col - 1)] > 0 ? col_next[static_cast<size_t>(mid)]
                                                           : col_prev[static_cast<size_t>(mid)];
    }

    // step under the packed orientation index: bit layout (MSB first)
    // r_2..r_m, c_1..c_n, set bit = reversed; r_1 is pinned forward
    int step_bits(int ci, uint64_t idx, int bits) const {
        const Cell& c = cells[static_cast<size_t>(ci)];
        bool rrev = c.row > 1 && ((idx >> (bits - c.row + 1)) & 1);
        int mid = rrev ? row_prev[static_cast<size_t>(ci)] : row_next[static_cast<size_t>(ci)];
        const Cell& cm = cells[static_cast<size_t>(mid)];
        bool crev = (idx >> (n - cm.col)) & 1;
        return crev ? col_prev[static_cast<size_t>(mid)] : col_next[static_cast<size_t>(mid)];
    }

    bool solves_index(uint64_t idx, int bits) const {
        int cur = step_bits(0, idx, bits);
        int len = 1;
        while (cur != 0) {
            cur = step_bits(cur, idx, bits);
            if (++len > size) return false; // cannot happen: step is a bijection
        }
        return len == size;
    }

    // orbit of cell 0 covers everything?
    bool solves(const Orientation& o) const {
        int cur = step(0, o);
        int len = 1;
        while (cur != 0) {
            cur = step(cur, o);
            if (++len > size) return false;
        }
        return len == size;
    }
};

Orientation orientation_from_index(uint64_t idx, int m, int n) {
    // bit order, most significant first: r_2..r_m, c_1..c_n; 0 bit = +1
    Orientation o;
    o.rows.assign(static_cast<size_t>(m), 1);
    o.cols.assign(static_cast<size_t>(n), 1);
    int bits = m - 1 + n;
    int pos = bits - 1;
    for (int i = 1; i < m; ++i, --pos)
        if (idx >> pos & 1) o.rows[static_cast<size_t>(i)] = -1;
    for (int c = 0; c < n; ++c, --pos)
        if (idx >> pos & 1) o.cols[static_cast<size_t>(c)] = -1;
    return o;
}

} // namespace

KnightSequence knight_sequence(const PFArray& a, const Orientation& ori, Cell start) {
    if (!a.filled(start.row, start.col)) throw bad_params("start cell is empty");
    if (static_cast<int>(ori.rows.size()) != a.m() || static_cast<int>(ori.cols.size()) != a.n())
        throw bad_params("orientation length mismatch");
    SkeletonGraph sg(a);
    KnightSequence seq;
    std::vector<char> visited(static_cast<size_t>(sg.size), 0);
    int s0 = sg.at(start);
    int cur = s0;
    // alternating walk: the row move lands on an intermediate cell, the
    // column move completes the composed step; both cells count as visited
    do {
        seq.cells.push_back(sg.cells[static_cast<size_t>(cur)]);
        visited[static_cast<size_t>(cur)] = 1;
        const Cell& c = sg.cells[static_cast<size_t>(cur)];
        int mid = ori.rows[static_cast<size_t>(c.row - 1)] > 0 ? sg.row_next[static_cast<size_t>(cur)]
                                                               : sg.row_prev[static_cast<size_t>(cur)];
        const Cell& cm = sg.cells[static_cast<size_t>(mid)];
        int nxt = ori.cols[static_cast<size_t>(cm.col - 1)] > 0 ? sg.col_next[static_cast<size_t>(mid)]
                                                                : sg.col_prev[static_cast<size_t>(mid)];
        visited[static_cast<size_t>(mid)] = 1;
        if (mid != cur && mid != nxt) seq.cells.push_back(sg.cells[static_cast<size_t>(mid)]);
        cur = nxt;
    } while (cur != s0 && static_cast<int>(seq.cells.size()) <= 2 * sg.size);
    seq.closed = cur == s0;
    int covered = 0;
    for (char f : visited) covered += f;
    seq.covers_all = covered == sg.size;
    return seq;
}

std::optional<Orientation> solve_knight_serial(const PFArray& a, int exhaustive_limit) {
    SkeletonGraph sg(a);
    if (sg.size == 0) throw bad_params("empty skeleton");
    int bits = a.m() - 1 + a.n();
    if (bits > exhaustive_limit) throw search_too_large("orientation space has 2^" + std::to_string(bits) + " points");
    uint64_t total = 1ULL << bits;
    for (uint64_t idx = 0; idx < total; ++idx)
        if (sg.solves_index(idx, bits)) return orientation_from_index(idx, a.m(), a.n());
    return std::nullopt;
}

std::optional<Orientation> solve_knight(const PFArray& a, int exhaustive_limit) {
#ifndef _OPENMP
    return solve_knight_serial(a, exhaustive_limit);
#else
    SkeletonGraph sg(a);
    if (sg.size == 0) throw bad_params("empty skeleton");
    int bits = a.m() - 1 + a.n();
    if (bits > exhaustive_limit) throw search_too_large("orientation space has 2^" + std::to_string(bits) + " points");
    uint64_t total = 1ULL << bits;
    std::atomic<uint64_t> best{total};
    const uint64_t chunk = 4096;
    uint64_t nchunks = (total + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic)
    for (int64_t ci = 0; ci < static_cast<int64_t>(nchunks); ++ci) {
        uint64_t lo = static_cast<uint64_t>(ci) * chunk;
        if (lo >= best.load(std::memory_order_relaxed)) continue;
        uint64_t hi = std::min(total, lo + chunk);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed)) break;
            if (sg.solves_index(idx, bits)) {
                uint64_t cur = best.load(std::memory_order_relaxed);
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
                break;
            }
        }
    }
    if (best.load() == total) return std::nullopt;
    return orientation_from_index(best.load(), a.m(), a.n());
#endif
}

uint64_t count_knight_solutions_serial(const PFArray& a, int exhaustive_limit) {
    SkeletonGraph sg(a);
    if (sg.size == 0) throw bad_params("empty skeleton");
    int bits = a.m() - 1 + a.n();
    if (bits > exhaustive_limit) throw search_too_large("orientation space has 2^" + std::to_string(bits) + " points");
    uint64_t total = 1ULL << bits, count = 0;
    for (uint64_t idx = 0; idx < total; ++idx)
        if (sg.solves_index(idx, bits)) ++count;
    return count;
}

uint64_t count_knight_solutions(const PFArray& a, int exhaustive_limit) {
#ifndef _OPENMP
    return count_knight_solutions_serial(a, exhaustive_limit);
#else
    SkeletonGraph sg(a);
    if (sg.size == 0) throw bad_params("empty skeleton");
    int bits = a.m() - 1 + a.n();
    if (bits > exhaustive_limit) throw search_too_large("orientation space has 2^" + std::to_string(bits) + " points");
    uint64_t total = 1ULL << bits;
    uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (int64_t idx = 0; idx < static_cast<int64_t>(total); ++idx)
        if (sg.solves_index(static_cast<uint64_t>(idx), bits)) ++count;
    return count;
#endif
}

std::optional<Orientation> solve_knight_randomized(const PFArray& a, uint64_t seed, int attempts) {
    SkeletonGraph sg(a);
    if (sg.size == 0) throw bad_params("empty skeleton");
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        Orientation o;
        o.rows.assign(static_cast<size_t>(a.m()), 1);
        o.cols.assign(static_cast<size_t>(a.n()), 1);
        for (int r = 1; r < a.m(); ++r) o.rows[static_cast<size_t>(r)] = rng.below(2) ? 1 : -1;
        for (int c = 0; c < a.n(); ++c) o.cols[static_cast<size_t>(c)] = rng.below(2) ? 1 : -1;
        if (sg.solves(o)) return o;
    }
    return std::nullopt;
}

bool is_compatible(const CompatiblePair& pair) {
    size_t s = pair.cells.size();
    if (s == 0 || pair.omega_r.size() != s || pair.omega_c.size() != s) return false;
    size_t cur = 0, len = 0;
    do {
        cur = static_cast<size_t>(pair.omega_c[static_cast<size_t>(pair.omega_r[cur])]);
        if (++len > s) return false;
    } while (cur != 0);
    return len == s;
}

namespace {

CompatiblePair pair_from_orientation(const PFArray& a, const Orientation& o) {
    SkeletonGraph sg(a);
    CompatiblePair p;
    p.cells = sg.cells;
    p.omega_r.resize(static_cast<size_t>(sg.size));
    p.omega_c.resize(static_cast<size_t>(sg.size));
    for (int i = 0; i < sg.size; ++i) {
        const Cell& c = sg.cells[static_cast<size_t>(i)];
        p.omega_r[static_cast<size_t>(i)] = o.rows[static_cast<size_t>(c.row - 1)] > 0
                                                ? sg.row_next[static_cast<size_t>(i)]
                                                : sg.row_prev[static_cast<size_t>(i)];
        p.omega_c[static_cast<size_t>(i)] = o.cols[static_cast<size_t>(c.col - 1)] > 0
                                                ? sg.col_next[static_cast<size_t>(i)]
                                                : sg.col_prev[static_cast<size_t>(i)];
    }
    return p;
}

} // namespace

std::optional<CompatiblePair> compatible_orderings(const PFArray& a, uint64_t seed, int budget) {
    std::optional<Orientation> ori;
    try {
        ori = solve_knight(a);
    } catch (const Error&) {
        ori = solve_knight_randomized(a, derive_seed(seed, 0x7007), budget);
    }
    if (ori) {
        CompatiblePair p = pair_from_orientation(a, *ori);
        if (is_compatible(p)) return p;
        throw invariant_violation("knight solution did not compose to a full cycle");
    }

    // general per-line cyclic orders, sampled
    SkeletonGraph sg(a);
    Rng rng(derive_seed(seed, 0xc0de));
    std::vector<std::vector<int>> rows(static_cast<size_t>(a.m())), cols(static_cast<size_t>(a.n()));
    for (int i = 0; i < sg.size; ++i) {
        rows[static_cast<size_t>(sg.cells[static_cast<size_t>(i)].row - 1)].push_back(i);
        cols[static_cast<size_t>(sg.cells[static_cast<size_t>(i)].col - 1)].push_back(i);
    }
    for (int attempt = 0; attempt < budget; ++attempt) {
        CompatiblePair p;
        p.cells = sg.cells;
        p.omega_r.assign(static_cast<size_t>(sg.size), -1);
        p.omega_c.assign(static_cast<size_t>(sg.size), -1);
        for (auto* fam : {&rows, &cols}) {
            auto& omega = fam == &rows ? p.omega_r : p.omega_c;
            for (auto line : *fam) { // copy, then shuffle into a random cycle
                if (line.empty()) continue;
                rng.shuffle(line);
                for (size_t i = 0; i < line.size(); ++i)
                    omega[static_cast<size_t>(line[i])] = line[(i + 1) % line.size()];
            }
        }
        if (is_compatible(p)) return p;
    }
    return std::nullopt;
}

Embedding build_biembedding(const PFArray& a, const Subgroup& j, const Params& p, const CompatiblePair& pair) {
    const FiniteGroup& g = *a.group();
    if (!g.abelian()) throw invariant_violation("face tracing requires an abelian group");
    if (!verify_array(a, j, p).pass()) throw invariant_violation("array does not verify");
    if (!is_compatible(pair)) throw invariant_violation("orderings are not compatible");

    SkeletonGraph sg(a);
    int v = g.order();
    Embedding e;
    e.group = a.group();
    e.j = j;
    e.t = j.t();
    e.q = v / j.t();
    e.vertices = v;
    e.edges = static_cast<int64_t>(v) * sg.size;

    // entry sequences per line in the pair's cyclic order, anchored at the
    // first skeleton cell of the line; edge_seen checks that each directed
    // edge copy (cell, source vertex) lands on exactly one face
    auto trace_family = [&](bool rows_family) {
        std::vector<std::vector<Elem>> faces;
        const std::vector<int>& omega = rows_family ? pair.omega_r : pair.omega_c;
        std::vector<char> line_done(static_cast<size_t>(rows_family ? a.m() : a.n()) + 1, 0);
        std::vector<char> edge_seen(static_cast<size_t>(sg.size) * static_cast<size_t>(v), 0);
        for (int ci = 0; ci < sg.size; ++ci) {
            int line = rows_family ? sg.cells[static_cast<size_t>(ci)].row : sg.cells[static_cast<size_t>(ci)].col;
            if (line_done[static_cast<size_t>(line)]) continue;
            line_done[static_cast<size_t>(line)] = 1;
            std::vector<std::pair<int, Elem>> entries; // (cell index, value)
            int cur = ci;
            do {
                const Cell& c = sg.cells[static_cast<size_t>(cur)];
                if ((rows_family ? c.row : c.col) != line)
                    throw invariant_violation("ordering leaves its line");
                entries.emplace_back(cur, a.get(c.row, c.col));
                cur = omega[static_cast<size_t>(cur)];
            } while (cur != ci);
            int line_cells = static_cast<int>(
                (rows_family ? a.row_cells(line) : a.col_cells(line)).size());
            if (static_cast<int>(entries.size()) != line_cells)
                throw invariant_violation("ordering is not a single cycle on its line");
            Elem s = g.zero();
            for (const auto& [idx, x] : entries) s = g.add(s, x);
            if (s == g.zero()) throw invariant_violation("line sum vanished during tracing");
            int ord = g.element_order(s);
            // translates g0 + <s> give the same face; one face per coset of <s>
            std::vector<char> seen(static_cast<size_t>(v), 0);
            for (Elem g0 = 0; g0 < v; ++g0) {
                if (seen[static_cast<size_t>(g0)]) continue;
                Elem mark = g0;
                for (int l = 0; l < ord; ++l) {
                    seen[static_cast<size_t>(mark)] = 1;
                    mark = g.add(mark, s);
                }
                std::vector<Elem> walk;
                Elem cur_v = g0;
                for (int l = 0; l < ord; ++l)
                    for (const auto& [idx, x] : entries) {
                        auto& flag = edge_seen[static_cast<size_t>(idx) * static_cast<size_t>(v) +
                                               static_cast<size_t>(cur_v)];
                        if (flag) throw invariant_violation("directed edge on two faces");
                        flag = 1;
                        walk.push_back(cur_v);
                        cur_v = g.add(cur_v, x);
                    }
                if (cur_v != g0) throw invariant_violation("face walk failed to close");
                faces.push_back(std::move(walk));
            }
        }
        for (char f : edge_seen)
            if (!f) throw invariant_violation("some directed edge is on no face");
        return faces;
    };
    e.row_faces = trace_family(true);
    e.col_faces = trace_family(false);

    // underlying graph: lambda parallel edges across cosets, none inside
    {
        std::vector<int64_t> cnt(static_cast<size_t>(v), 0);
        for (Elem x : a.entries()) cnt[static_cast<size_t>(x)]++;
        auto cosets = coset_index_map(g, j);
        for (Elem d = 0; d < v; ++d) {
            int64_t mult = cnt[static_cast<size_t>(d)] + (g.neg(d) == d ? cnt[static_cast<size_t>(d)]
                                                                        : cnt[static_cast<size_t>(g.neg(d))]);
            bool same_coset = cosets[static_cast<size_t>(d)] == cosets[0];
            if (same_coset && mult != 0)
                throw invariant_violation("edges inside a part");
            if (!same_coset && mult != p.lambda)
                throw invariant_violation("cross-part multiplicity is not lambda");
        }
    }

    int64_t faces_total = static_cast<int64_t>(e.row_faces.size() + e.col_faces.size());
    int64_t chi = e.vertices - e.edges + faces_total;
    if (chi > 2 || (2 - chi) % 2 != 0) throw invariant_violation("Euler characteristic is not 2-2g");
    e.genus = (2 - chi) / 2;

    // cellularity proxy: the vertex/face incidence must be connected
    {
        int64_t nodes = static_cast<int64_t>(v) + faces_total;
        std::vector<std::vector<int64_t>> adj(static_cast<size_t>(nodes));
        int64_t fid = v;
        for (const auto* fam : {&e.row_faces, &e.col_faces})
            for (const auto& f : *fam) {
                for (Elem vtx : f) {
                    adj[static_cast<size_t>(vtx)].push_back(fid);
                    adj[static_cast<size_t>(fid)].push_back(vtx);
                }
                ++fid;
            }
        std::vector<char> vis(static_cast<size_t>(nodes), 0);
        std::vector<int64_t> stack{0};
        vis[0] = 1;
        int64_t seen_cnt = 1;
        while (!stack.empty()) {
            int64_t u = stack.back();
            stack.pop_back();
            for (int64_t w : adj[static_cast<size_t>(u)])
                if (!vis[static_cast<size_t>(w)]) {
                    vis[static_cast<size_t>(w)] = 1;
                    ++seen_cnt;
                    stack.push_back(w);
                }
        }
        if (seen_cnt != nodes) throw invariant_violation("embedding is not connected");
    }
    return e;
}

EmbeddingReport embedding_report(const Embedding& e, const Params& p) {
    EmbeddingReport r;
    r.genus = e.genus;
    r.q = e.q;
    r.t = e.t;
    for (const auto& f : e.row_faces) r.row_face_lengths[static_cast<int64_t>(f.size())]++;
    for (const auto& f : e.col_faces) r.col_face_lengths[static_cast<int64_t>(f.size())]++;
    r.row_lengths_ok = true;
    for (const auto& [len, cnt] : r.row_face_lengths)
        if (len % p.h != 0 || len <= p.h) r.row_lengths_ok = false;
    r.col_lengths_ok = true;
    for (const auto& [len, cnt] : r.col_face_lengths)
        if (len % p.k != 0 || len <= p.k) r.col_lengths_ok = false;
    return r;
}

} // namespace nzsh

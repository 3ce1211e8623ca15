#include "nzsh/sweep.hpp"

#include <chrono>

#include "nzsh/rng.hpp"

namespace nzsh {

namespace {

struct Tuple {
    int v, t;
    int64_t lambda;
    int m, n, h, k;
};

std::vector<Tuple> enumerate_tuples(const SweepSpec& spec) {
    std::vector<Tuple> out;
    for (int v = spec.v_min; v <= spec.v_max; ++v) {
        if (spec.parity == 1 && v % 2 == 0) continue;
        if (spec.parity == 2 && v % 2 != 0) continue;
        for (int t = 1; t < v; ++t) {
            if (v % t != 0) continue;
            if (spec.t_fixed && t != spec.t_fixed) continue;
            int vt = v - t;
            for (int64_t nk = 1; nk <= spec.nk_max; ++nk) {
                if (2 * nk % vt != 0) continue;
                int64_t lambda = 2 * nk / vt;
                for (int n = 1; n <= nk; ++n) {
                    if (nk % n != 0) continue;
                    int k = static_cast<int>(nk / n);
                    for (int m = 1; m <= nk; ++m) {
                        if (nk % m != 0) continue;
                        int h = static_cast<int>(nk / m);
                        if (k > m || h > n) continue;
                        if (spec.square_only && m != n) continue;
                        if (spec.totally_filled && (h != n || k != m)) continue;
                        out.push_back({v, t, lambda, m, n, h, k});
                    }
                }
            }
        }
    }
    return out;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    auto tuples = enumerate_tuples(spec);
    std::vector<SweepRow> rows(tuples.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < static_cast<int64_t>(tuples.size()); ++i) {
        const Tuple& tp = tuples[static_cast<size_t>(i)];
        SweepRow& row = rows[static_cast<size_t>(i)];
        auto start = std::chrono::steady_clock::now();
        GroupPtr g = build_group(GroupSpec::cyclic(tp.v));
        Subgroup j = subgroup_of_order(*g, tp.t);
        Params p{tp.m, tp.n, tp.h, tp.k, tp.lambda, tp.t};
        uint64_t seed = derive_seed(spec.seed, hash_ints({tp.v, tp.t, tp.lambda, tp.m, tp.n, tp.h, tp.k}));
        BuildResult res = construct({g, j, p, seed});
        row.group = g->name();
        row.t = tp.t;
        row.lambda = tp.lambda;
        row.m = tp.m;
        row.n = tp.n;
        row.h = tp.h;
        row.k = tp.k;
        switch (res.outcome) {
        case BuildResult::Outcome::Built:
            row.outcome = "built:" + res.tag;
            row.verified = res.report.pass();
            break;
        case BuildResult::Outcome::Infeasible:
            row.outcome = "infeasible";
            break;
        case BuildResult::Outcome::Open:
            row.outcome = "open";
            break;
        }
        row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timings) {
    std::string out = "group,t,lambda,m,n,h,k,outcome,verified";
    if (timings) out += ",wall_ms";
    out += '\n';
    for (const auto& r : rows) {
        out += r.group + ',' + std::to_string(r.t) + ',' + std::to_string(r.lambda) + ',' +
               std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.h) + ',' +
               std::to_string(r.k) + ',' + r.outcome + ',' + (r.verified ? "true" : "false");
        if (timings) out += ',' + std::to_string(r.wall_ms);
        out += '\n';
    }
    return out;
}

} // namespace nzsh

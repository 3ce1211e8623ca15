#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nzsh/json_io.hpp"
#include "nzsh/sweep.hpp"

using nlohmann::json;
using namespace nzsh;

namespace {

constexpr int kExitBuilt = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitOpen = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct ConstructArgs {
    std::string group = "z:7";
    int t = 1;
    int64_t lambda = 1;
    int m = 0, n = 0, h = 0, k = 0;
    std::string out;
    std::string grid;
    std::string plan_path;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

LoadedArray load_array(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw bad_params("cannot open " + path);
    json doc = json::parse(f);
    return array_from_json(doc);
}

int cmd_construct(const ConstructArgs& args, uint64_t seed, bool as_json) {
    GroupPtr g = build_group(parse_group_spec(args.group));
    Subgroup j = subgroup_of_order(*g, args.t);
    Params p{args.m, args.n, args.h, args.k, args.lambda, args.t};
    BuildResult res = construct({g, j, p, seed});

    json out{{"outcome", res.outcome == BuildResult::Outcome::Built
                             ? "built"
                             : res.outcome == BuildResult::Outcome::Infeasible ? "infeasible" : "open"},
             {"tag", res.tag},
             {"seed", seed}};
    if (res.array) {
        out["array"] = array_to_json(*res.array, j, args.lambda);
        out["verify"] = report_to_json(res.report);
    }
    if (res.plan && !args.plan_path.empty()) write_file(args.plan_path, plan_to_json(*res.plan).dump(2) + "\n");
    if (res.array && !args.out.empty())
        write_file(args.out, array_to_json(*res.array, j, args.lambda).dump(2) + "\n");
    if (res.array && !args.grid.empty()) write_file(args.grid, grid_csv(*res.array));

    if (as_json)
        std::cout << out.dump(2) << "\n";
    else if (res.outcome == BuildResult::Outcome::Built)
        std::cout << "built via " << res.tag << ", verify "
                  << (res.report.pass() ? "pass" : "FAIL") << "\n"
                  << grid_csv(*res.array);
    else
        std::cout << (res.outcome == BuildResult::Outcome::Infeasible ? "infeasible: " : "open: ") << res.tag
                  << "\n";

    switch (res.outcome) {
    case BuildResult::Outcome::Built: return kExitBuilt;
    case BuildResult::Outcome::Infeasible: return kExitInfeasible;
    case BuildResult::Outcome::Open: return kExitOpen;
    }
    return kExitOpen;
}

int cmd_verify(const std::string& path, bool as_json) {
    LoadedArray la = load_array(path);
    VerifyReport rep = verify_array(la.array, la.j, la.params);
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else {
        std::cout << (rep.pass() ? "pass" : "FAIL") << "\n";
        for (const auto& f : rep.failures)
            std::cout << f.kind << " @" << f.index << ": " << f.detail << "\n";
    }
    return rep.pass() ? kExitBuilt : kExitVerifyFail;
}

int cmd_tour(const std::string& path, uint64_t seed, int limit, int attempts, bool as_json) {
    LoadedArray la = load_array(path);
    std::optional<Orientation> ori;
    bool exhausted = false;
    try {
        ori = solve_knight(la.array, limit);
    } catch (const Error&) {
        ori = solve_knight_randomized(la.array, seed, attempts);
        exhausted = !ori.has_value();
    }
    json out;
    if (ori) {
        KnightSequence seq = knight_sequence(la.array, *ori, la.array.skeleton().front());
        out = json{{"solution", orientation_to_json(*ori)}, {"cycle_length", seq.cells.size()},
                   {"skeleton", la.array.fill_count()}};
    } else {
        out = json{{"solution", nullptr}, {"exhausted_budget", exhausted}};
    }
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << (ori ? "solution found" : exhausted ? "budget exhausted" : "no solution") << "\n";
    return exhausted ? kExitOpen : kExitBuilt;
}

int cmd_embed(const std::string& path, uint64_t seed, int budget, bool as_json) {
    LoadedArray la = load_array(path);
    auto pair = compatible_orderings(la.array, seed, budget);
    if (!pair) {
        std::cout << (as_json ? "{\"compatible\": null}" : "no compatible orderings within budget") << "\n";
        return kExitOpen;
    }
    Embedding e = build_biembedding(la.array, la.j, la.params, *pair);
    EmbeddingReport rep = embedding_report(e, la.params);
    if (as_json)
        std::cout << embedding_to_json(e, rep).dump(2) << "\n";
    else
        std::cout << "genus " << e.genus << ", faces " << e.row_faces.size() + e.col_faces.size() << ", parts "
                  << e.q << "x" << e.t << "\n";
    return kExitBuilt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-fold non-zero sum Heffter arrays over finite groups"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool as_json = false;
    app.add_option("--seed", seed, "master seed");
    app.add_flag("--json", as_json, "machine-readable output");

    ConstructArgs cargs;
    auto* c = app.add_subcommand("construct", "build an array for the given parameters");
    c->set_help_flag("--help", "print help");
    c->add_option("--group", cargs.group, "group spec: z:V | prod:AxBx.. | e2:R | cayley:PATH")->required();
    c->add_option("--t", cargs.t, "subgroup order")->required();
    c->add_option("--lambda", cargs.lambda, "fold parameter")->required();
    c->add_option("--m", cargs.m)->required();
    c->add_option("--n", cargs.n)->required();
    c->add_option("--h", cargs.h, "filled cells per row (default n)");
    c->add_option("--k", cargs.k, "filled cells per column (default m)");
    c->add_option("--out", cargs.out, "write the array JSON here");
    c->add_option("--grid-csv", cargs.grid, "write the grid as CSV here");
    c->add_option("--dump-plan", cargs.plan_path, "write the tile plan JSON here");

    std::string verify_path;
    auto* v = app.add_subcommand("verify", "check an array file");
    v->add_option("file", verify_path)->required();

    std::string tour_path;
    int tour_limit = 30, tour_attempts = 20000;
    auto* t = app.add_subcommand("tour", "search row/column orientations covering the skeleton");
    t->add_option("file", tour_path)->required();
    t->add_option("--limit", tour_limit, "max exhaustive bits");
    t->add_option("--attempts", tour_attempts, "random attempts past the limit");

    std::string embed_path;
    int embed_budget = 2000;
    auto* e = app.add_subcommand("embed", "face-trace the surface embedding");
    e->add_option("file", embed_path)->required();
    e->add_option("--budget", embed_budget, "fallback ordering attempts");

    SweepSpec sspec;
    std::string sweep_out;
    std::string parity = "any";
    auto* s = app.add_subcommand("sweep", "construct across a parameter range, CSV out");
    s->add_option("--v-min", sspec.v_min)->required();
    s->add_option("--v-max", sspec.v_max)->required();
    s->add_option("--parity", parity, "any | odd | even");
    s->add_option("--t", sspec.t_fixed, "fix the subgroup order (default: every divisor)");
    s->add_option("--nk-max", sspec.nk_max);
    s->add_flag("--square-only", sspec.square_only);
    s->add_flag("--totally-filled", sspec.totally_filled);
    s->add_flag("--timings", sspec.timings, "include wall_ms (not reproducible byte-for-byte)");
    s->add_option("--out", sweep_out, "CSV path (default stdout)");

    auto* b = app.add_subcommand("bound", "print the exact expected-value bounds");
    b->set_help_flag("--help", "print help");
    int bm = 0, bn = 0, bh = 0, bk = 0;
    int64_t blambda = 1;
    std::string tile_family;
    int tile_b = 0, tile_m = 0, tile_n = 0;
    bool dump_regimes = false;
    b->add_option("--m", bm);
    b->add_option("--n", bn);
    b->add_option("--h", bh);
    b->add_option("--k", bk);
    b->add_option("--lambda", blambda);
    b->add_option("--tile", tile_family, "tile family name");
    b->add_option("--b", tile_b, "tile length parameter");
    b->add_option("--tile-m", tile_m, "ambient rows for the tile (default generous)");
    b->add_option("--tile-n", tile_n, "ambient columns for the tile (default generous)");
    b->add_flag("--regimes", dump_regimes, "dump the guaranteed-construction table as JSON");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err); // --help
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (c->parsed()) {
            if (cargs.h == 0) cargs.h = cargs.n;
            if (cargs.k == 0) cargs.k = cargs.m;
            return cmd_construct(cargs, seed, as_json);
        }
        if (v->parsed()) return cmd_verify(verify_path, as_json);
        if (t->parsed()) return cmd_tour(tour_path, seed, tour_limit, tour_attempts, as_json);
        if (e->parsed()) return cmd_embed(embed_path, seed, embed_budget, as_json);
        if (s->parsed()) {
            sspec.parity = parity == "odd" ? 1 : parity == "even" ? 2 : 0;
            sspec.seed = seed;
            auto rows = run_sweep(sspec);
            std::string csv = sweep_csv(rows, sspec.timings);
            if (sweep_out.empty())
                std::cout << csv;
            else
                write_file(sweep_out, csv);
            return kExitBuilt;
        }
        if (b->parsed()) {
            json out = json::object();
            if (dump_regimes) out["regimes"] = regimes_to_json();
            if (bm > 0) {
                auto rep = expected_zero_bound(bm, bn, bh, bk, blambda);
                out["array_bound"] = {{"rows", rep.ex_rows.str()},
                                      {"cols", rep.ex_cols.str()},
                                      {"total", rep.total.str()},
                                      {"feasible", rep.feasible}};
            }
            if (!tile_family.empty()) {
                auto fam = family_from_name(tile_family);
                if (!fam) throw bad_params("unknown tile family " + tile_family);
                int w = *fam == TileFamily::Diag4b ? 4 : *fam == TileFamily::Diag5b ? 5 : 3;
                int am = tile_m > 0 ? tile_m : std::max(3 * tile_b + 3, 24);
                int an = tile_n > 0 ? tile_n : std::max(tile_b + w + 2, 24);
                Tile tile = tile_catalog(*fam, tile_b, {1, 1}, am, an);
                auto rep = tile_bound(tile);
                out["tile_bound"] = {{"family", tile_family},
                                     {"b", tile_b},
                                     {"rows", rep.ex_rows.str()},
                                     {"cols", rep.ex_cols.str()},
                                     {"total", rep.total.str()},
                                     {"feasible", rep.feasible}};
            }
            std::cout << out.dump(2) << "\n";
            return kExitBuilt;
        }
    } catch (const nlohmann::json::exception& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitData;
    } catch (const Error& ex) {
        std::cerr << ex.what() << "\n";
        bool data_error = std::string(ex.kind()) == "CayleyInvalid" || std::string(ex.kind()) == "BadParams";
        return data_error ? kExitData : kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

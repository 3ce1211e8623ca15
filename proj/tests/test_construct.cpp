#include <doctest.h>

#include <array>

#include "nzsh/construct.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace nzsh;

namespace {

BuildRequest req_of(GroupPtr g, int t, Params p, uint64_t seed = 0) {
    auto j = subgroup_of_order(*g, t);
    p.t = t;
    return BuildRequest{std::move(g), std::move(j), p, seed};
}

void check_verified(const BuildResult& res, const std::string& tag) {
    REQUIRE(res.outcome == BuildResult::Outcome::Built);
    CHECK(res.tag == tag);
    CHECK(res.report.pass());
}

} // namespace

TEST_CASE("the seven by seven reference grid is reproduced cell for cell") {
    auto res = construct(req_of(build_group(GroupSpec::cyclic(3)), 1, Params{7, 7, 3, 3, 21}));
    check_verified(res, "v3_direct");
    // 1 = 1, 2 = -1, 0 = empty
    const std::array<std::array<int, 7>, 7> want = {{{1, 2, 2, 0, 0, 0, 0},
                                                     {0, 1, 1, 2, 0, 0, 0},
                                                     {0, 0, 1, 2, 2, 0, 0},
                                                     {0, 0, 0, 1, 1, 2, 0},
                                                     {0, 0, 0, 0, 1, 2, 1},
                                                     {2, 0, 0, 0, 0, 1, 2},
                                                     {1, 2, 0, 0, 0, 0, 1}}};
    for (int r = 1; r <= 7; ++r)
        for (int c = 1; c <= 7; ++c) {
            int w = want[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            CHECK(res.array->filled(r, c) == (w != 0));
            if (w) CHECK(res.array->get(r, c) == w);
        }
}

TEST_CASE("the four by six reference grid is reproduced cell for cell") {
    auto res = construct(req_of(build_group(GroupSpec::cyclic(3)), 1, Params{4, 6, 3, 2, 12}));
    check_verified(res, "v3_direct");
    const std::array<std::array<int, 6>, 4> want = {{{1, 1, 2, 0, 0, 0},
                                                     {1, 1, 2, 0, 0, 0},
                                                     {0, 0, 0, 1, 1, 2},
                                                     {0, 0, 0, 1, 1, 2}}};
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 6; ++c) {
            int w = want[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
            CHECK(res.array->filled(r, c) == (w != 0));
            if (w) CHECK(res.array->get(r, c) == w);
        }
}

TEST_CASE("order-2 constructions") {
    auto z2 = build_group(GroupSpec::cyclic(2));
    check_verified(construct(req_of(z2, 1, Params{3, 3, 3, 3, 18})), "z2_all_ones");
    check_verified(construct(req_of(z2, 1, Params{3, 9, 3, 1, 18})), "z2_all_ones");
    auto res = construct(req_of(z2, 1, Params{2, 2, 2, 2, 4}));
    CHECK(res.outcome == BuildResult::Outcome::Infeasible); // h*k even
}

TEST_CASE("single row constructions") {
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(5)), 1, Params{1, 2, 2, 1, 1})), "one_row");
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(2)), 1, Params{1, 3, 3, 1, 6})), "z2_all_ones");
    // single column via transposition
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(7)), 1, Params{3, 1, 1, 3, 1})), "one_row");
    // non-abelian, even and odd fold
    check_verified(construct({testing::s3(), trivial_subgroup(), Params{1, 5, 5, 1, 2, 1}, 0}), "one_row");
    check_verified(construct({testing::s3(), trivial_subgroup(), Params{1, 10, 10, 1, 4, 1}, 0}), "one_row");
    check_verified(construct({testing::q8(), Subgroup{{0, 1}}, Params{1, 9, 9, 1, 3, 2}, 0}), "one_row");
    // elementary 2-groups: the sharp parity conditions
    auto e22 = build_group(GroupSpec::elementary2(2));
    check_verified(construct(req_of(e22, 2, Params{1, 2, 2, 1, 2})), "one_row");
    CHECK(construct(req_of(e22, 2, Params{1, 4, 4, 1, 4})).outcome == BuildResult::Outcome::Infeasible);
    CHECK(construct(req_of(e22, 1, Params{1, 3, 3, 1, 2})).outcome == BuildResult::Outcome::Infeasible);
    auto e23 = build_group(GroupSpec::elementary2(3));
    check_verified(construct(req_of(e23, 2, Params{1, 6, 6, 1, 2})), "one_row");
    CHECK(construct(req_of(e23, 4, Params{1, 2, 2, 1, 1})).outcome == BuildResult::Outcome::Infeasible);
}

TEST_CASE("order-3 constructions cover every shape") {
    auto z3 = build_group(GroupSpec::cyclic(3));
    check_verified(construct(req_of(z3, 1, Params{3, 3, 3, 3, 9})), "v3_direct");
    check_verified(construct(req_of(z3, 1, Params{6, 4, 2, 3, 12})), "v3_direct");
    check_verified(construct(req_of(z3, 1, Params{9, 9, 3, 3, 27})), "v3_direct");
    check_verified(construct(req_of(z3, 1, Params{6, 6, 6, 6, 36})), "v3_direct");
}

TEST_CASE("square arrays over odd abelian groups") {
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(15)), 3, Params{6, 6, 3, 3, 3})),
                   "odd_abelian_square");
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(7)), 1, Params{3, 3, 3, 3, 3})),
                   "odd_abelian_square");
    // k = 1: any diagonal placement works
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(9)), 1, Params{4, 4, 1, 1, 1})),
                   "odd_abelian_square");
    // non-cyclic odd abelian
    check_verified(construct(req_of(build_group(parse_group_spec("prod:3x3")), 1, Params{4, 4, 4, 4, 4})),
                   "odd_abelian_square");
    check_verified(construct(req_of(build_group(parse_group_spec("prod:3x5")), 3, Params{6, 6, 2, 2, 2})),
                   "odd_abelian_square");
    // run the construction across many shapes so the sign-choice and
    // row-flip phases all fire somewhere
    for (int n : {4, 5, 6, 7, 8})
        for (int k = 2; k <= n; ++k) {
            int64_t nk2 = 2LL * n * k;
            for (int t : {1, 3, 5})
                for (int v = t + 4; v <= 45; v += 2) {
                    if (v % 2 == 0 || v % t) continue;
                    int vt = v - t;
                    if (nk2 % vt) continue;
                    auto g = build_group(GroupSpec::cyclic(v));
                    auto res = construct(req_of(g, t, Params{n, n, k, k, nk2 / vt}));
                    CAPTURE(v);
                    CAPTURE(t);
                    CAPTURE(n);
                    CAPTURE(k);
                    REQUIRE(res.outcome == BuildResult::Outcome::Built);
                    CHECK(res.report.pass());
                }
        }
}

TEST_CASE("single filled cell per row") {
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(13)), 1, Params{6, 2, 1, 3, 1})), "h1");
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(9)), 1, Params{4, 2, 1, 2, 1})), "h1");
    // k = 1 diagonal
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(5)), 1, Params{2, 2, 1, 1, 1})),
                   "odd_abelian_square");
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(10)), 2, Params{4, 4, 1, 1, 1})), "h1");
    // transposed regime (k = 1, h > 1)
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(13)), 1, Params{2, 6, 3, 1, 1})), "h1");
    // the zero-column repair has to fire somewhere in this range
    for (int v : {9, 11, 13, 17, 19, 25}) {
        auto g = build_group(GroupSpec::cyclic(v));
        for (int k : {3, 4, 5}) {
            for (int n = 2; n <= 6; ++n) {
                int m = n * k;
                int64_t twice = 2LL * n * k;
                if (twice % (v - 1)) continue;
                auto res = construct(req_of(g, 1, Params{m, n, 1, k, twice / (v - 1)}));
                REQUIRE(res.outcome == BuildResult::Outcome::Built);
                CHECK(res.report.pass());
            }
        }
    }
}

TEST_CASE("two cells per line squares") {
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(25)), 1, Params{6, 6, 2, 2, 1})),
                   "odd_abelian_square");
    // odd abelian squares route to the diagonal construction first, so use
    // even-order groups to exercise this path
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(10)), 2, Params{4, 4, 2, 2, 2})), "nk2");
    check_verified(construct(req_of(build_group(GroupSpec::cyclic(12)), 4, Params{6, 6, 2, 2, 3})), "nk2");
    auto z6 = build_group(GroupSpec::cyclic(6));
    CHECK_THROWS_AS(construct_nk2(req_of(z6, 3, Params{3, 3, 2, 2, 4})), Error); // v-t = 3
}

TEST_CASE("forbidden targets follow the proof prescription") {
    auto z19 = build_group(GroupSpec::cyclic(19));
    // 3x6 totally filled: two rect3b tiles side by side
    TilePlan plan = plan_tiling(3, 6, 6, 3);
    REQUIRE(plan.tiles.size() == 2);
    PFArray partial(3, 6, z19);

    auto fr = forbidden_targets(partial, plan.skeleton, plan.tiles[0], {1, 2, 3, 4, 5, 6, 7, 8, 9});
    // first tile: columns close, rows stay open
    CHECK(fr.forbidden_rows.empty());
    REQUIRE(fr.forbidden_cols.size() == 3);
    for (const auto& [c, target] : fr.forbidden_cols) CHECK(target == 0);

    // place the first tile, then the closing tile must negate the row prefix
    TileFill fill = fill_tile(*z19, fr, 3);
    for (size_t i = 0; i < plan.tiles[0].cells.size(); ++i) {
        const Cell& c = plan.tiles[0].cells[i];
        partial.set(c.row, c.col, fill.values[i]);
    }
    auto fr2 = forbidden_targets(partial, plan.skeleton, plan.tiles[1], {10, 11, 12, 13, 14, 15, 16, 17, 18});
    REQUIRE(fr2.forbidden_rows.size() == 3);
    for (const auto& [r, target] : fr2.forbidden_rows) {
        Elem prefix = z19->zero();
        for (int c = 1; c <= 3; ++c) prefix = z19->add(prefix, partial.get(r, c));
        CHECK(target == z19->neg(prefix));
    }
}

TEST_CASE("tiling assembly across the regimes") {
    struct Case {
        const char* group;
        int t;
        Params p;
    };
    for (const Case& c : {
             Case{"z:19", 1, Params{3, 3, 3, 3, 1}},
             Case{"z:31", 1, Params{5, 9, 9, 5, 3}},
             Case{"z:43", 1, Params{7, 7, 3, 3, 1}},
             Case{"z:37", 1, Params{9, 6, 2, 3, 1}},
             Case{"z:34", 2, Params{8, 4, 2, 4, 1}},
             Case{"z:25", 1, Params{8, 12, 9, 6, 6}},
             Case{"z:44", 2, Params{7, 7, 6, 6, 2}},
             Case{"prod:5x5", 1, Params{6, 6, 4, 4, 2}},
         }) {
        CAPTURE(c.group);
        auto g = build_group(parse_group_spec(c.group));
        auto r = req_of(g, c.t, c.p, 11);
        PFArray a = assemble_by_tiling(r);
        Params p = c.p;
        p.t = c.t;
        CHECK(verify_array(a, r.j, p).pass());
    }
}

TEST_CASE("tiling over a non-abelian group respects ordered sums") {
    // dihedral of order 36: reflections are involutions, so lambda stays even
    auto g = testing::dihedral(18);
    REQUIRE_FALSE(g->abelian());
    auto j = trivial_subgroup();
    // totally filled 5x7, v - t = 35 >= 15
    Params p{5, 7, 7, 5, 2, 1};
    auto res = construct({g, j, p, 77});
    REQUIRE(res.outcome == BuildResult::Outcome::Built);
    CHECK(res.tag == "tiling_total");
    CHECK(res.report.pass());
    // diagonal bands over a non-abelian group of order 40
    auto g2 = testing::dihedral(20);
    auto res3 = construct({g2, j, Params{13, 13, 3, 3, 2, 1}, 78});
    REQUIRE(res3.outcome == BuildResult::Outcome::Built);
    CHECK(res3.tag == "tiling_r3");
    CHECK(res3.report.pass());
    // one cell per row with the boundary repair, and the single-row swap
    auto res4 = construct({g, j, Params{35, 7, 1, 5, 2, 1}, 79});
    REQUIRE(res4.outcome == BuildResult::Outcome::Built);
    CHECK(res4.tag == "h1");
    CHECK(res4.report.pass());
    auto res5 = construct({g, j, Params{1, 35, 35, 1, 2, 1}, 80});
    REQUIRE(res5.outcome == BuildResult::Outcome::Built);
    CHECK(res5.tag == "one_row");
    CHECK(res5.report.pass());
}

TEST_CASE("dispatcher is deterministic for a fixed seed") {
    auto g = build_group(GroupSpec::cyclic(43));
    auto r1 = construct(req_of(g, 1, Params{7, 7, 3, 3, 1}, 99));
    auto r2 = construct(req_of(g, 1, Params{7, 7, 3, 3, 1}, 99));
    REQUIRE(r1.outcome == BuildResult::Outcome::Built);
    REQUIRE(r2.outcome == BuildResult::Outcome::Built);
    for (int r = 1; r <= 7; ++r)
        for (int c = 1; c <= 7; ++c) {
            CHECK(r1.array->filled(r, c) == r2.array->filled(r, c));
            if (r1.array->filled(r, c)) CHECK(r1.array->get(r, c) == r2.array->get(r, c));
        }
}

TEST_CASE("dispatcher matches the exhaustive oracle on tiny parameters") {
    // spot checks; the acceptance suite runs the whole region
    auto z4 = build_group(GroupSpec::cyclic(4));
    auto z5 = build_group(GroupSpec::cyclic(5));
    auto e22 = build_group(GroupSpec::elementary2(2));
    struct Case {
        GroupPtr g;
        int t;
        Params p;
    };
    for (const Case& c : {
             Case{z5, 1, Params{2, 2, 2, 2, 2}},
             Case{z5, 1, Params{1, 2, 2, 1, 1}},
             Case{z4, 1, Params{1, 3, 3, 1, 2}},
             Case{z4, 2, Params{2, 2, 2, 2, 4}},
             Case{e22, 2, Params{2, 2, 2, 2, 4}},
             Case{e22, 1, Params{3, 3, 2, 2, 4}},
             Case{z5, 1, Params{3, 2, 2, 3, 3}},
         }) {
        auto j = subgroup_of_order(*c.g, c.t);
        Params p = c.p;
        p.t = c.t;
        bool oracle_says = oracle::exists_array(*c.g, j, p);
        auto res = construct({c.g, j, p, 5});
        CAPTURE(c.g->name());
        CAPTURE(p.m);
        CAPTURE(p.n);
        CAPTURE(p.h);
        CAPTURE(p.k);
        CAPTURE(p.lambda);
        if (oracle_says) {
            CHECK(res.outcome == BuildResult::Outcome::Built);
            CHECK(res.report.pass());
        } else {
            CHECK(res.outcome == BuildResult::Outcome::Infeasible);
        }
    }
}

TEST_CASE("every built array passes verification across a mixed sweep") {
    for (int v : {29, 31, 33}) {
        auto g = build_group(GroupSpec::cyclic(v));
        for (int t = 1; t < v; ++t) {
            if (v % t) continue;
            auto j = subgroup_of_order(*g, t);
            int vt = v - t;
            for (int64_t nk = 1; nk <= 40; ++nk) {
                if (2 * nk % vt) continue;
                int64_t lambda = 2 * nk / vt;
                for (int n = 1; n <= nk; ++n) {
                    if (nk % n) continue;
                    int k = static_cast<int>(nk / n);
                    if (k > nk) continue;
                    for (int m = k; m <= nk; ++m) {
                        if (nk % m) continue;
                        int h = static_cast<int>(nk / m);
                        if (h > n || k > m) continue;
                        Params p{m, n, h, k, lambda, t};
                        auto res = construct({g, j, p, 17});
                        CAPTURE(v);
                        CAPTURE(t);
                        CAPTURE(m);
                        CAPTURE(n);
                        CAPTURE(h);
                        CAPTURE(k);
                        REQUIRE(res.outcome == BuildResult::Outcome::Built);
                        CHECK(res.report.pass());
                    }
                }
            }
        }
    }
}

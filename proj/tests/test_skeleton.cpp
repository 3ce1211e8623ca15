#include <doctest.h>

#include <set>

#include "nzsh/skeleton.hpp"

using namespace nzsh;

namespace {

std::set<std::pair<int, int>> cellset(const std::vector<Cell>& cells) {
    std::set<std::pair<int, int>> out;
    for (const Cell& c : cells) out.insert({c.row, c.col});
    return out;
}

void check_counts(const CellSet& b, int h, int k) {
    std::vector<int> rc(static_cast<size_t>(b.m + 1), 0), cc(static_cast<size_t>(b.n + 1), 0);
    for (const Cell& c : b.cells) {
        rc[static_cast<size_t>(c.row)]++;
        cc[static_cast<size_t>(c.col)]++;
    }
    for (int r = 1; r <= b.m; ++r) CHECK(rc[static_cast<size_t>(r)] == h);
    for (int c = 1; c <= b.n; ++c) CHECK(cc[static_cast<size_t>(c)] == k);
}

} // namespace

TEST_CASE("coset skeleton line counts") {
    check_counts(coset_skeleton(3, 3, 3, 3), 3, 3);
    CHECK(coset_skeleton(3, 3, 3, 3).cells.size() == 9);

    auto b = coset_skeleton(6, 4, 2, 3);
    CHECK(b.cells.size() == 12);
    check_counts(b, 2, 3);

    auto d = coset_skeleton(7, 7, 3, 3);
    check_counts(d, 3, 3);
    // three consecutive wrapped diagonals
    for (const Cell& c : d.cells) {
        int diff = ((c.col - c.row) % 7 + 7) % 7;
        CHECK(diff <= 2);
    }

    for (auto [m, n, h, k] : {std::array<int, 4>{9, 6, 2, 3}, {10, 4, 2, 5}, {8, 12, 9, 6}, {12, 6, 3, 6}})
        check_counts(coset_skeleton(m, n, h, k), h, k);

    CHECK_THROWS_AS(coset_skeleton(3, 3, 2, 3), Error);
}

TEST_CASE("order-3 skeleton matches the reference block figure") {
    auto sk = v3_skeleton(7, 7, 3, 3);
    std::set<std::pair<int, int>> expect_b;
    for (int i = 1; i <= 7; ++i)
        for (int d = 0; d < 3; ++d) expect_b.insert({i, (i + d - 1) % 7 + 1});
    CHECK(cellset(sk.b.cells) == expect_b);

    std::set<int> h1_rows, h2_cols;
    for (const Cell& c : sk.h1.cells) h1_rows.insert(c.row);
    for (const Cell& c : sk.h2.cells) h2_cols.insert(c.col);
    CHECK(h1_rows == std::set<int>{2, 3, 6});
    CHECK(h2_cols == std::set<int>{2, 3, 6});

    // flip sets within the skeleton
    for (const Cell& c : sk.h1.cells) CHECK(sk.b.contains(c));
    for (const Cell& c : sk.h2.cells) CHECK(sk.b.contains(c));
}

TEST_CASE("order-3 skeleton for the rectangular example") {
    auto sk = v3_skeleton(4, 6, 3, 2);
    std::set<std::pair<int, int>> expect_b;
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 3; ++c) {
            expect_b.insert({r, c});
            expect_b.insert({r + 2, c + 3});
        }
    CHECK(cellset(sk.b.cells) == expect_b);
    CHECK(sk.h1.cells.empty()); // 3 does not divide k=2
    std::set<int> cols;
    for (const Cell& c : sk.h2.cells) cols.insert(c.col);
    CHECK(cols == std::set<int>{3, 6});

    auto sq = v3_skeleton(3, 3, 3, 3);
    CHECK(sq.b.cells.size() == 9);
    std::set<int> rows3, cols3;
    for (const Cell& c : sq.h1.cells) rows3.insert(c.row);
    for (const Cell& c : sq.h2.cells) cols3.insert(c.col);
    CHECK(rows3 == std::set<int>{3});
    CHECK(cols3 == std::set<int>{3});
}

TEST_CASE("square diagonal skeletons") {
    auto b = square_diagonal_skeleton(5, 2);
    CHECK(b.cells.size() == 10);
    check_counts(b, 2, 2);

    CHECK(square_diagonal_skeleton(3, 3).cells.size() == 9);

    auto c = square_diagonal_skeleton(6, 3);
    CHECK(c.cells.size() == 18);
    check_counts(c, 3, 3);
    for (const Cell& cell : c.cells) {
        int diff = ((cell.row - cell.col) % 6 + 6) % 6;
        CHECK(diff <= 2);
    }
}

TEST_CASE("tile catalog builds the stair figure") {
    Tile t = tile_catalog(TileFamily::Stair32, 3, {1, 1}, 9, 6);
    CHECK(t.size() == 18);
    std::set<std::pair<int, int>> expect;
    for (int s = 0; s < 3; ++s)
        for (int dr = 0; dr < 3; ++dr)
            for (int dc = 0; dc < 2; ++dc) expect.insert({3 * s + dr + 1, 2 * s + dc + 1});
    CHECK(cellset(t.cells) == expect);
    CHECK(t.row_start.at(4) == 3);
    CHECK(t.col_start.at(3) == 4);
}

TEST_CASE("tile catalog diagonal families") {
    Tile d = tile_catalog(TileFamily::Diag3b, 5, {1, 1}, 5, 5);
    CHECK(d.size() == 15);
    std::vector<int> rc(6, 0), cc(6, 0);
    for (const Cell& c : d.cells) {
        rc[static_cast<size_t>(c.row)]++;
        cc[static_cast<size_t>(c.col)]++;
    }
    for (int i = 1; i <= 5; ++i) {
        CHECK(rc[static_cast<size_t>(i)] == 3);
        CHECK(cc[static_cast<size_t>(i)] == 3);
    }

    // interior tile: no wrap, pyramid column profile
    Tile e = tile_catalog(TileFamily::Diag3b, 4, {2, 3}, 12, 12);
    CHECK(e.size() == 12);
    CHECK(e.row_start.at(2) == 3);
    CHECK(e.col_start.at(3) == 2);
}

TEST_CASE("tile catalog rejects family bound violations") {
    CHECK_THROWS_AS(tile_catalog(TileFamily::Rect2b, 3, {1, 1}, 8, 8), Error);
    CHECK_THROWS_AS(tile_catalog(TileFamily::Rect3b, 2, {1, 1}, 8, 8), Error);
    CHECK_THROWS_AS(tile_catalog(TileFamily::Stair32, 1, {1, 1}, 8, 8), Error);
    CHECK_THROWS_AS(tile_catalog(TileFamily::DStair21, 2, {1, 1}, 8, 8), Error);
    CHECK_THROWS_AS(tile_catalog(TileFamily::Diag3b, 3, {1, 1}, 12, 12), Error);
    // diagonal width-3 tile with n-2 < b < m is not certified
    CHECK_THROWS_AS(tile_catalog(TileFamily::Diag3b, 5, {1, 1}, 7, 6), Error);
}

TEST_CASE("transposed rectangles certify") {
    Tile t = tile_catalog(TileFamily::Rect3b, 4, {1, 1}, 9, 9, true);
    CHECK(t.size() == 12);
    // 4 rows x 3 columns
    std::set<int> rows, cols;
    for (const Cell& c : t.cells) {
        rows.insert(c.row);
        cols.insert(c.col);
    }
    CHECK(rows.size() == 4);
    CHECK(cols.size() == 3);
}

TEST_CASE("decompositions are deterministic and within the allowed parts") {
    CHECK(decompose_into(9, {3, 4, 5}) == std::vector<int>{3, 3, 3});
    CHECK(decompose_into(9, {4, 5, 6, 7}) == std::vector<int>{5, 4});
    CHECK(decompose_into(5, {2, 3}) == std::vector<int>{3, 2});
    CHECK(decompose_into(10, {4, 5, 6}) == std::vector<int>{5, 5});
    CHECK_FALSE(decompose_into(3, {4, 5, 6, 7}).has_value());
    CHECK_FALSE(decompose_into(1, {2, 3}).has_value());
    // every band-width decomposition the planner relies on
    auto check_all = [](int lo, int hi, std::vector<int> allowed) {
        for (int total = lo; total <= hi; ++total) {
            auto parts = decompose_into(total, allowed);
            REQUIRE(parts.has_value());
            int sum = 0;
            for (int p : *parts) {
                CHECK(std::find(allowed.begin(), allowed.end(), p) != allowed.end());
                sum += p;
            }
            CHECK(sum == total);
        }
    };
    check_all(2, 40, {2, 3});
    check_all(4, 40, {4, 5, 6, 7});
    check_all(3, 40, {3, 4, 5});
}

TEST_CASE("tiling plans cover their regimes") {
    struct Case {
        int m, n, h, k;
    };
    // totally filled, staircase, doubled staircase, diagonal bands
    for (const Case& c : {Case{5, 9, 9, 5}, {3, 3, 3, 3}, {2, 4, 4, 2}, {7, 12, 12, 7},
                          Case{9, 6, 2, 3}, {12, 8, 2, 3}, {10, 4, 2, 5}, {12, 9, 3, 4}, {20, 8, 2, 5},
                          Case{8, 4, 2, 4}, {12, 4, 2, 6}, {16, 4, 2, 8}, {6, 12, 8, 4},
                          Case{7, 7, 3, 3}, {7, 7, 6, 6}, {8, 12, 9, 6}, {9, 6, 4, 6}, {9, 9, 4, 4}, {11, 11, 5, 5}}) {
        CAPTURE(c.m);
        CAPTURE(c.n);
        CAPTURE(c.h);
        CAPTURE(c.k);
        TilePlan plan = plan_tiling(c.m, c.n, c.h, c.k);
        verify_plan(plan); // partition, certification, size cap
        CHECK(plan.max_tile_size() <= 21);
        bool fits = true;
        for (const auto& t : plan.tiles)
            if (t.size() > (c.h == c.n ? 15 : 21)) fits = false;
        CHECK(fits);
    }
    CHECK_THROWS_AS(plan_tiling(2, 3, 3, 2), Error); // no band decomposition
}

TEST_CASE("stair plan uses stairs of length two or three") {
    TilePlan plan = plan_tiling(9, 6, 2, 3);
    for (const auto& t : plan.tiles) {
        CHECK(t.family == TileFamily::Stair32);
        CHECK(t.b >= 2);
        CHECK(t.b <= 3);
    }
}

TEST_CASE("seven by seven diagonal plan is one full band tile") {
    TilePlan plan = plan_tiling(7, 7, 3, 3);
    REQUIRE(plan.tiles.size() == 1);
    CHECK(plan.tiles[0].family == TileFamily::Diag3b);
    CHECK(plan.tiles[0].b == 7);
    CHECK(plan.tiles[0].size() == 21);
}

TEST_CASE("plan validator rejects overlapping tiles") {
    TilePlan plan;
    plan.tiles.push_back(tile_catalog(TileFamily::Rect3b, 3, {1, 1}, 6, 6));
    plan.tiles.push_back(tile_catalog(TileFamily::Rect3b, 3, {1, 2}, 6, 6));
    plan.skeleton = CellSet{{}, 6, 6};
    CHECK_THROWS_AS(verify_plan(plan), Error);
}

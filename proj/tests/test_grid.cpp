// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "rmplan/grid.hpp"

using namespace rmplan;

TEST_CASE("region lattice covers the flight volume at cell centers") {
    const GridSpec g = grid_for_region(fixtures::paper_region(), 10.0);
    CHECK(g.nx == 63);
    CHECK(g.ny == 63);
    CHECK(g.nz == 4);
    CHECK(g.size() == 15876);
    CHECK(g.origin.x == 0.0);
    CHECK(g.origin.z == 90.0);

    const Vec3 first = g.center({0, 0, 0});
    CHECK(first.x == 5.0);
    CHECK(first.y == 5.0);
    CHECK(first.z == 95.0);
    const Vec3 last = g.center({62, 62, 3});
    CHECK(last.x == 625.0);
    CHECK(last.y == 625.0);
    CHECK(last.z == 125.0);
}

TEST_CASE("flat index runs i fastest, then j, then k") {
    const GridSpec g = grid_for_region(fixtures::paper_region(), 10.0);
    CHECK(g.flat({0, 0, 0}) == 0);
    CHECK(g.flat({1, 0, 0}) == 1);
    CHECK(g.flat({0, 1, 0}) == 63);
    CHECK(g.flat({0, 0, 1}) == 63 * 63);
    CHECK(g.flat({62, 62, 3}) == g.size() - 1);
    for (std::size_t f = 0; f < g.size(); f += 97) {
        const CellIndex c = g.unflat(f);
        CHECK(g.contains(c));
        CHECK(g.flat(c) == f);
    }
}

TEST_CASE("point lookup matches per-axis cell membership") {
    GridSpec g;
    g.origin = {0.0, 0.0, 90.0};
    g.delta = {10.0, 10.0, 10.0};
    g.nx = 4;
    g.ny = 3;
    g.nz = 2;

    SUBCASE("interior points") {
        CHECK(*g.cell_of({5.0, 5.0, 95.0}) == CellIndex{0, 0, 0});
        CHECK(*g.cell_of({12.3, 27.0, 104.0}) == CellIndex{1, 2, 1});
    }
    SUBCASE("every center maps to its own cell") {
        for (std::size_t f = 0; f < g.size(); ++f) {
            const CellIndex c = g.unflat(f);
            CHECK(*g.cell_of(g.center(c)) == c);
            CHECK(g.on_lattice(g.center(c)));
        }
    }
    SUBCASE("shared boundaries resolve to the smaller index") {
        CHECK(*g.cell_of({10.0, 5.0, 95.0}) == CellIndex{0, 0, 0});
        CHECK(*g.cell_of({30.0, 30.0, 110.0}) == CellIndex{2, 2, 1});
        CHECK(*g.cell_of({0.0, 0.0, 90.0}) == CellIndex{0, 0, 0});
        CHECK(*g.cell_of({40.0, 30.0, 110.0}) == CellIndex{3, 2, 1});
    }
    SUBCASE("points outside the box are rejected") {
        CHECK(!g.cell_of({-0.01, 5.0, 95.0}));
        CHECK(!g.cell_of({5.0, 30.01, 95.0}));
        CHECK(!g.cell_of({5.0, 5.0, 89.99}));
        CHECK(!g.cell_of({5.0, 5.0, 110.01}));
        CHECK(!g.cell_of({40.01, 5.0, 95.0}));
    }
    SUBCASE("random points agree with the membership inequality") {
        Rng rng(31);
        for (int t = 0; t < 2000; ++t) {
            const Vec3 p{rng.uniform(-5.0, 45.0), rng.uniform(-5.0, 35.0),
                         rng.uniform(85.0, 115.0)};
            const auto c = g.cell_of(p);
            const bool inside = p.x >= 0.0 && p.x <= 40.0 && p.y >= 0.0 && p.y <= 30.0 &&
                                p.z >= 90.0 && p.z <= 110.0;
            REQUIRE(c.has_value() == inside);
            if (c) {
                const Vec3 ctr = g.center(*c);
                CHECK(std::abs(p.x - ctr.x) <= 5.0);
                CHECK(std::abs(p.y - ctr.y) <= 5.0);
                CHECK(std::abs(p.z - ctr.z) <= 5.0);
            }
        }
    }
}

TEST_CASE("lattice membership uses the stated tolerance") {
    const GridSpec g = grid_for_region(fixtures::paper_region(), 10.0);
    CHECK(g.on_lattice({5.0, 5.0, 95.0}));
    CHECK(g.on_lattice({5.0 + 0.5e-9, 5.0, 95.0}));
    CHECK(!g.on_lattice({5.0 + 2e-9, 5.0, 95.0}));
    CHECK(!g.on_lattice({10.0, 5.0, 95.0}));
    CHECK(!g.on_lattice({5.0, 5.0, 80.0}));  // below the box entirely
}

TEST_CASE("region lattice construction validates its inputs") {
    Region r = fixtures::paper_region();
    CHECK_THROWS_AS(grid_for_region(r, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(grid_for_region(r, -10.0), std::invalid_argument);
    CHECK_THROWS_AS(grid_for_region(r, 10.7), std::invalid_argument);

    r.edge_length = 631.0;
    CHECK_THROWS_AS(grid_for_region(r, 10.0), std::invalid_argument);

    r = fixtures::paper_region();
    r.h_max = 131.0;
    CHECK_THROWS_AS(grid_for_region(r, 10.0), std::invalid_argument);

    r = fixtures::paper_region();
    r.h_min = 130.0;  // empty altitude band
    CHECK_THROWS_AS(grid_for_region(r, 10.0), std::invalid_argument);
}

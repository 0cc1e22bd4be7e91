#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tridom/tri_grid.hpp"

using tridom::CubicCoord;
using tridom::TriGrid;
using tridom::VertexSet;

TEST_CASE("vertex and edge counts") {
    // |V| = 3k^2 - 3k + 1; frozen edge counts from the brute-force oracle.
    const int expected_edges[] = {0, 0, 12, 42, 90, 156, 240, 342};
    for (int k = 1; k <= 7; ++k) {
        TriGrid g(k);
        CHECK(g.size() == 3 * k * k - 3 * k + 1);
        CHECK(g.edge_count() == expected_edges[k]);
    }
    CHECK(TriGrid(1).size() == 1);
    CHECK(TriGrid(2).size() == 7);
    CHECK(TriGrid(4).size() == 37);
    CHECK(TriGrid(4).edge_count() == 90);
}

TEST_CASE("grid matches the coordinate-triple oracle") {
    for (int k = 1; k <= 8; ++k) {
        TriGrid g(k);
        auto expect = oracle::vertices(k);
        REQUIRE(g.size() == static_cast<int>(expect.size()));
        for (int v = 0; v < g.size(); ++v) {
            const CubicCoord& c = g.coord(v);
            CHECK(oracle::Coord{c.x, c.y, c.z} == expect[static_cast<size_t>(v)]);
        }
        auto expect_edges = oracle::edges(k);
        size_t found = 0;
        for (int v = 0; v < g.size(); ++v)
            for (int u : g.neighbors(v))
                if (v < u) {
                    const CubicCoord &a = g.coord(v), &b = g.coord(u);
                    CHECK(oracle::adjacent({a.x, a.y, a.z}, {b.x, b.y, b.z}));
                    ++found;
                }
        CHECK(found == expect_edges.size());
    }
}

TEST_CASE("degree structure") {
    for (int k = 2; k <= 12; ++k) {
        TriGrid g(k);
        int deg3 = 0, deg4 = 0, deg6 = 0, other = 0;
        for (int v = 0; v < g.size(); ++v) {
            switch (g.degree(v)) {
                case 3: ++deg3; break;
                case 4: ++deg4; break;
                case 6: ++deg6; break;
                default: ++other;
            }
        }
        CHECK(deg3 == 6);
        CHECK(deg4 == 6 * (k - 2));
        CHECK(deg6 == g.size() - 6 - 6 * (k - 2));
        CHECK(other == 0);
    }
    CHECK(TriGrid(2).corners().size() == 6);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    for (int k : {1, 2, 3, 5, 8}) {
        TriGrid g(k);
        for (int v = 0; v < g.size(); ++v) {
            auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (int u : nb) {
                CHECK(u != v);
                auto back = g.neighbors(u);
                CHECK(std::binary_search(back.begin(), back.end(), v));
            }
        }
    }
}

TEST_CASE("neighbors examples") {
    TriGrid g3(3);
    CHECK(g3.neighbors(g3.index_of({1, 1, 2})).size() == 6);
    TriGrid g2(2);
    CHECK(g2.neighbors(g2.index_of({0, 0, 1})).size() == 3);
    TriGrid g1(1);
    CHECK(g1.neighbors(0).empty());
}

TEST_CASE("line queries") {
    TriGrid g3(3);
    VertexSet l = g3.line(1, 2);
    CHECK(l.count() == 5);
    l.for_each([&](int v) { CHECK(g3.coord(v).x == 2); });

    for (int k = 2; k <= 5; ++k) {
        TriGrid g(k);
        CHECK(g.line(2, 0).count() == k);
    }

    TriGrid g1(1);
    for (int axis : {1, 2, 3}) CHECK(g1.line(axis, 0).count() == 1);

    // l_{v_1=i} has k+i vertices below the middle, 3k-2-i above.
    for (int k : {2, 3, 4, 6}) {
        TriGrid g(k);
        for (int axis : {1, 2, 3})
            for (int i = 0; i <= 2 * k - 2; ++i)
                CHECK(g.line(axis, i).count() == (i <= k - 1 ? k + i : 3 * k - 2 - i));
    }
}

TEST_CASE("lines partition the vertex set") {
    for (int k : {1, 2, 4, 7}) {
        TriGrid g(k);
        for (int axis : {1, 2, 3}) {
            int total = 0;
            std::set<int> seen;
            for (int i = 0; i <= 2 * k - 2; ++i) {
                g.line(axis, i).for_each([&](int v) { seen.insert(v); });
                total += g.line(axis, i).count();
            }
            CHECK(total == g.size());
            CHECK(static_cast<int>(seen.size()) == g.size());
        }
    }
}

TEST_CASE("line vertices are sorted by the successor axis and contiguous") {
    // The smallest successor coordinate per line: for axes 1 and 2 it is 0
    // on the lower half and i-(k-1) on the upper half; axis 3 is mirrored.
    for (int k : {3, 4, 6}) {
        TriGrid g(k);
        for (int axis : {1, 2, 3}) {
            int succ = tridom::successor_axis(axis);
            for (int i = 0; i <= 2 * k - 2; ++i) {
                auto line = g.line_vertices(axis, i);
                int expected_min =
                    axis == 3 ? std::max(0, (k - 1) - i) : std::max(0, i - (k - 1));
                CHECK(g.coord(line.front()).component(succ) == expected_min);
                for (size_t j = 1; j < line.size(); ++j)
                    CHECK(g.coord(line[j]).component(succ) ==
                          g.coord(line[j - 1]).component(succ) + 1);
            }
        }
    }
}

TEST_CASE("hexagon symmetries preserve the edge set") {
    for (int k : {2, 3, 4, 5}) {
        TriGrid g(k);
        for (const auto& perm : oracle::dihedral_symmetries(g)) {
            for (int v = 0; v < g.size(); ++v) {
                for (int u : g.neighbors(v)) {
                    auto nb = g.neighbors(perm[static_cast<size_t>(v)]);
                    CHECK(std::binary_search(nb.begin(), nb.end(), perm[static_cast<size_t>(u)]));
                }
            }
        }
        CHECK(oracle::dihedral_symmetries(g).size() == 12);
    }
}

TEST_CASE("canonical vertex order is (x,y)-lexicographic") {
    TriGrid g(4);
    for (int v = 1; v < g.size(); ++v) {
        const CubicCoord &a = g.coord(v - 1), &b = g.coord(v);
        CHECK(std::pair{a.x, a.y} < std::pair{b.x, b.y});
    }
    CHECK(g.index_of({0, 0, 3}) == 0);
}

TEST_CASE("deterministic construction") {
    TriGrid a(5), b(5);
    CHECK(a.vertices() == b.vertices());
    for (int v = 0; v < a.size(); ++v) {
        auto na = a.neighbors(v), nb = b.neighbors(v);
        CHECK(std::equal(na.begin(), na.end(), nb.begin(), nb.end()));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(TriGrid(0), std::domain_error);
    CHECK_THROWS_AS(TriGrid(-3), std::domain_error);
    TriGrid g(3);
    CHECK_THROWS_AS(g.neighbors(-1), std::domain_error);
    CHECK_THROWS_AS(g.neighbors(19), std::domain_error);
    CHECK_THROWS_AS(g.line(1, -1), std::domain_error);
    CHECK_THROWS_AS(g.line(1, 5), std::domain_error);
    CHECK_THROWS_AS(g.line(4, 0), std::domain_error);
    CHECK_THROWS_AS(g.index_of({1, 0, 3}), std::domain_error);  // 1-0+3 != 2
    CHECK_THROWS_AS(g.index_of({5, 5, 2}), std::domain_error);
}

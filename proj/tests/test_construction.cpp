#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tridom/construction.hpp"
#include "tridom/propagation.hpp"

using namespace tridom;

TEST_CASE("case-split parameters") {
    CHECK(construction_params(6).i == 2);
    CHECK(construction_params(6).d == 3);   // 6 = 0 mod 3: d = k-i-1
    CHECK(construction_params(4).i == 1);
    CHECK(construction_params(4).d == 2);   // 4 = 1 mod 3: d = k-i-1
    CHECK(construction_params(5).i == 1);
    CHECK(construction_params(5).d == 2);   // 5 = 2 mod 3: d = k-i-2
    CHECK_THROWS_AS(construction_params(0), std::domain_error);
}

TEST_CASE("explicit sets for small k") {
    CHECK(construct_pds_coords(1) == std::vector<CubicCoord>{{0, 0, 0}});
    CHECK(construct_pds_coords(2) == std::vector<CubicCoord>{{0, 0, 1}});
    CHECK(construct_pds_coords(3) == std::vector<CubicCoord>{{1, 1, 2}});
    CHECK(construct_pds_coords(4) == std::vector<CubicCoord>{{1, 2, 4}, {3, 3, 3}});
    CHECK(construct_pds_coords(6) == std::vector<CubicCoord>{{1, 3, 7}, {4, 4, 5}});
}

TEST_CASE("size and coordinate validity for k up to 60") {
    for (int k = 1; k <= 60; ++k) {
        auto coords = construct_pds_coords(k);
        CHECK(static_cast<int>(coords.size()) == (k + 2) / 3);
        for (const CubicCoord& c : coords) {
            CHECK(c.x - c.y + c.z == k - 1);
            CHECK(c.x >= 0);
            CHECK(c.x <= 2 * k - 2);
            CHECK(c.y >= 0);
            CHECK(c.y <= 2 * k - 2);
            CHECK(c.z >= 0);
            CHECK(c.z <= 2 * k - 2);
        }
    }
}

TEST_CASE("constructed sets power-dominate") {
    for (int k = 1; k <= 40; ++k) {
        TriGrid g(k);
        VertexSet s = construct_pds(g);
        CHECK(s.count() == (k + 2) / 3);
        CHECK(is_power_dominating(g, s));
    }
}

TEST_CASE("triangle set membership and size") {
    TriGrid g3(3);
    VertexSet t3 = triangle_set(g3);
    CHECK(t3.count() == 6);
    for (const CubicCoord& c :
         {CubicCoord{0, 0, 2}, {0, 1, 3}, {0, 2, 4}, {1, 1, 2}, {1, 2, 3}, {2, 2, 2}})
        CHECK(t3.contains(g3.index_of(c)));

    CHECK(triangle_set(TriGrid(1)).count() == 1);
    CHECK(triangle_set(TriGrid(4)).count() == 10);
    for (int k = 1; k <= 12; ++k) CHECK(triangle_set(TriGrid(k)).count() == k * (k + 1) / 2);
}

TEST_CASE("monitoring the triangle set monitors the grid") {
    for (int k = 1; k <= 30; ++k) {
        TriGrid g(k);
        CHECK(propagate_from_monitored(g, triangle_set(g)).covers(g));
    }
}

#include "helpers.hpp"
#include "oracles.hpp"

using namespace lw;

namespace {
const Polygon T0 = ipoly({{-1, -1}, {0, 1}, {1, 0}});
const Polygon D3 = ipoly({{0, 0}, {3, 0}, {0, 3}});
}  // namespace

TEST_SUITE("geom-core") {

TEST_CASE("convex hull drops interior points and keeps degenerate inputs") {
    Polygon H = ipoly({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
    REQUIRE(H.size() == 3);
    CHECK(H.v[0] == Pt(IPt{0, 0}));
    CHECK(H.v[1] == Pt(IPt{3, 0}));
    CHECK(H.v[2] == Pt(IPt{0, 3}));
    CHECK(ipoly({{0, 0}}).size() == 1);
    CHECK(ipoly({{0, 0}, {2, 2}, {1, 1}}).size() == 2);
    CHECK(T0.size() == 3);
    CHECK(error_code([] { convex_hull({}); }) == "EmptyPointSet");
}

TEST_CASE("hull is ccw and strictly convex") {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        Polygon P = oracle::any_polygon(rng);
        for (size_t j = 0; j < P.size(); ++j)
            CHECK(sgn(cross(P.v[j], P.v[(j + 1) % P.size()], P.v[(j + 2) % P.size()])) > 0);
        for (auto& p : P.v) CHECK_FALSE(P.v[0].x > p.x);
    }
}

TEST_CASE("containment") {
    CHECK(contains(D3, Pt(IPt{1, 1}), true));
    CHECK_FALSE(contains(D3, Pt(IPt{0, 0}), true));
    CHECK(contains(D3, Pt(IPt{0, 0}), false));
    CHECK(contains(T0, Pt(IPt{0, 0}), true));
    CHECK_FALSE(contains(D3, Pt(q(3, 2), q(3, 2) + q(1, 1000)), false));
}

TEST_CASE("containment agrees with the half-plane description") {
    Rng rng(2);
    int n = 0;
    while (n < 10000) {
        Polygon P = oracle::any_polygon(rng);
        auto hs = halfplane_description(P);
        for (int j = 0; j < 50; ++j, ++n) {
            Pt p(rand_q(rng, -6, 6, 48), rand_q(rng, -6, 6, 48));
            bool closed = true, open = true;
            for (auto& h : hs) {
                int s = sgn(h.eval(p));
                closed = closed && s <= 0;
                open = open && s < 0;
            }
            REQUIRE(contains(P, p, false) == closed);
            REQUIRE(contains(P, p, true) == open);
        }
    }
}

TEST_CASE("lattice points") {
    auto i3 = lattice_points(D3, true);
    REQUIRE(i3.size() == 1);
    CHECK(i3[0] == IPt{1, 1});
    auto it = lattice_points(T0, true);
    REQUIRE(it.size() == 1);
    CHECK(it[0] == IPt{0, 0});
    CHECK(lattice_points(ipoly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), true).empty());
    CHECK(lattice_points(D3, false).size() == 10);
}

TEST_CASE("lattice points match a bounding-box scan, sorted") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Polygon P = oracle::any_polygon(rng);
        for (bool strict : {false, true}) {
            auto a = lattice_points(P, strict);
            auto b = oracle::points(P, strict);
            std::sort(b.begin(), b.end());
            REQUIRE(a == b);
        }
    }
}

TEST_CASE("area") {
    CHECK(area(D3) == q(9, 2));
    CHECK(area(T0) == q(3, 2));
    CHECK(area(ipoly({{0, 0}, {2, 1}})) == 0);
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        Polygon P = oracle::any_polygon(rng);
        CHECK(area(P) == oracle::shoelace(P));
    }
}

TEST_CASE("pick's formula on lattice polygons") {
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        Polygon P = random_lattice_polygon(rng, 5, (int)rand_ll(rng, 3, 9));
        long long G = (long long)lattice_points(P, false).size();
        long long I = (long long)lattice_points(P, true).size();
        REQUIRE(area(P) == make_q(I) + make_q(G - I, 2) - 1);
    }
}

TEST_CASE("apply_map") {
    Polygon D1 = ipoly({{0, 0}, {1, 0}, {0, 1}});
    CHECK(apply_map(UnimodularMap{}, D3) == D3);
    UnimodularMap swap{{{{0, 1}, {1, 0}}}, {0, 0}};
    CHECK(apply_map(swap, D1) == D1);
    UnimodularMap m{{{{-1, -1}, {0, 1}}}, {0, 0}};
    CHECK(apply_map(m, ipoly({{1, -1}, {1, -2}, {0, -1}})) == ipoly({{0, -1}, {1, -2}, {1, -1}}));
}

TEST_CASE("apply_map round trip and lattice point counts") {
    Rng rng(6);
    for (int i = 0; i < 1000; ++i) {
        Polygon P = oracle::any_polygon(rng);
        UnimodularMap T = random_unimodular(rng);
        REQUIRE(std::abs(T.det()) == 1);
        Polygon TP = apply_map(T, P);
        REQUIRE(apply_map(T.inverse(), TP) == P);
        REQUIRE(apply_map(T, apply_map(T.inverse(), P)) == P);
        if (i % 5 == 0) {
            CHECK(lattice_points(TP, true).size() == lattice_points(P, true).size());
            CHECK(lattice_points(TP, false).size() == lattice_points(P, false).size());
        }
    }
}

TEST_CASE("equivalence") {
    auto e = are_equivalent(D3, ipoly({{-1, -1}, {-1, 2}, {2, -1}}));
    REQUIRE(e);
    CHECK(apply_map(*e, D3) == ipoly({{-1, -1}, {-1, 2}, {2, -1}}));
    CHECK_FALSE(are_equivalent(ipoly({{0, 0}, {1, 0}, {0, 1}}), ipoly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
    Polygon P = ipoly({{-1, 0}, {0, 1}, {1, 0}});
    UnimodularMap m{{{{0, -1}, {1, -1}}}, {0, 0}};
    CHECK(are_equivalent(P, apply_map(m, P)));
    CHECK(error_code([] { are_equivalent(poly({{"1/2", "0"}, {"1", "0"}, {"0", "1"}}), ipoly({{0, 0}, {1, 0}, {0, 1}})); }) ==
          "NotLatticePolygon");
    // same area and point counts, not equivalent
    CHECK_FALSE(are_equivalent(ipoly({{0, 0}, {2, 0}, {0, 1}}), ipoly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
}

TEST_CASE("equivalence is reflexive and symmetric on a corpus") {
    Rng rng(7);
    std::vector<Polygon> corpus;
    for (int i = 0; i < 100; ++i) corpus.push_back(random_lattice_polygon(rng, 2, (int)rand_ll(rng, 3, 5)));
    for (size_t i = 0; i < corpus.size(); ++i) {
        REQUIRE(are_equivalent(corpus[i], corpus[i]));
        Polygon img = apply_map(random_unimodular(rng), corpus[i]);
        auto f = are_equivalent(corpus[i], img);
        REQUIRE(f);
        CHECK(apply_map(*f, corpus[i]) == img);
        for (size_t j = i + 1; j < std::min(corpus.size(), i + 10); ++j)
            CHECK(bool(are_equivalent(corpus[i], corpus[j])) == bool(are_equivalent(corpus[j], corpus[i])));
    }
}

TEST_CASE("half-plane description") {
    auto hs = halfplane_description(ipoly({{0, 0}, {1, 0}, {0, 1}}));
    REQUIRE(hs.size() == 3);
    auto hs3 = halfplane_description(D3);
    int diag = 0;
    for (auto& h : hs3)
        if (h.normal == Pt(IPt{1, 1})) {
            ++diag;
            CHECK(h.offset == 3);
        }
    CHECK(diag == 1);
    for (auto& h : halfplane_description(T0)) {
        CHECK(h.normal.x.get_den() == 1);
        CHECK(h.normal.y.get_den() == 1);
        for (auto& v : T0.v) CHECK(sgn(h.eval(v)) <= 0);
    }
    CHECK(error_code([] { halfplane_description(ipoly({{0, 0}, {1, 1}})); }) == "DegeneratePolygon");
}

}  // TEST_SUITE

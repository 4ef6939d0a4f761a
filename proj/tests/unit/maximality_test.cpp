#include "helpers.hpp"
#include "latwidth/maximality.hpp"
#include "latwidth/metrics.hpp"
#include "latwidth/search.hpp"
#include "oracles.hpp"

using namespace lw;

namespace {
const Polygon D1 = ipoly({{0, 0}, {1, 0}, {0, 1}});
const Polygon D3 = ipoly({{0, 0}, {3, 0}, {0, 3}});
const Polygon HEX = ipoly({{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}});
const Polygon CROSS = ipoly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

// 1-maximal lattice polygons with up to four vertices in [-3,3]^2
const std::vector<Visited>& one_maximal_corpus() {
    static std::vector<Visited> out = [] {
        std::vector<Visited> r;
        for (int mv : {3, 4}) {
            SearchSpec s;
            s.box_radius = mv == 3 ? 3 : 2;
            s.max_vertices = mv;
            s.k_min = s.k_max = 1;
            for (auto& v : enumerate_polygons(s))
                if (is_k_maximal(v.poly, 1)) r.push_back(v);
        }
        return r;
    }();
    return out;
}
}  // namespace

TEST_SUITE("maximality") {

TEST_CASE("blocking data") {
    auto b = blocking_data(D3);
    std::vector<IPt> all;
    for (auto& [e, pts] : b.per_edge) all.insert(all.end(), pts.begin(), pts.end());
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<IPt>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
    CHECK(b.blocking_polygon == ipoly({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}));
    CHECK(are_equivalent(b.blocking_polygon, HEX));

    auto t = blocking_data(ipoly({{-1, -1}, {-1, 2}, {2, -1}}));
    CHECK(t.blocking_polygon == ipoly({{-1, 0}, {-1, 1}, {0, 1}, {1, 0}, {0, -1}, {1, -1}}));

    auto u = blocking_data(ipoly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    size_t n = 0;
    for (auto& [e, pts] : u.per_edge) n += pts.size();
    CHECK(n == 0);
    CHECK(u.blocking_polygon.v.empty());
    CHECK(error_code([] { blocking_data(ipoly({{0, 0}, {3, 3}})); }) == "DegeneratePolygon");
}

TEST_CASE("blocking points sit in the relative interior of their edge") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        Polygon P = oracle::any_polygon(rng);
        auto b = blocking_data(P);
        for (auto& [e, pts] : b.per_edge)
            for (auto& p : pts) CHECK(on_segment(P.v[e], P.v[(e + 1) % P.size()], Pt(p), true));
    }
}

TEST_CASE("k-maximality") {
    CHECK(is_k_maximal(D3, 1));
    CHECK_FALSE(is_k_maximal(D3, 0));
    CHECK_FALSE(is_k_maximal(D1, 0));
}

TEST_CASE("k-maximal extension") {
    Polygon P = poly({{"1/10", "1/10"}, {"29/10", "1/20"}, {"1/20", "29/10"}});
    REQUIRE(interior_count(P) == 1);
    Polygon E = k_maximal_extension(P, q(1, 8), 16);
    CHECK(is_k_maximal(E, 1));
    for (auto& v : P.v) CHECK(contains(E, v, false));
    CHECK(k_maximal_extension(D3, q(1, 8), 16) == D3);

    Polygon strip = poly({{"0", "1/4"}, {"5", "1/4"}, {"5", "3/4"}, {"0", "3/4"}});
    CHECK(error_code([&] { k_maximal_extension(strip, q(1, 8), 16); }) == "ExtensionFailed");
    CHECK(error_code([&] { k_maximal_extension(P, 0, 16); }) == "InvalidTolerance");
}

TEST_CASE("extension output is k-maximal and contains its input") {
    Rng rng(32);
    int done = 0;
    for (int i = 0; i < 80; ++i) {
        Polygon P = random_rational_polygon(rng, 3, 4, (int)rand_ll(rng, 3, 6));
        long long k = interior_count(P);
        if (k == 0) continue;
        try {
            Polygon E = k_maximal_extension(P, q(1, 8), 16);
            CHECK(is_k_maximal(E, k));
            for (auto& v : P.v) CHECK(contains(E, v, false));
            ++done;
        } catch (const Error& e) {
            CHECK(e.code == "ExtensionFailed");
        }
    }
    CHECK(done > 20);
}

TEST_CASE("shards") {
    CHECK(shard(HEX, 0).closure() == ipoly({{-1, -1}, {-1, -2}, {0, -1}}));
    // Delta_2: edge 1 is the hypotenuse
    Region s = shard(D1, 1);
    CHECK(s.contains(Pt(IPt{1, 1})));
    CHECK(s.contains(Pt(IPt{2, 0})));
    CHECK_FALSE(s.contains(Pt(q(1, 4), q(1, 4))));
    CHECK_FALSE(s.contains(Pt(IPt{-1, 3})));
    // the cross shard beyond x+y=1 is an unbounded wedge
    int e = -1;
    for (int i = 0; i < 4; ++i)
        if (CROSS.v[i] == Pt(IPt{1, 0}) && CROSS.v[(i + 1) % 4] == Pt(IPt{0, 1})) e = i;
    REQUIRE(e >= 0);
    Region w = shard(CROSS, e);
    CHECK(w.contains(Pt(IPt{7, 7})));
    CHECK(w.contains(Pt(IPt{1, 1})));
    CHECK_FALSE(w.contains(Pt(IPt{2, -2})));
    CHECK(error_code([] { shard(HEX, 6); }) == "BadEdgeIndex");
}

TEST_CASE("face cones") {
    Pt c(0, 0);
    int e = -1;
    for (int i = 0; i < 6; ++i)
        if (HEX.v[i] == Pt(IPt{1, 0})) e = i;
    REQUIRE(e >= 0);
    Region f = face_cone(HEX, e, c);
    CHECK(f.contains(Pt(IPt{1, 0})));
    CHECK(f.contains(Pt(IPt{1, 1})));
    CHECK(f.contains(Pt(IPt{4, 3})));
    CHECK_FALSE(f.contains(Pt(IPt{-1, 0})));
    CHECK(error_code([&] { face_cone(HEX, e, Pt(IPt{1, 0})); }) == "ApexOnEdge");
}

TEST_CASE("shard equals the intersection of sampled face cones") {
    Rng rng(33);
    for (const Polygon* B : {&HEX, &CROSS, &D3}) {
        for (int e = 0; e < (int)B->size(); ++e) {
            Pt a = B->v[e], b = B->v[(e + 1) % B->size()];
            std::vector<Pt> apexes;
            for (auto& v : B->v)
                if (!(v == a) && !(v == b)) apexes.push_back(v);
            Pt ctr = centroid_of_vertices(*B);
            Q tiny = q(1, 1000000000);
            while (apexes.size() < 100) {
                Pt on_e = a + rand_q(rng, 0, 1, 1 << 10) * (b - a);
                Q s = apexes.size() % 2 ? tiny : rand_q(rng, 0, 1, 1 << 10, true);
                apexes.push_back(on_e + s * (ctr - on_e));
            }
            std::vector<Region> cones;
            for (auto& x0 : apexes) cones.push_back(face_cone(*B, e, x0));
            Region S = shard(*B, e);
            for (int k = 0; k < 600; ++k) {
                Pt p(rand_q(rng, -4, 4, 1 << 16), rand_q(rng, -4, 4, 1 << 16));
                bool on_line = false;
                for (auto& h : S.halfplanes) on_line = on_line || sgn(h.eval(p)) == 0;
                if (on_line) continue;
                bool all = true;
                for (auto& c : cones) all = all && c.contains(p);
                REQUIRE(all == S.contains(p));
            }
        }
    }
}

TEST_CASE("forbidden cones") {
    Region s = forbidden_cone(CROSS, {1, 1});
    CHECK(s.contains(Pt(IPt{2, 2})));
    CHECK_FALSE(s.contains(Pt(IPt{1, 1})));
    CHECK_FALSE(s.contains(Pt(IPt{2, 1})));
    CHECK_FALSE(s.contains(Pt(IPt{0, 0})));
    for (bool o : s.open) CHECK(o);
    Region v = forbidden_cone(CROSS, {1, 0});
    CHECK(v.contains(Pt(IPt{3, 0})));
    CHECK(error_code([] { forbidden_cone(D3, {1, 1}); }) == "ApexInsideBody");
}

TEST_CASE("vertex regions") {
    auto hex = vertex_regions(HEX, {0, 0}, false);
    REQUIRE(hex.size() == 6);
    for (auto& r : hex) CHECK(r.area() == q(1, 2));
    CHECK(hex[0].contains(Pt(q(-2, 3), q(-4, 3))));

    auto cr = vertex_regions(CROSS, {0, 0}, false);
    REQUIRE(cr.size() == 4);
    bool found = false;
    for (auto& r : cr) {
        // two unit triangles sharing a half-unit triangle
        CHECK(r.area() == q(3, 2));
        if (r.contains(Pt(q(1, 1), q(2, 3))) && r.contains(Pt(q(2, 3), q(1, 1)))) found = true;
    }
    CHECK(found);
}

TEST_CASE("1-maximal corpus: blocking polygons, forbidden cones, colinear edges") {
    const auto& corpus = one_maximal_corpus();
    REQUIRE(corpus.size() > 50);
    Polygon D = three_delta2();
    for (auto& vis : corpus) {
        const Polygon& P = vis.poly;
        Polygon B = blocking_data(P).blocking_polygon;
        REQUIRE(B.full_dim());
        CHECK(interior_count(B) <= 1);

        IPt p = lattice_points(P, true).at(0);
        std::vector<Pt> probes = P.v;
        for (size_t i = 0; i < P.size(); ++i) probes.push_back(make_q(1, 2) * (P.v[i] + P.v[(i + 1) % P.size()]));
        for (long long x = p.x - 4; x <= p.x + 4; ++x)
            for (long long y = p.y - 4; y <= p.y + 4; ++y) {
                if (x == p.x && y == p.y) continue;
                Region s = forbidden_cone(B, {x, y});
                for (auto& pr : probes) REQUIRE_FALSE(s.contains(pr));
            }

        bool long_edge = false;
        for (size_t i = 0; i < P.size(); ++i) {
            Pt d = P.v[(i + 1) % P.size()] - P.v[i];
            long long g = std::gcd(std::abs(d.x.get_num().get_si()), std::abs(d.y.get_num().get_si()));
            long_edge = long_edge || g >= 2;
        }
        if (long_edge) {
            CHECK(vis.width <= 3);
            if (vis.width == 3) CHECK(are_equivalent(P, D));
        }
    }
}

TEST_CASE("swap invariance helper") {
    CHECK(swap_invariant(D3));
    CHECK_FALSE(swap_invariant(ipoly({{0, 0}, {2, 0}, {0, 1}})));
}

}  // TEST_SUITE

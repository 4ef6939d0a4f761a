#include "latwidth/search.hpp"

#include <algorithm>
#include <cstdlib>

#include "latwidth/parallel.hpp"
#include "latwidth/random.hpp"

namespace lw {

namespace {

using LL = long long;

LL cross_i(const IPt& o, const IPt& a, const IPt& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// CCW order if the points are in strictly convex position, else empty
std::vector<IPt> convex_order(std::vector<IPt> p) {
    std::sort(p.begin(), p.end());
    size_t n = p.size();
    std::vector<IPt> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross_i(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross_i(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    if (h.size() != n) return {};
    return h;
}

// Pick: 2A = 2I + B - 2
LL interior_pick(const std::vector<IPt>& v) {
    LL a2 = 0, b = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const IPt& p = v[i];
        const IPt& q = v[(i + 1) % v.size()];
        a2 += p.x * q.y - p.y * q.x;
        b += gcdll(std::llabs(q.x - p.x), std::llabs(q.y - p.y));
    }
    return (std::llabs(a2) - b + 2) / 2;
}

Polygon to_poly(const std::vector<IPt>& v) {
    Polygon P;
    for (auto& p : v) P.v.push_back(Pt(p));
    return convex_hull(P.v);
}

}  // namespace

Polygon three_delta2() { return make_polygon({{0, 0}, {3, 0}, {0, 3}}); }

void check_budget(const SearchSpec& s) {
    if (s.max_vertices < 3 || s.max_vertices > 4)
        throw Error("SearchTooLarge", "max_vertices must be 3 or 4");
    if (s.box_radius < 0) throw Error("SearchTooLarge", "negative box radius");
    if (s.max_vertices == 3 && s.box_radius > 6)
        throw Error("SearchTooLarge", "triangle searches are capped at R = 6");
    if (s.max_vertices == 4 && s.box_radius > 5)
        throw Error("SearchTooLarge", "quadrilateral searches are capped at R = 5");
    if (s.max_vertices == 4 && s.box_radius > 3 && !s.allow_large)
        throw Error("SearchTooLarge", "quadrilateral searches beyond R = 3 need the large-search flag");
    if (s.k_min > s.k_max || s.k_min < 0) throw Error("SearchTooLarge", "empty interior-point target");
}

std::vector<Visited> enumerate_polygons(const SearchSpec& s, int jobs) {
    check_budget(s);
    std::vector<IPt> pts;
    for (LL x = -s.box_radius; x <= s.box_radius; ++x)
        for (LL y = -s.box_radius; y <= s.box_radius; ++y) pts.push_back({x, y});
    size_t N = pts.size();
    std::vector<std::vector<Visited>> parts(N);
    parallel_for(N, resolve_jobs(jobs), [&](size_t i) {
        auto& out = parts[i];
        auto visit = [&](std::vector<IPt> sub) {
            auto v = convex_order(std::move(sub));
            if (v.empty()) return;
            LL k = interior_pick(v);
            if (k < s.k_min || k > s.k_max) return;
            Polygon P = to_poly(v);
            auto w = lattice_width(P);
            out.push_back({std::move(P), k, w.value, w.minimizer});
        };
        for (size_t j = i + 1; j < N; ++j)
            for (size_t k = j + 1; k < N; ++k) {
                if (cross_i(pts[i], pts[j], pts[k]) == 0) continue;
                visit({pts[i], pts[j], pts[k]});
                if (s.max_vertices >= 4)
                    for (size_t l = k + 1; l < N; ++l) visit({pts[i], pts[j], pts[k], pts[l]});
            }
    });
    std::vector<Visited> all;
    for (auto& p : parts)
        for (auto& v : p) all.push_back(std::move(v));
    return all;
}

SearchResult search(const SearchSpec& s, int jobs) {
    auto all = enumerate_polygons(s, jobs);
    SearchResult r;
    r.visited = (LL)all.size();
    for (auto& v : all) {
        ++r.histogram[to_string(v.width)];
        if (r.argmax_polygons.empty() || v.width > r.max_width) {
            r.max_width = v.width;
            r.argmax_polygons.clear();
        }
        if (v.width != r.max_width) continue;
        bool dup = false;
        if (s.canonical_dedup)
            for (auto& a : r.argmax_polygons)
                if (are_equivalent(a, v.poly)) {
                    dup = true;
                    break;
                }
        if (!dup) r.argmax_polygons.push_back(v.poly);
    }
    return r;
}

IsominwidthReport isominwidth_scan(const SearchSpec& s, int jobs) {
    auto all = enumerate_polygons(s, jobs);
    IsominwidthReport rep;
    Polygon T = three_delta2();
    for (auto& v : all) {
        if (v.interior <= 0) continue;
        ++rep.checked;
        Q lhs = v.width * v.width, rhs = 9 * make_q(v.interior);
        auto it = rep.max_width_by_k.find(v.interior);
        if (it == rep.max_width_by_k.end() || v.width > it->second) rep.max_width_by_k[v.interior] = v.width;
        std::string desc;
        for (auto& p : v.poly.v) desc += "(" + to_string(p.x) + "," + to_string(p.y) + ")";
        if (lhs > rhs) throw Error("CounterexampleFound", "w^2 > 9 G° for " + desc);
        if (lhs == rhs) {
            ++rep.equality_cases;
            if (!are_equivalent(v.poly, T)) throw Error("CounterexampleFound", "equality off 3*Delta_2 at " + desc);
        }
    }
    return rep;
}

bool simplex_shrink_check(int samples, uint64_t seed) {
    Rng rng(seed);
    int done = 0;
    Q two_thirds = make_q(2, 3);
    for (long long tries = 0; done < samples && tries < 1000LL * samples + 1000; ++tries) {
        std::vector<IPt> v;
        for (int i = 0; i < 3; ++i) v.push_back({rand_ll(rng, -4, 4), rand_ll(rng, -4, 4)});
        if (cross_i(v[0], v[1], v[2]) == 0) continue;
        Polygon S = to_poly(v);
        auto in = lattice_points(S, true);
        if (in.size() != 1) continue;
        Pt c(in[0]);
        // barycentric coordinates of c; pick the vertex with the smallest one
        Q tot = cross(S.v[0], S.v[1], S.v[2]);
        int i0 = 0;
        Q lmin;
        for (int i = 0; i < 3; ++i) {
            Q li = cross(c, S.v[(i + 1) % 3], S.v[(i + 2) % 3]) / tot;
            if (i == 0 || li < lmin) lmin = li, i0 = i;
        }
        if (lmin > make_q(1, 3)) return false;
        Pt v0 = S.v[i0];
        Polygon shrunk = scale(translate(S, Pt(-v0.x, -v0.y)), two_thirds);
        if (!lattice_points(shrunk, true).empty()) return false;
        if (lattice_width(S).value != make_q(3, 2) * lattice_width(shrunk).value) return false;
        ++done;
    }
    return done == samples;
}

bool pigeonhole_check(const Polygon& P, long long m) {
    if (m < 1) throw Error("InvalidModulus", "m must be positive");
    if (m == 1) return true;
    auto in = lattice_points(P, true);
    LL k = (LL)in.size();
    std::map<std::pair<LL, LL>, LL> cnt;
    for (auto& z : in) cnt[{((z.x % m) + m) % m, ((z.y % m) + m) % m}]++;
    bool found = false;
    for (LL a = 0; a < m && !found; ++a)
        for (LL b = 0; b < m && !found; ++b) {
            LL c = cnt.count({a, b}) ? cnt[{a, b}] : 0;
            if (c > k / (m * m)) continue;
            // (P - t)/m is a c-point body in Z^2 coordinates
            Polygon R = scale(translate(P, Pt(make_q(-a), make_q(-b))), make_q(1, m));
            if ((LL)lattice_points(R, true).size() != c) return false;
            found = true;
        }
    if (!found) return false;
    // width against mZ^2 is w/m
    return lattice_width(scale(P, make_q(1, m))).value == lattice_width(P).value / make_q(m);
}

}  // namespace lw

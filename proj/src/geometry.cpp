#include "latwidth/geometry.hpp"

#include <algorithm>
#include <set>

namespace lw {

Pt UnimodularMap::operator()(const Pt& p) const {
    return {make_q(m[0][0]) * p.x + make_q(m[0][1]) * p.y + make_q(t.x),
            make_q(m[1][0]) * p.x + make_q(m[1][1]) * p.y + make_q(t.y)};
}

IPt UnimodularMap::operator()(const IPt& p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + t.x, m[1][0] * p.x + m[1][1] * p.y + t.y};
}

UnimodularMap UnimodularMap::inverse() const {
    long long d = det();  // +-1, so 1/d == d
    UnimodularMap r;
    r.m = {{{m[1][1] * d, -m[0][1] * d}, {-m[1][0] * d, m[0][0] * d}}};
    IPt mt = r(IPt{t.x, t.y});  // r has zero translation here
    r.t = {-mt.x, -mt.y};
    return r;
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& in) const {
    UnimodularMap r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * in.m[0][j] + m[i][1] * in.m[1][j];
    IPt a = (*this)(in.t);
    r.t = a;
    return r;
}

Polygon convex_hull(std::vector<Pt> pts) {
    if (pts.empty()) throw Error("EmptyPointSet", "convex hull of nothing");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polygon P;
    if (pts.size() <= 2) {
        P.v = pts;
        return P;
    }
    std::vector<Pt> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 1) h.push_back(pts.back());  // all colinear: lower chain collapsed
    if (h.size() == 2) h = {pts.front(), pts.back()};
    P.v = h;
    return P;
}

Polygon make_polygon(const std::vector<std::pair<long long, long long>>& ints) {
    std::vector<Pt> p;
    for (auto& [a, b] : ints) p.emplace_back(make_q(a), make_q(b));
    return convex_hull(p);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p, bool relint) {
    if (cross(a, b, p) != 0) return false;
    Q d = dot(p - a, b - a), L = dot(b - a, b - a);
    if (relint) return d > 0 && d < L;
    return d >= 0 && d <= L;
}

bool contains(const Polygon& P, const Pt& p, bool strict) {
    size_t n = P.size();
    if (n == 0) return false;
    if (n == 1) return !strict && P.v[0] == p;
    if (n == 2) return !strict && on_segment(P.v[0], P.v[1], p, false);
    for (size_t i = 0; i < n; ++i) {
        int s = sgn(cross(P.v[i], P.v[(i + 1) % n], p));
        if (s < 0 || (strict && s == 0)) return false;
    }
    return true;
}

std::optional<std::pair<Q, Q>> y_range_at(const Polygon& P, const Q& x) {
    size_t n = P.size();
    bool any = false;
    Q lo, hi;
    auto add = [&](const Q& y) {
        if (!any) { lo = hi = y; any = true; }
        else { if (y < lo) lo = y; if (y > hi) hi = y; }
    };
    if (n == 1) {
        if (P.v[0].x == x) add(P.v[0].y);
    }
    for (size_t i = 0; n >= 2 && i < n; ++i) {
        const Pt& a = P.v[i];
        const Pt& b = P.v[(i + 1) % n];
        if (a.x == b.x) {
            if (a.x == x) { add(a.y); add(b.y); }
            continue;
        }
        const Q& x0 = a.x < b.x ? a.x : b.x;
        const Q& x1 = a.x < b.x ? b.x : a.x;
        if (x < x0 || x > x1) continue;
        add(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
        if (n == 2) break;
    }
    if (!any) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::vector<IPt> lattice_points(const Polygon& P, bool interior_only) {
    std::vector<IPt> out;
    if (P.size() == 0) return out;
    if (interior_only && !P.full_dim()) return out;
    Q minx = P.v[0].x, maxx = P.v[0].x;
    for (auto& p : P.v) {
        if (p.x < minx) minx = p.x;
        if (p.x > maxx) maxx = p.x;
    }
    long long x0 = to_ll(ceil_q(minx)), x1 = to_ll(floor_q(maxx));
    for (long long x = x0; x <= x1; ++x) {
        Q qx = make_q(x);
        if (interior_only && (qx == minx || qx == maxx)) continue;
        auto r = y_range_at(P, qx);
        if (!r) continue;
        long long y0, y1;
        if (interior_only) {
            y0 = to_ll(floor_q(r->first)) + 1;
            y1 = to_ll(ceil_q(r->second)) - 1;
        } else {
            y0 = to_ll(ceil_q(r->first));
            y1 = to_ll(floor_q(r->second));
        }
        for (long long y = y0; y <= y1; ++y) out.push_back({x, y});
    }
    return out;
}

bool is_integral(const Polygon& P) {
    for (auto& p : P.v)
        if (p.x.get_den() != 1 || p.y.get_den() != 1) return false;
    return true;
}

long long interior_count(const Polygon& P) {
    if (!P.full_dim()) return 0;
    if (!is_integral(P)) return (long long)lattice_points(P, true).size();
    // Pick: 2A = 2I + B - 2
    Z twice;
    long long B = 0;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = P.v[i];
        const Pt& b = P.v[(i + 1) % n];
        twice += Q(a.x * b.y - a.y * b.x).get_num();
        B += gcdll(to_ll(Q(b.x - a.x).get_num()), to_ll(Q(b.y - a.y).get_num()));
    }
    return (to_ll(twice) - B + 2) / 2;
}

Q area(const Polygon& P) {
    size_t n = P.size();
    Q s = 0;
    if (n < 3) return s;
    for (size_t i = 0; i < n; ++i) s += cross(P.v[i], P.v[(i + 1) % n]);
    return s / 2;
}

Polygon apply_map(const UnimodularMap& T, const Polygon& P) {
    std::vector<Pt> img;
    for (auto& p : P.v) img.push_back(T(p));
    return convex_hull(img);
}

Polygon scale(const Polygon& P, const Q& s) {
    std::vector<Pt> img;
    for (auto& p : P.v) img.push_back(s * p);
    if (s == 0) return convex_hull({Pt(0, 0)});
    return convex_hull(img);
}

Polygon translate(const Polygon& P, const Pt& t) {
    std::vector<Pt> img;
    for (auto& p : P.v) img.push_back(p + t);
    return convex_hull(img);
}

Pt centroid_of_vertices(const Polygon& P) {
    Q sx = 0, sy = 0;
    for (auto& p : P.v) { sx += p.x; sy += p.y; }
    Q n = make_q((long long)P.size());
    return {sx / n, sy / n};
}

IPt primitive(long long a, long long b) {
    long long g = gcdll(a, b);
    if (g == 0) return {0, 0};
    return {a / g, b / g};
}

// matrix with first column p (primitive), det 1
static std::array<std::array<long long, 2>, 2> basis_from(IPt p) {
    // extended gcd: a*x + b*y = 1
    long long a = p.x, b = p.y;
    long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_s = -old_s; old_t = -old_t; }
    return {{{a, -old_t}, {b, old_s}}};
}

static std::optional<UnimodularMap> check_map(const std::array<std::array<Q, 2>, 2>& M, const Pt& from,
                                              const Pt& to, const Polygon& P, const Polygon& Q2) {
    UnimodularMap T;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (M[i][j].get_den() != 1) return std::nullopt;
            T.m[i][j] = to_ll(M[i][j].get_num());
        }
    long long d = T.det();
    if (d != 1 && d != -1) return std::nullopt;
    Pt img = T(from);
    Pt tt = to - img;
    if (tt.x.get_den() != 1 || tt.y.get_den() != 1) return std::nullopt;
    T.t = {to_ll(tt.x.get_num()), to_ll(tt.y.get_num())};
    if (apply_map(T, P) == Q2) return T;
    return std::nullopt;
}

std::optional<UnimodularMap> are_equivalent(const Polygon& P, const Polygon& Q2) {
    if (!is_integral(P) || !is_integral(Q2))
        throw Error("NotLatticePolygon", "equivalence is decided for integer vertices only");
    if (P.size() != Q2.size() || P.size() == 0) return std::nullopt;
    size_t n = P.size();
    if (n == 1) {
        UnimodularMap T;
        Pt d = Q2.v[0] - P.v[0];
        T.t = {to_ll(d.x.get_num()), to_ll(d.y.get_num())};
        return T;
    }
    if (n == 2) {
        Pt d = P.v[1] - P.v[0], e = Q2.v[1] - Q2.v[0];
        long long dx = to_ll(d.x.get_num()), dy = to_ll(d.y.get_num());
        long long ex = to_ll(e.x.get_num()), ey = to_ll(e.y.get_num());
        if (gcdll(dx, dy) != gcdll(ex, ey)) return std::nullopt;
        auto A = basis_from(primitive(dx, dy)), B = basis_from(primitive(ex, ey));
        UnimodularMap Ta, Tb;
        Ta.m = A;
        Tb.m = B;
        UnimodularMap T = Tb.compose(Ta.inverse());
        Pt img = T(P.v[0]);
        Pt tt = Q2.v[0] - img;
        T.t = {to_ll(tt.x.get_num()), to_ll(tt.y.get_num())};
        return T;
    }
    // send (v1 - v0, v_{n-1} - v0) onto every adjacent pair of Q2, both orientations
    Pt a = P.v[1] - P.v[0], b = P.v[n - 1] - P.v[0];
    Q det = cross(a, b);
    for (size_t j = 0; j < n; ++j) {
        const Pt& w = Q2.v[j];
        Pt nx = Q2.v[(j + 1) % n] - w, pv = Q2.v[(j + n - 1) % n] - w;
        for (int flip = 0; flip < 2; ++flip) {
            Pt c = flip ? pv : nx, d = flip ? nx : pv;
            // M [a b] = [c d]  =>  M = [c d] [a b]^{-1}
            std::array<std::array<Q, 2>, 2> M;
            M[0][0] = (c.x * b.y - d.x * a.y) / det;
            M[0][1] = (d.x * a.x - c.x * b.x) / det;
            M[1][0] = (c.y * b.y - d.y * a.y) / det;
            M[1][1] = (d.y * a.x - c.y * b.x) / det;
            if (auto T = check_map(M, P.v[0], w, P, Q2)) return T;
        }
    }
    return std::nullopt;
}

std::vector<HalfPlane> halfplane_description(const Polygon& P) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "half-plane description needs a 2D polygon");
    std::vector<HalfPlane> out;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = P.v[i];
        const Pt& b = P.v[(i + 1) % n];
        Pt d = b - a;
        // outward normal (dy, -dx), scaled to a primitive integer vector
        Z l;
        mpz_lcm(l.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
        Z nx = Z(d.y * l), ny = Z(-d.x * l);
        Z g;
        mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
        nx /= g;
        ny /= g;
        HalfPlane h;
        h.normal = Pt(Q(nx), Q(ny));
        h.offset = dot(h.normal, a);
        out.push_back(h);
    }
    return out;
}

Polygon halfplane_intersection(const std::vector<HalfPlane>& hs) {
    std::vector<Pt> cand;
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            const Pt& a = hs[i].normal;
            const Pt& b = hs[j].normal;
            Q det = cross(a, b);
            if (det == 0) continue;
            Pt p((hs[i].offset * b.y - hs[j].offset * a.y) / det,
                 (a.x * hs[j].offset - b.x * hs[i].offset) / det);
            bool ok = true;
            for (auto& h : hs)
                if (h.eval(p) > 0) { ok = false; break; }
            if (ok) cand.push_back(p);
        }
    if (cand.empty()) return Polygon{};
    return convex_hull(cand);
}

}  // namespace lw

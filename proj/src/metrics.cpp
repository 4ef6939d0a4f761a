#include "latwidth/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace lw {

const std::vector<Dir>& direction_set_A() {
    static const std::vector<Dir> A{{1, 0}, {0, 1}, {-1, 1}};
    return A;
}

Q width_in_direction(const Polygon& P, const Dir& u) {
    if (P.size() == 0) return 0;
    Q lo = dot(u, P.v[0]), hi = lo;
    for (size_t i = 1; i < P.size(); ++i) {
        Q s = dot(u, P.v[i]);
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }
    return hi - lo;
}

static bool canonical_sign(const Dir& u) { return u.x > 0 || (u.x == 0 && u.y > 0); }

// shorter first, then lexicographically larger
static bool better_tie(const Dir& a, const Dir& b) {
    long long na = a.x * a.x + a.y * a.y, nb = b.x * b.x + b.y * b.y;
    if (na != nb) return na < nb;
    return b < a;
}

Q inscribed_square_radius(const Polygon& P) {
    auto hp = halfplane_description(P);
    size_t n = hp.size();
    std::vector<Q> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = abs(hp[i].normal.x) + abs(hp[i].normal.y);
    Q best = -1;
    // LP in (cx, cy, r): optimum sits where three constraints are tight
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                const HalfPlane* H[3] = {&hp[i], &hp[j], &hp[k]};
                Q S[3] = {s[i], s[j], s[k]};
                auto det3 = [&](int col, const Q* rhs) {
                    Q m[3][3];
                    for (int r = 0; r < 3; ++r) {
                        m[r][0] = H[r]->normal.x;
                        m[r][1] = H[r]->normal.y;
                        m[r][2] = S[r];
                        if (col >= 0) m[r][col] = rhs[r];
                    }
                    return Q(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
                };
                Q D = det3(-1, nullptr);
                if (D == 0) continue;
                Q b[3] = {H[0]->offset, H[1]->offset, H[2]->offset};
                Pt c(det3(0, b) / D, det3(1, b) / D);
                Q r = det3(2, b) / D;
                if (r <= best) continue;
                bool ok = true;
                for (size_t t = 0; t < n && ok; ++t)
                    if (dot(hp[t].normal, c) + r * s[t] > hp[t].offset) ok = false;
                if (ok) best = r;
            }
    return best;
}

WidthResult lattice_width(const Polygon& P) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "lattice width has no minimizer for a lower-dimensional body");
    // every u with w(P,u) <= gamma lies in gamma * (P-P)^*, so enumerate that polygon
    Q gamma = width_in_direction(P, {1, 0});
    Polygon D = difference_body(P);
    Polygon Kstar = polar(D);
    WidthResult best{gamma, {1, 0}};
    for (const IPt& z : lattice_points(scale(Kstar, gamma), false)) {
        if (!canonical_sign(z) || gcdll(z.x, z.y) != 1) continue;
        Q w = width_in_direction(P, z);
        if (w < best.value || (w == best.value && better_tie(z, best.minimizer))) best = {w, z};
    }
    return best;
}

WidthResult width_over_set(const Polygon& P, const std::vector<Dir>& X) {
    if (X.empty()) throw Error("EmptyDirectionSet", "no directions given");
    WidthResult best{width_in_direction(P, X[0]), X[0]};
    for (size_t i = 1; i < X.size(); ++i) {
        Q w = width_in_direction(P, X[i]);
        if (w < best.value) best = {w, X[i]};
    }
    return best;
}

static size_t bottom_index(const std::vector<Pt>& v) {
    size_t b = 0;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i].y < v[b].y || (v[i].y == v[b].y && v[i].x < v[b].x)) b = i;
    return b;
}

static Polygon minkowski_sum(const Polygon& A, const Polygon& B) {
    std::vector<Pt> a = A.v, b = B.v;
    std::rotate(a.begin(), a.begin() + bottom_index(a), a.end());
    std::rotate(b.begin(), b.begin() + bottom_index(b), b.end());
    size_t n = a.size(), m = b.size(), i = 0, j = 0;
    std::vector<Pt> out;
    // merge edge vectors by polar angle; both start at angle 0 from their bottom vertex
    while (i < n || j < m) {
        out.push_back(a[i % n] + b[j % m]);
        Pt ea = a[(i + 1) % n] - a[i % n], eb = b[(j + 1) % m] - b[j % m];
        if (i == n) ++j;
        else if (j == m) ++i;
        else {
            int c = sgn(cross(ea, eb));
            if (c >= 0) ++i;
            if (c <= 0) ++j;
        }
    }
    return convex_hull(out);
}

Polygon difference_body(const Polygon& P) {
    Polygon neg = scale(P, -1);
    if (!P.full_dim()) {
        std::vector<Pt> d;
        for (auto& a : P.v)
            for (auto& b : P.v) d.push_back(a - b);
        return convex_hull(d);
    }
    return minkowski_sum(P, neg);
}

static void require_origin_interior(const Polygon& P) {
    if (!P.full_dim() || !contains(P, Pt(0, 0), true))
        throw Error("OriginNotInterior", "the origin must lie in the interior");
}

Polygon polar(const Polygon& P) {
    require_origin_interior(P);
    std::vector<Pt> v;
    for (auto& h : halfplane_description(P)) v.push_back(Pt(h.normal.x / h.offset, h.normal.y / h.offset));
    return convex_hull(v);
}

Q gauge(const std::vector<HalfPlane>& hp, const Pt& z) {
    Q g = 0;
    for (auto& h : hp) {
        Q t = dot(h.normal, z) / h.offset;
        if (t > g) g = t;
    }
    return g;
}

Q first_minimum(const Polygon& P) {
    require_origin_interior(P);
    auto hp = halfplane_description(P);
    Q lam = -1;
    for (IPt e : {IPt{1, 0}, IPt{-1, 0}, IPt{0, 1}, IPt{0, -1}}) {
        Q g = gauge(hp, Pt(e));
        if (lam < 0 || g < lam) lam = g;
    }
    // any better z lies in lam * P
    for (const IPt& z : lattice_points(scale(P, lam), false)) {
        if (z.x == 0 && z.y == 0) continue;
        Q g = gauge(hp, Pt(z));
        if (g < lam) lam = g;
    }
    return lam;
}

bool is_centrally_symmetric(const Polygon& P) { return scale(P, -1) == P; }

Q transference_product(const Polygon& P, bool symmetric) {
    require_origin_interior(P);
    if (symmetric && !is_centrally_symmetric(P))
        throw Error("NotCentrallySymmetric", "P differs from -P");
    Q p = first_minimum(P) * lattice_width(P).value;
    return symmetric ? Q(p / 2) : p;
}

static bool seg_intersect_x(const Pt& a, const Pt& b, const Pt& c, const Pt& d, Q& x) {
    Pt r = b - a, s = d - c;
    Q den = cross(r, s);
    if (den == 0) return false;
    Q t = cross(c - a, s) / den, u = cross(c - a, r) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return false;
    x = a.x + t * r.x;
    return true;
}

bool covers_torus(const Polygon& P, Pt* uncovered) {
    if (!P.full_dim()) {
        if (uncovered) *uncovered = Pt(make_q(1, 2), make_q(1, 2));
        return false;
    }
    Q minx = P.v[0].x, maxx = minx, miny = P.v[0].y, maxy = miny;
    for (auto& p : P.v) {
        minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
    }
    // fast path: P contains a unit square with integer corner, a fundamental domain
    for (const IPt& z : lattice_points(P, false)) {
        Pt c(z);
        if (contains(P, c + Pt(1, 0), false) && contains(P, c + Pt(0, 1), false) && contains(P, c + Pt(1, 1), false))
            return true;
    }
    std::vector<Polygon> tr;
    for (long long zx = to_ll(ceil_q(-maxx)); zx <= to_ll(floor_q(1 - minx)); ++zx)
        for (long long zy = to_ll(ceil_q(-maxy)); zy <= to_ll(floor_q(1 - miny)); ++zy)
            tr.push_back(translate(P, Pt(IPt{zx, zy})));
    std::vector<Q> xs{Q(0), Q(1)};
    std::vector<std::pair<Pt, Pt>> edges;
    for (auto& T : tr)
        for (size_t i = 0; i < T.size(); ++i) {
            const Pt& a = T.v[i];
            const Pt& b = T.v[(i + 1) % T.size()];
            // only edges meeting the unit square can create breakpoints inside it
            if (std::max(a.x, b.x) < 0 || std::min(a.x, b.x) > 1 || std::max(a.y, b.y) < 0 || std::min(a.y, b.y) > 1)
                continue;
            edges.push_back({a, b});
            if (T.v[i].x > 0 && T.v[i].x < 1) xs.push_back(T.v[i].x);
        }
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            Q x;
            if (seg_intersect_x(edges[i].first, edges[i].second, edges[j].first, edges[j].second, x) && x > 0 &&
                x < 1)
                xs.push_back(x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        Q xm = (xs[k] + xs[k + 1]) / 2;
        std::vector<std::pair<Q, Q>> iv;
        for (auto& T : tr)
            if (auto r = y_range_at(T, xm)) iv.push_back(*r);
        std::sort(iv.begin(), iv.end());
        Q cur = 0;
        bool gap = false;
        Q gy;
        for (auto& [lo, hi] : iv) {
            if (lo > cur) { gap = true; gy = (cur + lo) / 2; break; }
            if (hi > cur) cur = hi;
            if (cur >= 1) break;
        }
        if (!gap && cur < 1) { gap = true; gy = (cur + 1) / 2; }
        if (gap) {
            if (uncovered) *uncovered = Pt(xm, gy);
            return false;
        }
    }
    return true;
}

CoveringRadiusBracket covering_radius_bracket(const Polygon& P, const Q& tol) {
    if (tol <= 0) throw Error("InvalidTolerance", "tol must be positive");
    if (!P.full_dim()) throw Error("DegeneratePolygon", "covering radius is infinite for a lower-dimensional body");
    CoveringRadiusBracket b{0, 1, Pt(make_q(1, 2), make_q(1, 2))};
    Pt gap;
    while (!covers_torus(scale(P, b.upper), &gap)) {
        b.lower = b.upper;
        b.witness_translate = Pt(-gap.x, -gap.y);
        b.upper *= 2;
    }
    while (b.upper - b.lower > tol) {
        Q mid = (b.lower + b.upper) / 2;
        if (covers_torus(scale(P, mid), &gap)) b.upper = mid;
        else {
            b.lower = mid;
            b.witness_translate = Pt(-gap.x, -gap.y);
        }
    }
    return b;
}

EuclideanWidth euclidean_min_width(const Polygon& P) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "euclidean width of a lower-dimensional body is 0");
    EuclideanWidth best{-1, 0, Pt()};
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = P.v[i];
        Pt d = P.v[(i + 1) % n] - a;
        Q far = 0;
        for (auto& v : P.v) far = std::max(far, Q(cross(d, v - a)));  // interior lies left of d
        Q sq = far * far / dot(d, d);
        if (best.squared < 0 || sq < best.squared) best = {sq, 0, Pt(d.y, -d.x)};
    }
    best.value = std::sqrt(best.squared.get_d());
    return best;
}

}  // namespace lw

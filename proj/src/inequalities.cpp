#include "latwidth/inequalities.hpp"

#include <array>
#include <cmath>

#include "latwidth/random.hpp"
#include "latwidth/search.hpp"

namespace lw {

Enclosure exact(const Q& q) { return {q, q}; }
Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Enclosure operator*(const Enclosure& a, const Enclosure& b) { return {a.lo * b.lo, a.hi * b.hi}; }
Enclosure operator/(const Enclosure& a, const Enclosure& b) { return {a.lo / b.hi, a.hi / b.lo}; }

Z isqrt(const Z& n) {
    if (n < 0) throw Error("NegativeSqrt", "isqrt of a negative number");
    if (n < 2) return n;
    // Newton from above: x <- (x + n/x)/2 decreases to floor(sqrt n)
    Z x = Z(1) << (mpz_sizeinbase(n.get_mpz_t(), 2) / 2 + 1);
    for (;;) {
        Z y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

Enclosure sqrt_enclosure(const Q& x, int bits) {
    if (x < 0) throw Error("NegativeSqrt", "sqrt of a negative number");
    Z scale = Z(1) << (2 * bits);
    Q sx = x * Q(scale);
    Z fl = floor_q(sx);
    Z r = isqrt(fl);
    Q den(Z(1) << bits);
    Enclosure e{Q(r) / den, Q(r + 1) / den};
    e.lo.canonicalize();
    e.hi.canonicalize();
    if (e.lo * e.lo == x) e.hi = e.lo;
    return e;
}

Enclosure sqrt_enclosure(const Enclosure& x, int bits) {
    return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

// atan(1/m): partial sums alternate around the limit
static Enclosure atan_inv(long long m, int terms) {
    Q s = 0, prev = 0;
    Q xm = make_q(1, m), p = xm;
    Q m2 = make_q(m * m);
    for (int n = 0; n <= terms; ++n) {
        prev = s;
        Q t = p / make_q(2 * n + 1);
        s += (n % 2 == 0) ? t : Q(-t);
        p /= m2;
    }
    return s < prev ? Enclosure{s, prev} : Enclosure{prev, s};
}

Enclosure pi_enclosure(int terms) {
    Enclosure a = atan_inv(5, terms), b = atan_inv(239, terms);
    return {16 * a.lo - 4 * b.hi, 16 * a.hi - 4 * b.lo};
}

const NamedConstant& flt20() {
    static const NamedConstant c = [] {
        Enclosure s3 = sqrt_enclosure(make_q(3));
        // 1 + 2/sqrt 3
        return NamedConstant{"Flt(2,0)", {1 + 2 / s3.hi, 1 + 2 / s3.lo}, "Hurkens: 1 + 2/sqrt(3)"};
    }();
    return c;
}

const NamedConstant& flt2inf() {
    static const NamedConstant c{"Flt(2,inf)", sqrt_enclosure(make_q(8, 3)), "Makai: sqrt(8/3)"};
    return c;
}

const NamedConstant& c2() {
    static const NamedConstant c = [] {
        Enclosure p = pi_enclosure(14);
        return NamedConstant{"c_2", {128 / Q(p.hi * p.hi), 128 / Q(p.lo * p.lo)}, "(8/pi)^2 * 2!"};
    }();
    return c;
}

std::vector<NamedConstant> named_constants() {
    return {flt20(),
            {"Flt(2,1)", exact(3), "w <= 3 for one interior point"},
            {"Flt(2,2)", exact(make_q(10, 3)), "w <= 10/3 for two interior points"},
            flt2inf(),
            {"pi", pi_enclosure(14), "Machin formula"},
            c2()};
}

bool verify_enclosures() {
    Q eps = make_q(1, 1000000000000LL);
    // 1 + 2/sqrt3: 3(x-1)^2 against 4
    const auto& f = flt20().enclosure;
    if (!(3 * (f.lo - 1) * (f.lo - 1) <= 4 && 3 * (f.hi - 1) * (f.hi - 1) >= 4)) return false;
    const auto& g = flt2inf().enclosure;
    if (!(3 * g.lo * g.lo <= 8 && 3 * g.hi * g.hi >= 8)) return false;
    Enclosure p = pi_enclosure(14);
    // Archimedes-type brackets as an independent sanity check
    if (!(p.lo > make_q(333, 106) && p.hi < make_q(355, 113))) return false;
    const auto& c = c2().enclosure;
    if (!(c.lo * p.hi * p.hi <= 128 && c.hi * p.lo * p.lo >= 128)) return false;
    for (auto& nc : named_constants())
        if (nc.enclosure.lo > nc.enclosure.hi || nc.enclosure.width() > eps) return false;
    return true;
}

// ---------------------------------------------------------------- catalog

static Polygon qpoly(std::initializer_list<std::pair<Q, Q>> v) {
    std::vector<Pt> pts;
    for (auto& [x, y] : v) pts.push_back(Pt(x, y));
    return convex_hull(pts);
}

std::vector<std::pair<std::string, Polygon>> extremizer_catalog() {
    Polygon T0 = make_polygon({{-1, -1}, {0, 1}, {1, 0}});
    Polygon flt22 = translate(scale(T0, make_q(5, 3)), Pt(make_q(1, 3), 0));
    return {
        {"3delta2", three_delta2()},
        {"flt22-maximizer", flt22},
        {"T0", T0},
        {"hexagon-H", make_polygon({{2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}, {1, -1}})},
        {"transference-triangle", make_polygon({{-1, -1}, {-1, 2}, {2, -1}})},
        {"local-optimum-quad",
         qpoly({{make_q(3, 2), make_q(1, 2)}, {make_q(1, 2), make_q(3, 2)}, {make_q(-1, 2), make_q(1, 2)}, {make_q(1, 2), make_q(-1, 2)}})},
    };
}

std::vector<CatalogRow> check_extremizers() {
    std::vector<CatalogRow> rows;
    auto fail = [](const std::string& name, const std::string& what) {
        throw Error("CatalogMismatch", name + ": " + what);
    };
    for (auto& [name, P] : extremizer_catalog()) {
        CatalogRow r{name, P, lattice_width(P).value, (long long)lattice_points(P, true).size(), area(P), {}};
        if (name == "3delta2") {
            if (r.width != 3 || r.interior != 1) fail(name, "expected w = 3, G° = 1");
        } else if (name == "flt22-maximizer") {
            if (r.width != make_q(10, 3) || r.interior != 2) fail(name, "expected w = 10/3, G° = 2");
        } else if (name == "T0") {
            Q ratio = r.width * r.width / r.area;
            r.extra.push_back({"w^2/area", to_string(ratio)});
            if (r.width != 2 || r.area != make_q(3, 2) || ratio != make_q(8, 3)) fail(name, "expected w = 2, area 3/2");
        } else if (name == "hexagon-H") {
            Q t = transference_product(P, true);
            r.extra.push_back({"lambda1", to_string(first_minimum(P))});
            r.extra.push_back({"transference", to_string(t)});
            if (t != make_q(4, 3) || first_minimum(P) != make_q(2, 3)) fail(name, "expected product 4/3");
        } else if (name == "transference-triangle") {
            Q t = transference_product(P, false);
            r.extra.push_back({"transference", to_string(t)});
            if (t != 3) fail(name, "expected product 3");
        } else if (name == "local-optimum-quad") {
            if (r.width != 2 || r.interior != 0) fail(name, "expected w = 2 and hollow");
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------- ratios

RatioCheck check_isominwidth(const Polygon& P) {
    RatioCheck c;
    long long k = (long long)lattice_points(P, true).size();
    if (k == 0) throw Error("NoInteriorPoints", "isominwidth needs G° > 0");
    Q w = lattice_width(P).value;
    c.lhs = w * w;
    c.rhs = 9 * make_q(k);
    c.ok = c.lhs <= c.rhs;
    c.equality = c.lhs == c.rhs;
    if (c.equality) c.equality_class = is_integral(P) && are_equivalent(P, three_delta2()).has_value();
    return c;
}

RatioCheck check_makai(const Polygon& P) {
    RatioCheck c;
    Q A = area(P);
    if (A <= 0) throw Error("DegeneratePolygon", "Makai ratio needs positive area");
    Q w = lattice_width(P).value;
    c.lhs = w * w;
    c.rhs = make_q(8, 3) * A;
    c.ok = c.lhs <= c.rhs;
    c.equality = c.lhs == c.rhs;
    if (c.equality && P.size() == 3) {
        // P = (w/2) U T0 + t: rescale, move a vertex to 0 and compare as lattice triangles
        Polygon R = scale(P, 2 / w);
        R = translate(R, Pt(-R.v[0].x, -R.v[0].y));
        c.equality_class = is_integral(R) && are_equivalent(R, make_polygon({{-1, -1}, {0, 1}, {1, 0}})).has_value();
    }
    return c;
}

ChainCheck check_flatness_chain(long long k, const Q& M_k) {
    if (k < 1) throw Error("InvalidK", "k must be positive");
    ChainCheck c;
    Enclosure sk = sqrt_enclosure(make_q(k));
    Enclosure f0 = flt20().enclosure, finf = flt2inf().enclosure;
    c.bound_lo = f0.lo + finf.lo * sk.lo;
    c.ratio_bound_hi = f0.hi / sk.lo + finf.hi;
    c.below_three = c.ratio_bound_hi < 3;
    c.ok = M_k <= c.bound_lo;
    if (k >= 3) c.ok = c.ok && c.below_three;
    // Flt(2,k)/sqrt(k) < 3 for k >= 2, checked squared
    if (k >= 2) c.ok = c.ok && M_k * M_k < 9 * make_q(k);
    return c;
}

bool lambda1_lower_bound_check(const Polygon& P, long long k) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "needs a 2D polygon");
    if ((long long)lattice_points(P, true).size() > k) throw Error("TooManyPoints", "G°(P) exceeds k");
    Q l1 = first_minimum(difference_body(P));
    Q w = lattice_width(P).value;
    Q a = 1 / w;
    Q b = (1 - 1 / w) / make_q(k + 1);  // Flt(1,0) = 1
    return l1 >= std::min(a, b);
}

DiscrepancyCheck wdt_discrepancy_check(const Polygon& P, bool covered) {
    DiscrepancyCheck d;
    Q w = lattice_width(P).value;
    const Enclosure& f0 = flt20().enclosure;
    if (w <= f0.hi) return d;
    d.applicable = true;
    Q A = area(P);
    Q G = make_q((long long)lattice_points(P, false).size());
    Q Gi = make_q((long long)lattice_points(P, true).size());
    // the right side grows with Flt(2,0), so its certified value uses the lower end
    Q up = 1 + f0.lo / w;
    d.upper_ok = Gi <= G && G <= A * up * up;
    if (covered) {
        d.lower_checked = true;
        Q lo = 1 - f0.lo / w;  // left side shrinks with Flt(2,0): the lower end is the certified maximum
        d.lower_ok = A * lo * lo <= Gi;
    }
    return d;
}

bool makai_weak2_check(const Polygon& P) {
    Q w = lattice_width(P).value;
    return w * w <= c2().enclosure.lo * area(P);
}

Polygon regular_triangle_proxy() {
    // (0,0), (1,0), (1/2, h) with h within 1e-7 of sqrt(3)/2
    Enclosure s3 = sqrt_enclosure(make_q(3), 30);
    Q h = snap(to_double(s3.lo) / 2, 10000000);
    return convex_hull({Pt(0, 0), Pt(1, 0), Pt(make_q(1, 2), h)});
}

bool pal_ratio_check(const Polygon& P, double slack) {
    static const double ref = [] {
        Polygon T = regular_triangle_proxy();
        return std::sqrt(to_double(euclidean_min_width(T).squared / area(T)));
    }();
    double r = std::sqrt(to_double(euclidean_min_width(P).squared / area(P)));
    return r <= ref + slack;
}

// ---------------------------------------------------------------- hexagon barycentrics

namespace {

// q_i = S_i ∩ S_{i+1}, indices mod 6 (q_0 = q_6); r_i = q_{i-1} + q_i
const std::array<Pt, 6>& hex_q() {
    static const std::array<Pt, 6> q{Pt(-1, -1), Pt(0, -1), Pt(1, 0), Pt(1, 1), Pt(0, 1), Pt(-1, 0)};
    return q;  // q[0] = q_0 = q_6, q[1] = q_1, ...
}
const Pt& qidx(int i) { return hex_q()[((i % 6) + 6) % 6]; }

struct Bary {
    Q alpha, beta, talpha;
};

// p = alpha q_{i-1} + beta r_i + talpha q_i with alpha + beta + talpha = 1
Bary bary(const Pt& p, int i) {
    Pt a = qidx(i - 1), c = qidx(i), r = a + c;
    Q D = cross(a, r, c);
    Bary b;
    b.alpha = cross(p, r, c) / D;
    b.beta = cross(a, p, c) / D;
    b.talpha = cross(a, r, p) / D;
    return b;
}

bool positive(const Bary& b) { return b.alpha > 0 && b.beta > 0 && b.talpha > 0; }

// intersection of lines (a,b) and (c,d)
std::optional<Pt> meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    Pt u = b - a, v = d - c;
    Q den = cross(u, v);
    if (den == 0) return std::nullopt;
    Q t = cross(c - a, v) / den;
    return a + t * u;
}

}  // namespace

bool hexagon_barycentric_check(int samples, uint64_t seed, BarycentricStats* stats) {
    Rng rng(seed);
    BarycentricStats st;
    bool regular_seen = false;
    for (long long tries = 0; st.feasible < samples && tries < 200LL * samples + 100; ++tries) {
        std::array<Pt, 7> p;  // p[1..6]
        if (tries == 0) {
            // the regular configuration alpha = beta = talpha = 1/3
            p[1] = make_q(1, 3) * (qidx(0) + (qidx(0) + qidx(1)) + qidx(1));
            p[2] = qidx(1) + (qidx(1) - p[1]);
        } else {
            Q x = rand_q(rng, 0, 1, 1 << 12, true), y = rand_q(rng, 0, 1 - x, 1 << 12, true);
            p[1] = x * qidx(0) + y * (qidx(0) + qidx(1)) + (1 - x - y) * qidx(1);
            Q s = rand_q(rng, 0, 3, 1 << 12, true);
            p[2] = qidx(1) + s * (qidx(1) - p[1]);
        }
        p[4] = Pt(-p[1].x, -p[1].y);
        auto m3 = meet(p[2], qidx(2), p[4], qidx(3));
        if (!m3) {
            ++st.skipped;
            continue;
        }
        p[3] = *m3;
        p[5] = Pt(-p[2].x, -p[2].y);
        p[6] = Pt(-p[3].x, -p[3].y);
        std::array<Bary, 7> b;
        bool ok = true;
        for (int i = 1; i <= 6 && ok; ++i) {
            b[i] = bary(p[i], i);
            ok = positive(b[i]);
        }
        if (!ok) {
            ++st.skipped;
            continue;
        }
        Polygon K = convex_hull({p[1], p[2], p[3], p[4], p[5], p[6]});
        if (K.size() != 6 || lattice_points(K, true).size() != 1) {
            ++st.skipped;
            continue;
        }
        ++st.feasible;
        auto B = [&](int i) -> const Bary& { return b[((i - 1) % 6 + 6) % 6 + 1]; };
        for (int i = 1; i <= 6; ++i) {
            if (B(i - 1).beta * B(i).beta != B(i - 1).alpha * B(i).talpha) st.identities_ok = false;
            if (B(i + 3).beta != B(i).beta || B(i + 3).alpha != B(i).alpha) st.identities_ok = false;
        }
        Q lhs = 1, rhs = 1;
        for (int i = 1; i <= 3; ++i) {
            lhs *= B(i).beta * B(i).beta;
            rhs *= B(i).alpha * B(i).talpha;
        }
        if (lhs != rhs) st.identities_ok = false;
        if (width_in_direction(K, {1, 0}) != 2 + 2 * B(3).beta || width_in_direction(K, {-1, 1}) != 2 + 2 * B(2).beta ||
            width_in_direction(K, {0, 1}) != 2 + 2 * B(1).beta)
            st.widths_ok = false;
        Q mb = std::min({B(1).beta, B(2).beta, B(3).beta});
        bool regular = true;
        for (int i = 1; i <= 3; ++i)
            if (B(i).alpha != make_q(1, 3) || B(i).beta != make_q(1, 3)) regular = false;
        if (regular) regular_seen = true;
        if (mb > make_q(1, 3) || (!regular && mb == make_q(1, 3))) st.beta_ok = false;
        Q prod = first_minimum(K) * lattice_width(K).value / 2;
        if (st.feasible == 1 || prod > st.max_product) st.max_product = prod;
    }
    if (stats) *stats = st;
    return st.feasible == samples && regular_seen && st.identities_ok && st.widths_ok && st.beta_ok &&
           st.max_product <= make_q(4, 3);
}

// ---------------------------------------------------------------- symmetric cross case

bool symmetric_cross_case_check(CrossSolution* sol) {
    // unknowns (a,b,c,d): two colinearities, equal widths b = c, Lagrange condition d = a - 1
    auto F = [](const std::array<double, 4>& X) {
        auto [a, b, c, d] = X;
        return std::array<double, 4>{-b * c - d + b + a * d, a * (1 + d) - c * (b - 1), b - c, d - a + 1};
    };
    auto J = [](const std::array<double, 4>& X) {
        auto [a, b, c, d] = X;
        return std::array<std::array<double, 4>, 4>{{{d, -c + 1, -b, -1 + a},
                                                      {1 + d, -c, -(b - 1), a},
                                                      {0, 1, -1, 0},
                                                      {-1, 0, 0, 1}}};
    };
    std::array<double, 4> X{0.6, 1.1, 1.3, -0.4};
    bool conv = false;
    for (int it = 0; it < 100; ++it) {
        auto r = F(X);
        double m = 0;
        for (double e : r) m = std::max(m, std::fabs(e));
        if (!std::isfinite(m)) break;
        if (m < 1e-15) {
            conv = true;
            break;
        }
        auto A = J(X);
        // Gaussian elimination
        for (int c = 0; c < 4; ++c) {
            int piv = c;
            for (int k = c + 1; k < 4; ++k)
                if (std::fabs(A[k][c]) > std::fabs(A[piv][c])) piv = k;
            std::swap(A[c], A[piv]);
            std::swap(r[c], r[piv]);
            if (std::fabs(A[c][c]) < 1e-15) return false;
            for (int k = c + 1; k < 4; ++k) {
                double f = A[k][c] / A[c][c];
                for (int j = c; j < 4; ++j) A[k][j] -= f * A[c][j];
                r[k] -= f * r[c];
            }
        }
        for (int c = 3; c >= 0; --c) {
            for (int j = c + 1; j < 4; ++j) r[c] -= A[c][j] * r[j];
            r[c] /= A[c][c];
        }
        for (int i = 0; i < 4; ++i) X[i] -= r[i];
        if (it == 99) conv = m < 1e-12;
    }
    if (!conv) throw Error("NoSolutionsFound", "Newton diverged on the symmetric cross system");
    auto [a, b, c, d] = X;
    double wE = std::min(2 * std::max(std::fabs(a), std::fabs(c)), 2 * std::max(std::fabs(b), std::fabs(d)));
    if (sol) *sol = {a, b, c, d, wE};
    double target = (1 + std::sqrt(2.0)) / 2;
    bool ok = std::fabs(a - 0.5) <= 1e-9 && std::fabs(b - target) <= 1e-9 && std::fabs(c - target) <= 1e-9 &&
              std::fabs(d + 0.5) <= 1e-9 && std::fabs(wE - (1 + std::sqrt(2.0))) <= 1e-9;
    // (1 + sqrt2)/2 < 4/3, certified
    Enclosure s2 = sqrt_enclosure(make_q(2));
    ok = ok && (1 + s2.hi) / 2 < make_q(4, 3);
    // boundary subcase: a vertex on the square's boundary, e.g. K = conv{±(1,1), ±(1,-1)}
    Polygon Kb = make_polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    ok = ok && lattice_width(Kb).value <= 2;
    return ok;
}

}  // namespace lw

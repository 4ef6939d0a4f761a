#include <array>
#include <cmath>

#include "latwidth/cases.hpp"
#include "latwidth/error.hpp"
#include "latwidth/random.hpp"

namespace lw {

bool hexagon_width_sum_check(const CaseFamily& F, int samples, uint64_t seed) {
    if (F.name != "hex") throw Error("UnknownCase", "width-sum check needs the hex family");
    Rng rng(seed);
    int got = 0;
    long long attempts = 0, max_attempts = 200LL * samples + 1000;
    while (got < samples && attempts++ < max_attempts) {
        std::vector<Q> par;
        for (size_t i = 0; i < F.num_params(); ++i) par.push_back(rand_q(rng, 0, 1));
        auto P = instantiate(F, par);
        if (!P) continue;
        ++got;
        if (width_in_direction(*P, {1, 0}) + width_in_direction(*P, {0, 1}) > 6) return false;
    }
    return got == samples;
}

// vertices (0,0), (t,y), (x,t); blocking points (u+1,v), (u,v+1), (u-1,v-1)
Q terminal_f(int i, const Q& x, const Q& y, const Q& u, const Q& v, const Q& t) {
    switch (i) {
        case 1: return Q((u - 1) * y - (v - 1) * t);
        case 2: return Q((u + 1 - t) * (t - y) - (v - y) * (x - t));
        case 3: return Q(-t * u + x * v + x);
    }
    throw Error("BadIndex", "terminal_f index must be 1, 2 or 3");
}

// det of the gradients of f1,f2,f3 restricted to the x,u,v rows. The f_i are
// quadratic, so symmetric differences give the partials exactly.
Q terminal_minor(const Q& x, const Q& y, const Q& u, const Q& v, const Q& t) {
    Q m[3][3];
    for (int c = 0; c < 3; ++c) {
        int f = c + 1;
        m[0][c] = (terminal_f(f, x + 1, y, u, v, t) - terminal_f(f, x - 1, y, u, v, t)) / 2;
        m[1][c] = (terminal_f(f, x, y, u + 1, v, t) - terminal_f(f, x, y, u - 1, v, t)) / 2;
        m[2][c] = (terminal_f(f, x, y, u, v + 1, t) - terminal_f(f, x, y, u, v - 1, t)) / 2;
    }
    return Q(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

namespace {

using V5 = std::array<double, 5>;

V5 term_residual(const V5& X, double x0) {
    auto [x, y, u, v, t] = X;
    return {(u - 1) * y - (v - 1) * t, (u + 1 - t) * (t - y) - (v - y) * (x - t), -t * u + x * v + x, t - x - y,
            x - x0};
}

void term_jacobian(const V5& X, double J[5][5]) {
    auto [x, y, u, v, t] = X;
    double rows[5][5] = {
        {0, u - 1, y, -t, -(v - 1)},
        {-(v - y), -(u + 1 - t) + (x - t), t - y, -(x - t), -(t - y) + (u + 1 - t) + (v - y)},
        {v + 1, 0, -t, x, -u},
        {-1, -1, 0, 0, 1},
        {1, 0, 0, 0, 0},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) J[i][j] = rows[i][j];
}

// Gaussian elimination with partial pivoting; false when singular
bool solve5(double A[5][5], V5& b) {
    for (int c = 0; c < 5; ++c) {
        int piv = c;
        for (int r = c + 1; r < 5; ++r)
            if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
        if (std::fabs(A[piv][c]) < 1e-14) return false;
        std::swap(A[piv], A[c]);
        std::swap(b[piv], b[c]);
        for (int r = c + 1; r < 5; ++r) {
            double f = A[r][c] / A[c][c];
            for (int k = c; k < 5; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    for (int c = 4; c >= 0; --c) {
        for (int k = c + 1; k < 5; ++k) b[c] -= A[c][k] * b[k];
        b[c] /= A[c][c];
    }
    return true;
}

double max_abs(const V5& r) {
    double m = 0;
    for (double e : r) m = std::max(m, std::fabs(e));
    return m;
}

Q g_exact(const Q& x, const Q& y) { return Q(x * x + x * y + y * y - 3 * x); }

}  // namespace

bool terminal_elimination_check(int samples, double tol, uint64_t seed, EliminationStats* stats) {
    if (samples < 1) throw Error("InvalidSamples", "samples must be positive");
    Rng rng(seed);
    std::uniform_real_distribution<double> U(0, 1);
    EliminationStats st;
    bool ok = true;
    long long attempts = 0, max_attempts = 50LL * samples + 100;
    while (st.solutions < samples && attempts++ < max_attempts) {
        double x0 = 4 * U(rng);
        V5 X{x0, -1 + 4 * U(rng), -3 + 6 * U(rng), -3 + 6 * U(rng), 0};
        X[4] = X[0] + X[1];
        bool conv = false;
        for (int it = 0; it < 80; ++it) {
            V5 r = term_residual(X, x0);
            if (!std::isfinite(max_abs(r)) || max_abs(r) > 1e8) break;
            if (max_abs(r) < 1e-13) {
                conv = true;
                break;
            }
            double J[5][5];
            term_jacobian(X, J);
            if (!solve5(J, r)) break;
            for (int i = 0; i < 5; ++i) X[i] -= r[i];
        }
        if (!conv) continue;
        ++st.solutions;
        double x = X[0], y = X[1];
        double g = x * x + x * y + y * y - 3 * x;
        st.max_abs_g = std::max(st.max_abs_g, std::fabs(g));
        st.max_sum = st.solutions == 1 ? x + y : std::max(st.max_sum, x + y);
        if (std::fabs(g) > tol || x + y > 3 + tol) ok = false;
    }
    if (st.solutions == 0) throw Error("NoSolutionsFound", "Newton diverged from every start");

    // ellipse: g = 3[(z-1)^2/4 + (s-3)^2/12 - 1] with z = x+y, s = x-y;
    // z = 1 + 2(1-m^2)/(1+m^2) runs over the z-range of the ellipse
    bool ell = g_exact(3, 0) == 0;
    for (int i = 0; i < 1000 && ell; ++i) {
        Q x = rand_q(rng, -5, 5), y = rand_q(rng, -5, 5);
        Q z = x + y, s = x - y;
        Q rhs = 3 * (Q((z - 1) * (z - 1)) / 4 + Q((s - 3) * (s - 3)) / 12 - 1);
        if (g_exact(x, y) != rhs) ell = false;
        Q m = rand_q(rng, -50, 50);
        Q zm = 1 + 2 * Q(1 - m * m) / Q(1 + m * m);
        if (zm > 3 || (zm == 3 && m != 0)) ell = false;
    }
    // z = 3 forces m = 0, hence sin = 0, s = 3 and (x,y) = (3,0)
    {
        Q m = 0;
        Q zm = 1 + 2 * Q(1 - m * m) / Q(1 + m * m);
        Q sm = 3;
        if (zm != 3 || (zm + sm) / 2 != 3 || (zm - sm) / 2 != 0) ell = false;
    }
    st.ellipse_ok = ell;
    if (stats) *stats = st;
    return ok && ell && st.solutions >= samples;
}

bool lagrange_regularity_check(int samples, uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        Q t = rand_q(rng, 0, 4, 1 << 20, true);
        Q x = rand_q(rng, 0, t, 1 << 20, true);
        Q y = rand_q(rng, 0, t, 1 << 20, true);
        Q u = rand_q(rng, -4, 4), v = rand_q(rng, -4, 4);
        Q m = terminal_minor(x, y, u, v, t);
        if (m != Q((y + 1) * (t * t - x * y))) return false;
        if (sgn(m) <= 0) return false;
    }
    return true;
}

bool trapezoid_identity_check(int samples, uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        // int S3 = int conv{(-1,1),(-1,2),(0,1)}: -1 < a < 0, 1 < b < 1 - a
        Q a = rand_q(rng, -1, 0, 1 << 20, true);
        Q b = rand_q(rng, 1, 1 - a, 1 << 20, true);
        Q p = a * a * b - 3 * a * a + a * b * b - 4 * a * b + 3 * a - b * b + b;
        Q D1 = a * b - 3 * a - b - 1, D2 = a * b - 3 * a + b * b - 2 * b + 1;
        Q f = -2 * (b - 1) * p / (D1 * D2);
        Q rhs = -2 * a / Q(a * b - 3 * a + (b - 1) * (b - 1)) - Q(-a * b + 5 * a + b + 3) / D1;
        if (f + 3 != rhs) return false;
        if (!(D1 < 0 && D2 > 0 && p < 0 && f < 0)) return false;
        // vertex of the parabola in a
        Q a0 = (1 - b) / 2;
        Q p0 = a0 * a0 * b - 3 * a0 * a0 + a0 * b * b - 4 * a0 * b + 3 * a0 - b * b + b;
        if (p0 != -(b - 1) * (b * b + 3) / 4 || p > p0) return false;

        // second sub-case, p1 in conv{(-1,-2),(-1,-1),(0,-1)}
        Q A = a * b - 3 * a + 2 * b - 2, B = a * b - 3 * a - b * b + 3 * b - 4;
        Q p2 = 2 * a * a * b - 6 * a * a - a * b * b + 10 * a * b - 21 * a - 4 * b * b + 14 * b - 18;
        Q f2 = (a * b - 5 * a) / A - Q(2 * a + b * b - 2 * b + 3) / B - 3;
        if (f2 != -(b - 1) * p2 / (A * B)) return false;
        if (!(A > 0 && B < 0 && p2 < 0 && f2 < 0)) return false;
        Q pm1 = 2 * b - 6 + b * b - 10 * b + 21 - 4 * b * b + 14 * b - 18;  // p(-1,b)
        if (pm1 != -3 * (b - 1) * (b - 1)) return false;
    }
    return true;
}

bool standard_triangle_hyperbola_check(int samples, uint64_t seed) {
    Rng rng(seed);
    auto pb = [](const Q& a, const Q& b) { return Q(-a * a + a * b - 3 * a + b * b + 2 * b - 2); };
    for (int i = 0; i < samples; ++i) {
        // the two endpoint identities as polynomials: compare at random b
        Q b = rand_q(rng, -3, 3);
        if (pb(b - 1, b) != b * b || pb(2 * b - 1, b) != -(b + 1) * b) return false;
        // S_{3,iii}: -1 <= b <= 0, a between 2b-1 and b-1
        Q bb = rand_q(rng, -1, 0);
        Q a = rand_q(rng, 2 * bb - 1, bb - 1);
        bool corner = (a == -3 && bb == -1) || (a == -1 && bb == 0);
        if (!corner && pb(a, bb) <= 0) return false;
        if (corner) continue;
        // width of the slid triangle in direction e1 - e2, and its gap to 3
        Q p1x = (bb + 1) * (a + 3) / (bb - 2);
        Q p1y = -1 + (bb + 1) * (a * bb + a + 4 * bb + 1) / ((a + 1) * (bb - 2));
        Q w = (p1x - p1y) - (a - bb);
        if (w != 3 * (a - bb) * (a + bb + 1) / ((a + 1) * (bb - 2))) return false;
        if (3 - w != 3 * pb(a, bb) / ((a + 1) * (bb - 2))) return false;
        if (w >= 3) return false;
    }
    return true;
}

bool kite_algebra_check(int samples, uint64_t seed) {
    Rng rng(seed);
    auto E = [](const Q& x, const Q& y) {
        return Q(x * x * y - 7 * x * y * y + 12 * y * y * y - 2 * x * x + 13 * x * y - 19 * y * y + 5 * x - 18 * y - 5);
    };
    for (int i = 0; i < samples; ++i) {
        Q y = rand_q(rng, -5, 5);
        if (E(5, y) != 12 * (y - make_q(5, 2)) * (y - 1) * (y - 1)) return false;
        // a + 3b < 5, -a + 2b <= 1, b >= 1 (and c in [-1, a-2] needs a >= 1)
        Q b = rand_q(rng, 1, make_q(6, 5), 1 << 20, true);
        Q a = rand_q(rng, 2 * b - 1, 5 - 3 * b, 1 << 20, true);
        // D = (a-1)(a-b-1) + b + 1 > b here; the sharper D >= 3 does not hold on this domain
        Q D = a * (a - 1) - (a - 2) * (b + 1);
        if (D != (a - 1) * (a - b - 1) + b + 1 || D <= b) return false;
        // numerator of w(P',e2) - 3 after bounding c by a - 2
        Q num = (b - 2) * D + (b + 1) * (a - 1);
        if (E(a + 3 * b, b) != num || num >= 0) return false;
        Q bound = b + 1 + (b + 1) * (a - 1) / D - 3;
        if (bound != num / D) return false;
    }
    return true;
}

}  // namespace lw

#pragma once
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace lw {

// mpq_class keeps itself canonical once constructed through the helpers below
using Q = mpq_class;
using Z = mpz_class;

Q parse_rational(const std::string& s);  // "p/q", "-3", "0.25"
std::string to_string(const Q& q);       // "p/q" or "p"

Z floor_q(const Q& q);
Z ceil_q(const Q& q);
inline double to_double(const Q& q) { return q.get_d(); }
inline Q make_q(long long n, long long d = 1) {
    if (d == 1) return Q(static_cast<long>(n));
    Q r(Z(static_cast<long>(n)), Z(static_cast<long>(d)));
    r.canonicalize();
    return r;
}
long long to_ll(const Z& z);  // throws if it does not fit

// best rational approximation with denominator <= maxden (continued fractions)
Q snap(double x, long long maxden);

struct IPt {
    long long x = 0, y = 0;
    auto operator<=>(const IPt&) const = default;
};
using Dir = IPt;

struct Pt {
    Q x, y;
    Pt() = default;
    Pt(Q a, Q b) : x(std::move(a)), y(std::move(b)) {}
    Pt(const IPt& p) : x(make_q(p.x)), y(make_q(p.y)) {}
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator*(const Q& s, const Pt& a) { return {s * a.x, s * a.y}; }
inline Q cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Q cross(const Pt& o, const Pt& a, const Pt& b) { return cross(a - o, b - o); }
inline Q dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
inline Q dot(const IPt& u, const Pt& a) { return make_q(u.x) * a.x + make_q(u.y) * a.y; }

long long gcdll(long long a, long long b);

}  // namespace lw

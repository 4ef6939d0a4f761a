#include "latwidth/rational.hpp"

#include <cmath>
#include <limits>

#include "latwidth/error.hpp"

namespace lw {

static Z parse_int(const std::string& s, const std::string& whole) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw Error("BadRational", "cannot parse '" + whole + "'");
    for (size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') throw Error("BadRational", "cannot parse '" + whole + "'");
    return Z(t, 10);
}

Q parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Z n = parse_int(s.substr(0, slash), s), d = parse_int(s.substr(slash + 1), s);
        if (d == 0) throw Error("BadRational", "zero denominator in '" + s + "'");
        Q r(n, d);
        r.canonicalize();
        return r;
    }
    auto dotp = s.find('.');
    if (dotp == std::string::npos) return Q(parse_int(s, s));
    // plain decimal, read exactly
    std::string ip = s.substr(0, dotp), fp = s.substr(dotp + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    Z num = parse_int(ip + fp, s);
    Z den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Q r(num, den);
    r.canonicalize();
    return neg ? Q(-r) : r;
}

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Z floor_q(const Q& q) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& q) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long long to_ll(const Z& z) {
    if (!z.fits_slong_p()) throw Error("Overflow", "integer does not fit in 64 bits");
    return z.get_si();
}

Q snap(double x, long long maxden) {
    // convergents of the continued fraction; stop once the denominator would overflow maxden
    long long sign = x < 0 ? -1 : 1;
    double a = std::fabs(x);
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = a;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(r);
        if (fl > 1e15) break;
        long long ai = (long long)fl;
        long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > maxden) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = r - fl;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    if (k1 == 0) return make_q(sign * (long long)std::llround(a));
    return make_q(sign * h1, k1);
}

long long gcdll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

}  // namespace lw

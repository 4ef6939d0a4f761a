#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "latwidth/metrics.hpp"

namespace lw {

// directed rational bounds lo <= x <= hi
struct Enclosure {
    Q lo, hi;
    Q width() const { return hi - lo; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);  // both non-negative
Enclosure operator/(const Enclosure& a, const Enclosure& b);  // both positive
Enclosure exact(const Q& q);

// floor(sqrt(n)) by integer Newton iteration
Z isqrt(const Z& n);
// sqrt(x) for x >= 0 to within 2^-bits
Enclosure sqrt_enclosure(const Q& x, int bits = 50);
Enclosure sqrt_enclosure(const Enclosure& x, int bits = 50);
// Machin: pi = 16 atan(1/5) - 4 atan(1/239), alternating-series bounds
Enclosure pi_enclosure(int terms = 14);

struct NamedConstant {
    std::string name;
    Enclosure enclosure;
    std::string source;
};

const NamedConstant& flt20();    // 1 + 2/sqrt(3), Hurkens
const NamedConstant& flt2inf();  // sqrt(8/3), Makai
const NamedConstant& c2();       // (8/pi)^2 * 2!
std::vector<NamedConstant> named_constants();  // all, incl. the exact Flt(2,1), Flt(2,2)
// integer-arithmetic bracketing test of each enclosure against its closed form
bool verify_enclosures();

struct CatalogRow {
    std::string name;
    Polygon poly;
    Q width;
    long long interior = 0;
    Q area;
    std::vector<std::pair<std::string, std::string>> extra;  // functional -> value
};
std::vector<std::pair<std::string, Polygon>> extremizer_catalog();
// throws CatalogMismatch
std::vector<CatalogRow> check_extremizers();

struct RatioCheck {
    bool ok = false;
    bool equality = false;
    bool equality_class = false;  // equality case matches the extremizer class
    Q lhs, rhs;
};
RatioCheck check_isominwidth(const Polygon& P);  // w^2 <= 9 G°
RatioCheck check_makai(const Polygon& P);        // w^2 <= (8/3) area

struct ChainCheck {
    bool ok = false;
    Q bound_lo;          // certified lower end of Flt(2,0) + Flt(2,inf) sqrt(k)
    Q ratio_bound_hi;    // certified upper end of Flt(2,0)/sqrt(k) + Flt(2,inf)
    bool below_three = false;  // ratio_bound_hi < 3 (only asserted for k >= 3)
};
ChainCheck check_flatness_chain(long long k, const Q& M_k);

bool lambda1_lower_bound_check(const Polygon& P, long long k);

// wdt_discrepancy at d = 2; the lower bound is asserted only when covered says mu <= 1
struct DiscrepancyCheck {
    bool applicable = false;  // w > Flt(2,0)
    bool upper_ok = false;
    bool lower_checked = false;
    bool lower_ok = false;
};
DiscrepancyCheck wdt_discrepancy_check(const Polygon& P, bool covered);
bool makai_weak2_check(const Polygon& P);  // w^2 <= c2 area
// Pal: w_E(P)^2/area(P) against the rational regular-triangle proxy
bool pal_ratio_check(const Polygon& P, double slack = 1e-9);
Polygon regular_triangle_proxy();

struct BarycentricStats {
    int feasible = 0;
    int skipped = 0;
    bool identities_ok = true;
    bool widths_ok = true;
    bool beta_ok = true;  // min beta <= 1/3, strict off the regular configuration
    Q max_product;        // max of lambda_1 w / 2 seen
};
bool hexagon_barycentric_check(int samples, uint64_t seed = 0, BarycentricStats* stats = nullptr);

struct CrossSolution {
    double a = 0, b = 0, c = 0, d = 0;
    double width_E = 0;
};
bool symmetric_cross_case_check(CrossSolution* sol = nullptr);

}  // namespace lw

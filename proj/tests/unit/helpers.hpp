#pragma once
#include <doctest.h>

#include "latwidth/error.hpp"
#include "latwidth/geometry.hpp"

namespace lw {
// doctest prints these in failure messages
inline doctest::String toString(const Q& q) { return to_string(q).c_str(); }
}  // namespace lw

inline lw::Polygon poly(std::initializer_list<std::pair<const char*, const char*>> v) {
    std::vector<lw::Pt> pts;
    for (auto& [x, y] : v) pts.push_back(lw::Pt(lw::parse_rational(x), lw::parse_rational(y)));
    return lw::convex_hull(pts);
}

inline lw::Polygon ipoly(const std::vector<std::pair<long long, long long>>& v) { return lw::make_polygon(v); }

inline lw::Q q(long long n, long long d = 1) { return lw::make_q(n, d); }

template <class F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const lw::Error& e) {
        return e.code;
    }
    return "";
}

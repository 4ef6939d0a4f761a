#pragma once
#include <array>
#include <optional>
#include <vector>

#include "latwidth/error.hpp"
#include "latwidth/rational.hpp"

namespace lw {

// CCW, strictly convex, starts at the lexicographically smallest vertex.
// 1 or 2 vertices = point or segment.
struct Polygon {
    std::vector<Pt> v;
    size_t size() const { return v.size(); }
    bool full_dim() const { return v.size() >= 3; }
    bool operator==(const Polygon& o) const { return v == o.v; }
};

struct UnimodularMap {
    std::array<std::array<long long, 2>, 2> m{{{1, 0}, {0, 1}}};
    IPt t{0, 0};
    long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Pt operator()(const Pt& p) const;
    IPt operator()(const IPt& p) const;
    UnimodularMap inverse() const;
    UnimodularMap compose(const UnimodularMap& inner) const;  // this o inner
};

// {x : <normal,x> <= offset}
struct HalfPlane {
    Pt normal;
    Q offset;
    Q eval(const Pt& p) const { return dot(normal, p) - offset; }  // <= 0 inside
};

Polygon convex_hull(std::vector<Pt> pts);
Polygon make_polygon(const std::vector<std::pair<long long, long long>>& ints);
bool contains(const Polygon& P, const Pt& p, bool strict);
std::vector<IPt> lattice_points(const Polygon& P, bool interior_only);
long long interior_count(const Polygon& P);
Q area(const Polygon& P);
Polygon apply_map(const UnimodularMap& T, const Polygon& P);
std::optional<UnimodularMap> are_equivalent(const Polygon& P, const Polygon& Q2);
std::vector<HalfPlane> halfplane_description(const Polygon& P);

Polygon scale(const Polygon& P, const Q& s);
Polygon translate(const Polygon& P, const Pt& t);
Pt centroid_of_vertices(const Polygon& P);
bool is_integral(const Polygon& P);
bool on_segment(const Pt& a, const Pt& b, const Pt& p, bool relint);

// bounded intersection of closed half-planes; empty polygon if infeasible.
// caller guarantees boundedness (the normals positively span the plane)
Polygon halfplane_intersection(const std::vector<HalfPlane>& hs);
// y-range of P on the vertical line at x, if it meets P
std::optional<std::pair<Q, Q>> y_range_at(const Polygon& P, const Q& x);

IPt primitive(long long a, long long b);

}  // namespace lw

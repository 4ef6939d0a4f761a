#pragma once
#include <map>
#include <vector>

#include "latwidth/geometry.hpp"

namespace lw {

struct BlockingData {
    std::map<int, std::vector<IPt>> per_edge;  // edge i = [v_i, v_{i+1}]
    Polygon blocking_polygon;                  // empty when there are no blocking points
};

// convex cell; halfplane i is strict when open[i]
struct Region {
    std::vector<HalfPlane> halfplanes;
    std::vector<bool> open;

    void add(const HalfPlane& h, bool strict = false) {
        halfplanes.push_back(h);
        open.push_back(strict);
    }
    bool contains(const Pt& p) const;
    // closure clipped to [-box, box]^2 (bounded polygon, possibly empty)
    Polygon closure(const Q& box = 20) const;
};

// finite union of convex cells
struct RegionSet {
    std::vector<Region> cells;
    bool contains(const Pt& p) const;
    Q area(const Q& box = 20) const;  // cells are assumed interior-disjoint
};

Region region_from_polygon(const Polygon& P);
HalfPlane hp_from(long long a, long long b, const Q& c);  // a x + b y <= c

BlockingData blocking_data(const Polygon& P);
bool is_k_maximal(const Polygon& P, long long k);
Polygon k_maximal_extension(const Polygon& P, const Q& step, const Q& cap);

Region shard(const Polygon& B, int edge_index);
Region face_cone(const Polygon& B, int edge_index, const Pt& x0);
Region forbidden_cone(const Polygon& B, const IPt& q);

constexpr int kForbiddenBoxHalf = 3;  // 7x7 box of apexes q
std::vector<RegionSet> vertex_regions(const Polygon& B, const IPt& interior_point, bool reflections,
                                      int box_half = kForbiddenBoxHalf);

// swap (x,y) -> (y,x)
bool swap_invariant(const Polygon& P);

}  // namespace lw

#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latwidth/metrics.hpp"

namespace lw {

// vertices range over [-R,R]^2; every polygon with 3..max_vertices vertices in
// strictly convex position is visited once (as its sorted vertex set)
struct SearchSpec {
    int box_radius = 3;
    int max_vertices = 3;
    long long k_min = 0, k_max = 1;  // admissible G°
    bool canonical_dedup = true;     // dedup the argmax list up to equivalence
    bool allow_large = false;        // unlocks quadrilaterals with R = 4, 5
};

struct Visited {
    Polygon poly;
    long long interior = 0;
    Q width;
    Dir direction;
};

struct SearchResult {
    Q max_width;
    std::vector<Polygon> argmax_polygons;
    std::map<std::string, long long> histogram;  // width -> count
    long long visited = 0;
};

void check_budget(const SearchSpec& s);
std::vector<Visited> enumerate_polygons(const SearchSpec& s, int jobs = 1);
SearchResult search(const SearchSpec& s, int jobs = 1);

struct IsominwidthReport {
    long long checked = 0;
    long long equality_cases = 0;
    std::map<long long, Q> max_width_by_k;
};
// throws CounterexampleFound if some polygon has w^2 > 9 G°, or equality off 3*Delta_2
IsominwidthReport isominwidth_scan(const SearchSpec& s, int jobs = 1);

bool simplex_shrink_check(int samples, uint64_t seed = 0);
bool pigeonhole_check(const Polygon& P, long long m);

Polygon three_delta2();  // conv{(0,0),(3,0),(0,3)}

}  // namespace lw

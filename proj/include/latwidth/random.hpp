#pragma once
#include <random>

#include "latwidth/geometry.hpp"

namespace lw {

using Rng = std::mt19937_64;

// uniform on the grid lo + (hi-lo) k/N; open drops both endpoints
inline Q rand_q(Rng& rng, const Q& lo, const Q& hi, long long N = 1 << 20, bool open = false) {
    std::uniform_int_distribution<long long> d(open ? 1 : 0, open ? N - 1 : N);
    return lo + (hi - lo) * make_q(d(rng), N);
}

inline long long rand_ll(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// hull of npts random points; resampled until 2-dimensional
Polygon random_lattice_polygon(Rng& rng, long long R, int npts);
// same with coordinates in (1/den)Z
Polygon random_rational_polygon(Rng& rng, long long R, long long den, int npts);
// hull of npts random lattice points and their negatives, origin interior
Polygon random_symmetric_polygon(Rng& rng, long long R, int npts);
// random integer matrix of det +-1 (product of elementary moves) and a translation
UnimodularMap random_unimodular(Rng& rng, int moves = 4, long long shift = 5);

}  // namespace lw

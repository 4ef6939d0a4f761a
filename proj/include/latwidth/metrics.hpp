#pragma once
#include <vector>

#include "latwidth/geometry.hpp"

namespace lw {

struct WidthResult {
    Q value;
    Dir minimizer;
};

struct CoveringRadiusBracket {
    Q lower, upper;
    Pt witness_translate;  // lower*P + witness_translate is hollow
};

struct EuclideanWidth {
    Q squared;  // exact square of the minimal euclidean width
    double value;
    Pt normal;  // edge normal attaining it
};

Q width_in_direction(const Polygon& P, const Dir& u);
WidthResult lattice_width(const Polygon& P);
WidthResult width_over_set(const Polygon& P, const std::vector<Dir>& X);
Polygon difference_body(const Polygon& P);
Polygon polar(const Polygon& P);
Q first_minimum(const Polygon& P);
Q transference_product(const Polygon& P, bool symmetric);
CoveringRadiusBracket covering_radius_bracket(const Polygon& P, const Q& tol);
EuclideanWidth euclidean_min_width(const Polygon& P);

// helpers shared with other modules
Q inscribed_square_radius(const Polygon& P);  // largest r with c + [-r,r]^2 inside P
Q gauge(const std::vector<HalfPlane>& hp, const Pt& z);  // needs origin interior
bool covers_torus(const Polygon& P, Pt* uncovered = nullptr);  // P + Z^2 = R^2 ?
bool is_centrally_symmetric(const Polygon& P);  // P == -P

// the six directions +-e1, +-e2, +-(e2-e1), up to sign
const std::vector<Dir>& direction_set_A();

}  // namespace lw

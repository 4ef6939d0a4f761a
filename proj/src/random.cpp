#include "latwidth/random.hpp"

#include "latwidth/metrics.hpp"

namespace lw {

Polygon random_rational_polygon(Rng& rng, long long R, long long den, int npts) {
    for (;;) {
        std::vector<Pt> pts;
        for (int i = 0; i < npts; ++i)
            pts.push_back(Pt(make_q(rand_ll(rng, -R * den, R * den), den), make_q(rand_ll(rng, -R * den, R * den), den)));
        Polygon P = convex_hull(pts);
        if (P.full_dim()) return P;
    }
}

Polygon random_lattice_polygon(Rng& rng, long long R, int npts) { return random_rational_polygon(rng, R, 1, npts); }

Polygon random_symmetric_polygon(Rng& rng, long long R, int npts) {
    for (;;) {
        std::vector<Pt> pts;
        for (int i = 0; i < npts; ++i) {
            Pt p(make_q(rand_ll(rng, -R, R)), make_q(rand_ll(rng, -R, R)));
            pts.push_back(p);
            pts.push_back(Pt(-p.x, -p.y));
        }
        Polygon P = convex_hull(pts);
        if (P.full_dim() && contains(P, Pt(0, 0), true)) return P;
    }
}

UnimodularMap random_unimodular(Rng& rng, int moves, long long shift) {
    UnimodularMap T;
    for (int i = 0; i < moves; ++i) {
        UnimodularMap E;
        long long c = rand_ll(rng, -2, 2);
        switch (rand_ll(rng, 0, 3)) {
            case 0: E.m = {{{1, c}, {0, 1}}}; break;
            case 1: E.m = {{{1, 0}, {c, 1}}}; break;
            case 2: E.m = {{{0, 1}, {1, 0}}}; break;
            default: E.m = {{{-1, 0}, {0, 1}}}; break;
        }
        T = E.compose(T);
    }
    T.t = {rand_ll(rng, -shift, shift), rand_ll(rng, -shift, shift)};
    return T;
}

}  // namespace lw

#include "latwidth/maximality.hpp"

#include <algorithm>
#include <cmath>

#include "latwidth/metrics.hpp"

namespace lw {

HalfPlane hp_from(long long a, long long b, const Q& c) { return HalfPlane{Pt(make_q(a), make_q(b)), c}; }

static HalfPlane flipped(const HalfPlane& h) { return HalfPlane{Pt(-h.normal.x, -h.normal.y), -h.offset}; }

bool Region::contains(const Pt& p) const {
    for (size_t i = 0; i < halfplanes.size(); ++i) {
        int s = sgn(halfplanes[i].eval(p));
        if (s > 0 || (open[i] && s == 0)) return false;
    }
    return true;
}

static std::vector<HalfPlane> box_hps(const Q& box) {
    return {hp_from(1, 0, box), hp_from(-1, 0, box), hp_from(0, 1, box), hp_from(0, -1, box)};
}

Polygon Region::closure(const Q& box) const {
    auto hs = halfplanes;
    for (auto& h : box_hps(box)) hs.push_back(h);
    return halfplane_intersection(hs);
}

bool RegionSet::contains(const Pt& p) const {
    for (auto& c : cells)
        if (c.contains(p)) return true;
    return false;
}

Q RegionSet::area(const Q& box) const {
    Q a = 0;
    for (auto& c : cells) a += lw::area(c.closure(box));
    return a;
}

Region region_from_polygon(const Polygon& P) {
    Region r;
    for (auto& h : halfplane_description(P)) r.add(h);
    return r;
}

BlockingData blocking_data(const Polygon& P) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "blocking points need a 2D polygon");
    BlockingData out;
    std::vector<Pt> all;
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = P.v[i];
        const Pt& b = P.v[(i + 1) % n];
        std::vector<IPt> pts;
        for (const IPt& z : lattice_points(convex_hull({a, b}), false))
            if (on_segment(a, b, Pt(z), true)) pts.push_back(z);
        for (auto& z : pts) all.push_back(Pt(z));
        out.per_edge[(int)i] = pts;
    }
    if (!all.empty()) out.blocking_polygon = convex_hull(all);
    return out;
}

bool is_k_maximal(const Polygon& P, long long k) {
    if (!P.full_dim()) return false;
    if (interior_count(P) != k) return false;
    auto bd = blocking_data(P);
    for (auto& [i, pts] : bd.per_edge)
        if (pts.empty()) return false;
    return true;
}

static Pt perp(const Pt& a) { return Pt(-a.y, a.x); }

// is {x : <a_j,x> <= b_j} bounded (given it is non-empty)?
static bool normals_bounded(const std::vector<HalfPlane>& hs) {
    if (hs.empty()) return false;
    for (auto& h : hs)
        for (int s = 0; s < 2; ++s) {
            Pt d = perp(h.normal);
            if (s) d = Pt(-d.x, -d.y);
            bool rec = true;
            for (auto& g : hs)
                if (dot(g.normal, d) > 0) { rec = false; break; }
            if (rec) return false;
        }
    return true;
}

Polygon k_maximal_extension(const Polygon& P, const Q& step, const Q& cap) {
    if (!P.full_dim()) throw Error("DegeneratePolygon", "extension needs a 2D polygon");
    if (step <= 0 || cap <= 0) throw Error("InvalidTolerance", "step and cap must be positive");
    long long k = interior_count(P);
    Polygon cur = P;
    for (;;) {
        auto hs = halfplane_description(cur);
        auto bd = blocking_data(cur);
        int open_edge = -1;
        for (auto& [i, pts] : bd.per_edge)
            if (pts.empty()) { open_edge = i; break; }
        if (open_edge < 0) break;
        size_t i = (size_t)open_edge;
        std::vector<HalfPlane> others;
        for (size_t j = 0; j < hs.size(); ++j)
            if (j != i) others.push_back(hs[j]);
        bool bounded = normals_bounded(others);
        Q reach;  // max of <a_i,x> over the others-polygon, if bounded
        if (bounded) {
            Polygon O = halfplane_intersection(others);
            reach = dot(hs[i].normal, O.v[0]);
            for (auto& v : O.v) reach = std::max(reach, dot(hs[i].normal, v));
        }
        Q W = step;
        bool done = false;
        while (!done) {
            // candidates: b_i < <a_i,z> <= b_i + W, strictly inside the other constraints
            auto box = others;
            HalfPlane top = hs[i];
            top.offset += W;
            box.push_back(top);
            box.push_back(flipped(hs[i]));
            Polygon S = halfplane_intersection(box);
            bool found = false;
            Q best;
            if (S.size() > 0)
                for (const IPt& z : lattice_points(S, false)) {
                    Pt pz(z);
                    Q s = dot(hs[i].normal, pz);
                    if (s <= hs[i].offset) continue;
                    bool inside = true;
                    for (auto& g : others)
                        if (g.eval(pz) >= 0) { inside = false; break; }
                    if (!inside) continue;
                    if (!found || s < best) { best = s; found = true; }
                }
            if (found) {
                hs[i].offset = best;
                cur = halfplane_intersection(hs);
                done = true;
            } else if (bounded && hs[i].offset + W >= reach) {
                // nothing can block this edge: the other constraints alone stay k-point
                cur = halfplane_intersection(others);
                done = true;
            } else if (W >= cap) {
                throw Error("ExtensionFailed", "no blocking lattice point within the cap; the extension may be unbounded");
            } else {
                W = std::min(Q(2 * W), cap);
            }
        }
    }
    if (interior_count(cur) != k) throw Error("ExtensionFailed", "interior lattice point count changed");
    return cur;
}

Region shard(const Polygon& B, int edge_index) {
    auto hs = halfplane_description(B);
    if (edge_index < 0 || edge_index >= (int)hs.size())
        throw Error("BadEdgeIndex", "edge index " + std::to_string(edge_index) + " out of range");
    Region r;
    for (int j = 0; j < (int)hs.size(); ++j) r.add(j == edge_index ? flipped(hs[j]) : hs[j]);
    return r;
}

Region face_cone(const Polygon& B, int edge_index, const Pt& x0) {
    int n = (int)B.size();
    if (!B.full_dim() || edge_index < 0 || edge_index >= n)
        throw Error("BadEdgeIndex", "edge index " + std::to_string(edge_index) + " out of range");
    const Pt& v1 = B.v[edge_index];
    const Pt& v2 = B.v[(edge_index + 1) % n];
    if (on_segment(v1, v2, x0, false)) throw Error("ApexOnEdge", "apex lies on the edge");
    Pt d1 = v1 - x0, d2 = v2 - x0;
    Region r;
    // cross(d1, x - x0) >= 0 and cross(d2, x - x0) <= 0
    HalfPlane h1{Pt(d1.y, -d1.x), Q()};
    h1.offset = dot(h1.normal, x0);
    HalfPlane h2{Pt(-d2.y, d2.x), Q()};
    h2.offset = dot(h2.normal, x0);
    r.add(h1);
    r.add(h2);
    return r;
}

Region forbidden_cone(const Polygon& B, const IPt& qi) {
    if (!B.full_dim()) throw Error("DegeneratePolygon", "forbidden cones need a 2D body");
    Pt q(qi);
    if (contains(B, q, true)) throw Error("ApexInsideBody", "apex in the interior gives the whole plane");
    std::vector<Pt> d;
    for (auto& v : B.v)
        if (!(v == q)) d.push_back(v - q);
    const Pt* r1 = nullptr;
    const Pt* r2 = nullptr;
    for (auto& a : d) {
        bool right = true, left = true;
        for (auto& b : d) {
            int s = sgn(cross(a, b));
            if (s < 0) right = false;
            if (s > 0) left = false;
        }
        if (right && !r1) r1 = &a;
        if (left && !r2) r2 = &a;
    }
    Region r;
    // q - int pos(B - q): cross(r1, x-q) < 0 and cross(r2, x-q) > 0
    HalfPlane h1{Pt(-r1->y, r1->x), Q()};
    h1.offset = dot(h1.normal, q);
    HalfPlane h2{Pt(r2->y, -r2->x), Q()};
    h2.offset = dot(h2.normal, q);
    r.add(h1, true);
    if (!(h2.normal == h1.normal)) r.add(h2, true);
    return r;
}

bool swap_invariant(const Polygon& P) {
    UnimodularMap s;
    s.m = {{{0, 1}, {1, 0}}};
    return apply_map(s, P) == P;
}

static bool full_cell(const Region& c) { return area(c.closure()) > 0; }

std::vector<RegionSet> vertex_regions(const Polygon& B, const IPt& p, bool reflections, int box_half) {
    if (!B.full_dim()) throw Error("DegeneratePolygon", "vertex regions need a 2D blocking polygon");
    Pt c = centroid_of_vertices(B);
    long long cx = to_ll(floor_q(c.x + make_q(1, 2))), cy = to_ll(floor_q(c.y + make_q(1, 2)));
    std::vector<Region> cones;
    for (long long x = cx - box_half; x <= cx + box_half; ++x)
        for (long long y = cy - box_half; y <= cy + box_half; ++y) {
            IPt q{x, y};
            if (q == p || contains(B, Pt(q), true)) continue;
            cones.push_back(forbidden_cone(B, q));
        }
    bool sym = reflections && swap_invariant(B);
    UnimodularMap sw;
    sw.m = {{{0, 1}, {1, 0}}};
    std::vector<RegionSet> out;
    int n = (int)B.size();
    for (int e = 0; e < n; ++e) {
        Region base = shard(B, e);
        for (auto& h : box_hps(20)) base.add(h);
        if (sym) {
            // the shard of a swap-fixed edge is normalised to y >= x
            Pt a = sw(B.v[e]), b = sw(B.v[(e + 1) % n]);
            if ((a == B.v[(e + 1) % n] && b == B.v[e])) base.add(hp_from(1, -1, 0));
        }
        std::vector<Region> cells{base};
        for (auto& sigma : cones) {
            std::vector<Region> next;
            for (auto& C : cells) {
                Region test = C;
                for (auto& h : sigma.halfplanes) test.add(h);
                if (!full_cell(test)) {
                    next.push_back(C);
                    continue;
                }
                // C minus (h1 & h2 ...) = (C & !h1) u (C & h1 & !h2) u ...
                Region acc = C;
                for (size_t k = 0; k < sigma.halfplanes.size(); ++k) {
                    Region piece = acc;
                    piece.add(flipped(sigma.halfplanes[k]), !sigma.open[k]);
                    if (full_cell(piece)) next.push_back(piece);
                    acc.add(sigma.halfplanes[k], sigma.open[k]);
                }
            }
            cells = std::move(next);
        }
        out.push_back(RegionSet{cells});
    }
    return out;
}

}  // namespace lw

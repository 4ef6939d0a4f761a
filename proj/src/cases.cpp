#include "latwidth/cases.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include "latwidth/parallel.hpp"

namespace lw {

namespace {

using LL = long long;

Region conv(std::initializer_list<std::pair<LL, LL>> pts) { return region_from_polygon(make_polygon(pts)); }

Region hps(std::initializer_list<std::tuple<LL, LL, LL>> hs) {
    Region r;
    for (auto& [a, b, c] : hs) r.add(hp_from(a, b, make_q(c)));
    return r;
}

struct RawCase {
    std::vector<std::pair<LL, LL>> B;      // CCW
    std::vector<std::vector<Region>> cells;  // per edge [B_i, B_{i+1}]
    std::string normalization;
};

RawCase raw_case(const std::string& name) {
    if (name == "hex")
        return {{{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}},
                {{conv({{-1, -1}, {-1, -2}, {0, -1}})},
                 {conv({{0, -1}, {1, -1}, {1, 0}})},
                 {conv({{1, 0}, {2, 1}, {1, 1}})},
                 {conv({{1, 1}, {1, 2}, {0, 1}})},
                 {conv({{0, 1}, {-1, 1}, {-1, 0}})},
                 {conv({{-1, 0}, {-2, -1}, {-1, -1}})}},
                "none"};
    if (name == "pent")
        return {{{-1, -1}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}},
                {{conv({{-1, -1}, {-1, -2}, {0, -1}})},
                 {conv({{0, -1}, {2, -1}, {1, 0}})},
                 {conv({{1, 0}, {2, 1}, {0, 1}}), conv({{1, 0}, {1, 2}, {0, 1}})},
                 {conv({{0, 1}, {-1, 2}, {-1, 0}})},
                 {conv({{-1, 0}, {-2, -1}, {-1, -1}})}},
                "none"};
    if (name == "cross")
        return {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                {{conv({{1, 0}, {2, 1}, {0, 1}}), conv({{1, 0}, {1, 2}, {0, 1}})},
                 {conv({{0, 1}, {-1, 2}, {-1, 0}}), conv({{0, 1}, {-2, 1}, {-1, 0}})},
                 {conv({{-1, 0}, {-2, -1}, {0, -1}}), conv({{-1, 0}, {-1, -2}, {0, -1}})},
                 {conv({{0, -1}, {1, -2}, {1, 0}}), conv({{0, -1}, {2, -1}, {1, 0}})}},
                "none"};
    if (name == "pyr")
        return {{{-1, 0}, {1, 0}, {0, 1}},
                {{conv({{1, 0}, {3, -2}, {1, -1}})},
                 {conv({{0, 1}, {1, 1}, {1, 2}})},
                 {hps({{0, 1, 1}, {0, -1, 1}, {1, 2, -1}})}},
                "reflection across the y-axis"};
    if (name == "kite")
        return {{{-1, -1}, {0, -1}, {1, 1}, {-1, 0}},
                {{conv({{-1, -1}, {-1, -3}, {0, -1}})},
                 {conv({{0, -1}, {1, -1}, {1, 1}}), conv({{0, -1}, {3, 2}, {1, 1}})},
                 {conv({{1, 1}, {2, 3}, {-1, 0}}), conv({{1, 1}, {-1, 1}, {-1, 0}})},
                 {conv({{-1, 0}, {-3, -1}, {-1, -1}})}},
                "none"};
    if (name == "trap")
        return {{{-1, 0}, {1, 0}, {0, 1}, {-1, 1}},
                {{conv({{-1, 0}, {-1, -2}, {1, 0}}), conv({{-1, 0}, {1, -2}, {1, 0}}),
                  conv({{-1, 0}, {4, -2}, {1, 0}})},
                 {hps({{0, 1, 1}, {0, -1, 0}, {-1, -1, -2}})},
                 {conv({{-1, 1}, {-1, 2}, {0, 1}})},
                 {hps({{1, 0, 0}, {0, 1, 1}, {0, -1, 0}})}},
                "none"};
    if (name == "empty-triangle" || name == "st")
        return {{{-1, -1}, {0, -1}, {-1, 0}},
                {{hps({{1, 0, 0}, {-1, 0, 1}, {-2, 1, 0}})},
                 {conv({{0, 0}, {1, 1}, {2, 3}, {0, 1}})},
                 {hps({{0, 1, 0}, {0, -1, 1}, {1, -1, -1}})}},
                "reflection across y = x (the vertex beyond the long edge lies above y = x)"};
    if (name == "term")
        return {{{1, 0}, {0, 1}, {-1, -1}},
                {{conv({{1, 2}, {1, 3}, {0, 1}})},
                 {conv({{-2, -1}, {-3, -2}, {-1, -1}})},
                 {conv({{1, -1}, {2, -1}, {1, 0}})}},
                "reflection across y = x"};
    throw Error("UnknownCase", "no case named '" + name + "'");
}

bool bounded_region(const RegionSet& rs) {
    Q a = rs.area(20), b = rs.area(1000);
    return a == b;
}

}  // namespace

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> n{"hex", "pent", "cross", "pyr", "kite", "trap", "empty-triangle", "term"};
    return n;
}

CaseFamily build_case(const std::string& name0) {
    std::string name = name0 == "st" ? "empty-triangle" : name0;
    RawCase raw = raw_case(name);
    Polygon Bl;
    for (auto& [x, y] : raw.B) Bl.v.push_back(Pt(make_q(x), make_q(y)));
    size_t n = Bl.size();
    std::vector<RegionSet> regs;
    for (size_t e = 0; e < n; ++e) {
        Region sh = shard(Bl, (int)e);
        RegionSet rs;
        for (auto c : raw.cells[e]) {
            for (auto& h : sh.halfplanes) c.add(h);
            rs.cells.push_back(c);
        }
        regs.push_back(rs);
    }
    size_t start = 0;
    while (start < n && !bounded_region(regs[start])) ++start;
    if (start == n) throw Error("EmptyFamily", "no bounded region to start from");
    CaseFamily F;
    F.name = name;
    F.blocking_polygon = convex_hull(Bl.v);
    F.interior_point = {0, 0};
    F.normalization = raw.normalization;
    F.direction_set = direction_set_A();
    for (size_t i = 0; i < n; ++i) {
        F.regions.push_back(regs[(start + i) % n]);
        F.q.push_back(Bl.v[(start + i + 1) % n]);
    }
    for (size_t i = 0; i < n; ++i) {
        const Pt& q = F.q[i];
        F.colinearity_constraints.push_back(
            {(int)i, IPt{to_ll(q.x.get_num()), to_ll(q.y.get_num())}, (int)((i + 1) % n)});
    }
    return F;
}

// ---------------------------------------------------------------------------
// instantiation, generic over double and exact rationals

namespace {

template <class T>
struct V2 {
    T x, y;
};

template <class T>
struct Hp {
    T a, b, c;
    bool open;
};

template <class T>
using Cell = std::vector<Hp<T>>;

template <class T>
struct Fam {
    std::vector<std::vector<Cell<T>>> regions;
    std::vector<V2<T>> q;
    T bx0, bx1, by0, by1;
    std::vector<Hp<T>> Bh;
    LL ix, iy;
    std::vector<Dir> dirs;
};

template <class T>
T conv_q(const Q& v);
template <>
double conv_q<double>(const Q& v) {
    return v.get_d();
}
template <>
Q conv_q<Q>(const Q& v) {
    return v;
}

template <class T>
T eps_region();
template <>
double eps_region<double>() {
    return 1e-9;
}
template <>
Q eps_region<Q>() {
    return Q(0);
}

template <class T>
T from_ll(LL v);
template <>
double from_ll<double>(LL v) {
    return (double)v;
}
template <>
Q from_ll<Q>(LL v) {
    return make_q(v);
}

inline LL floor_t(double v) { return (LL)std::floor(v); }
inline LL ceil_t(double v) { return (LL)std::ceil(v); }
inline LL floor_t(const Q& v) { return to_ll(floor_q(v)); }
inline LL ceil_t(const Q& v) { return to_ll(ceil_q(v)); }

template <class T>
Fam<T> make_fam(const CaseFamily& F) {
    Fam<T> f;
    for (auto& rs : F.regions) {
        std::vector<Cell<T>> cells;
        for (auto& c : rs.cells) {
            Cell<T> cell;
            for (size_t k = 0; k < c.halfplanes.size(); ++k)
                cell.push_back({conv_q<T>(c.halfplanes[k].normal.x), conv_q<T>(c.halfplanes[k].normal.y),
                                conv_q<T>(c.halfplanes[k].offset), (bool)c.open[k]});
            cells.push_back(cell);
        }
        f.regions.push_back(cells);
    }
    for (auto& q : F.q) f.q.push_back({conv_q<T>(q.x), conv_q<T>(q.y)});
    Q x0, x1, y0, y1;
    bool first = true;
    for (auto& c : F.regions[0].cells) {
        Polygon cl = c.closure();
        for (auto& p : cl.v) {
            if (first) { x0 = x1 = p.x; y0 = y1 = p.y; first = false; }
            x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
        }
    }
    f.bx0 = conv_q<T>(x0); f.bx1 = conv_q<T>(x1);
    f.by0 = conv_q<T>(y0); f.by1 = conv_q<T>(y1);
    for (auto& h : halfplane_description(F.blocking_polygon))
        f.Bh.push_back({conv_q<T>(h.normal.x), conv_q<T>(h.normal.y), conv_q<T>(h.offset), false});
    f.ix = F.interior_point.x;
    f.iy = F.interior_point.y;
    f.dirs = F.direction_set;
    return f;
}

template <class T>
bool in_cell(const Cell<T>& c, const V2<T>& p) {
    T e = eps_region<T>();
    for (auto& h : c) {
        T v = h.a * p.x + h.b * p.y - h.c;
        if (v > e) return false;
        if (h.open && e == 0 && v == 0) return false;
    }
    return true;
}

template <class T>
bool in_region(const std::vector<Cell<T>>& r, const V2<T>& p) {
    for (auto& c : r)
        if (in_cell(c, p)) return true;
    return false;
}

template <class T>
T cross3(const V2<T>& o, const V2<T>& a, const V2<T>& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

constexpr LL kCoordCap = 12;  // vertices beyond this sup-norm cannot carry a 1-point polygon here

// position along q + s d (s > 0) inside the region, t in [0,1] spread over the union of s-intervals
template <class T>
bool map_param(const std::vector<Cell<T>>& region, const V2<T>& q, const V2<T>& d, const T& t, T& s_out) {
    T cap = T(-1);
    for (int k = 0; k < 2; ++k) {
        T qk = k ? q.y : q.x, dk = k ? d.y : d.x;
        T lim = from_ll<T>(kCoordCap);
        if (dk > 0) {
            T s = (lim - qk) / dk;
            if (cap < 0 || s < cap) cap = s;
        } else if (dk < 0) {
            T s = (-lim - qk) / dk;
            if (cap < 0 || s < cap) cap = s;
        }
    }
    if (cap <= 0) return false;
    std::vector<std::pair<T, T>> iv;
    for (auto& c : region) {
        T lo = T(0), hi = cap;
        bool ok = true;
        for (auto& h : c) {
            T k = h.a * d.x + h.b * d.y;
            T r = h.c - (h.a * q.x + h.b * q.y);
            if (k > 0) {
                T b = r / k;
                if (b < hi) hi = b;
            } else if (k < 0) {
                T b = r / k;
                if (b > lo) lo = b;
            } else if (r < 0) {
                ok = false;
                break;
            }
        }
        if (ok && lo <= hi) iv.push_back({lo, hi});
    }
    if (iv.empty()) return false;
    std::sort(iv.begin(), iv.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<std::pair<T, T>> merged;
    for (auto& x : iv) {
        if (!merged.empty() && x.first <= merged.back().second) {
            if (x.second > merged.back().second) merged.back().second = x.second;
        } else
            merged.push_back(x);
    }
    T total = T(0);
    for (auto& m : merged) total += m.second - m.first;
    if (total == 0) {
        s_out = merged[0].first;
        return true;
    }
    T target = t * total;
    for (auto& m : merged) {
        T len = m.second - m.first;
        if (target <= len) {
            s_out = m.first + target;
            return true;
        }
        target -= len;
    }
    s_out = merged.back().second;
    return true;
}

// p[0..n-2] from params; p[n-1] from the two forced lines. false if infeasible so far
template <class T>
bool build_prefix(const Fam<T>& F, const T* par, std::vector<V2<T>>& p, size_t upto) {
    size_t n = F.regions.size();
    p.resize(n);
    if (upto == 0) {
        p[0] = {F.bx0 + par[0] * (F.bx1 - F.bx0), F.by0 + par[1] * (F.by1 - F.by0)};
        return in_region(F.regions[0], p[0]);
    }
    size_t i = upto;  // 1 <= i <= n-2
    const V2<T>& q = F.q[i - 1];
    V2<T> d{q.x - p[i - 1].x, q.y - p[i - 1].y};
    if (d.x == 0 && d.y == 0) return false;
    T s;
    if (!map_param(F.regions[i], q, d, par[i + 1], s)) return false;
    if (!(s > 0)) return false;
    p[i] = {q.x + s * d.x, q.y + s * d.y};
    return in_region(F.regions[i], p[i]);
}

template <class T>
bool close_polygon(const Fam<T>& F, std::vector<V2<T>>& p) {
    size_t n = F.regions.size();
    const V2<T>& qa = F.q[n - 2];
    const V2<T>& qb = F.q[n - 1];
    V2<T> d1{qa.x - p[n - 2].x, qa.y - p[n - 2].y};
    V2<T> d2{qb.x - p[0].x, qb.y - p[0].y};
    T det = d2.x * d1.y - d1.x * d2.y;  // solves qa + s d1 = qb + r d2
    if (det == 0) return false;
    V2<T> w{qb.x - qa.x, qb.y - qa.y};
    T s = (d2.x * w.y - w.x * d2.y) / det;
    T r = (d1.x * w.y - w.x * d1.y) / det;
    if (!(s > 0) || !(r > 0)) return false;
    p[n - 1] = {qa.x + s * d1.x, qa.y + s * d1.y};
    return in_region(F.regions[n - 1], p[n - 1]);
}

// convexity, exactly one interior lattice point (the designated one), blocking points inside B
bool lattice_checks(const Fam<double>& F, const std::vector<V2<double>>& p) {
    size_t n = p.size();
    const double e = 1e-9;
    double area2 = 0;
    double minx = p[0].x, maxx = p[0].x, miny = p[0].y, maxy = p[0].y;
    std::vector<double> len(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& a = p[i];
        const auto& b = p[(i + 1) % n];
        area2 += a.x * b.y - a.y * b.x;
        len[i] = std::hypot(b.x - a.x, b.y - a.y);
        if (cross3(p[(i + n - 1) % n], a, b) < -e) return false;
        minx = std::min(minx, a.x); maxx = std::max(maxx, a.x);
        miny = std::min(miny, a.y); maxy = std::max(maxy, a.y);
    }
    if (area2 <= e) return false;
    int inside = 0;
    bool designated = false;
    for (LL x = floor_t(minx); x <= ceil_t(maxx); ++x)
        for (LL y = floor_t(miny); y <= ceil_t(maxy); ++y) {
            V2<double> z{(double)x, (double)y};
            bool strict = true;
            for (size_t i = 0; i < n; ++i) {
                if (len[i] < e) continue;
                double c = cross3(p[i], p[(i + 1) % n], z) / len[i];
                if (c <= e) { strict = false; break; }
            }
            if (strict) {
                ++inside;
                if (x == F.ix && y == F.iy) designated = true;
                if (inside > 1) return false;
                continue;
            }
            // lattice point on the boundary away from a genuine corner is a blocking point
            bool on_relint = false;
            for (size_t i = 0; i < n && !on_relint; ++i) {
                if (len[i] < e) continue;
                const auto& a = p[i];
                const auto& b = p[(i + 1) % n];
                double c = cross3(a, b, z) / len[i];
                if (std::fabs(c) > e) continue;
                double t = ((z.x - a.x) * (b.x - a.x) + (z.y - a.y) * (b.y - a.y)) / (len[i] * len[i]);
                if (t < -e || t > 1 + e) continue;
                bool near_a = std::hypot(z.x - a.x, z.y - a.y) < e, near_b = std::hypot(z.x - b.x, z.y - b.y) < e;
                if (!near_a && !near_b) on_relint = true;
                else {
                    size_t vi = near_a ? i : (i + 1) % n;
                    const auto& pv = p[(vi + n - 1) % n];
                    const auto& nv = p[(vi + 1) % n];
                    double turn = cross3(pv, p[vi], nv);
                    if (std::fabs(turn) <= e) on_relint = true;
                }
            }
            if (on_relint)
                for (auto& h : F.Bh)
                    if (h.a * z.x + h.b * z.y - h.c > e) return false;
        }
    return inside == 1 && designated;
}

bool lattice_checks(const Fam<Q>& F, const std::vector<V2<Q>>& p, Polygon& hull) {
    size_t n = p.size();
    std::vector<Pt> pts;
    for (size_t i = 0; i < n; ++i) {
        if (cross3(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) < 0) return false;
        pts.push_back(Pt(p[i].x, p[i].y));
    }
    hull = convex_hull(pts);
    if (!hull.full_dim() || area(hull) <= 0) return false;
    // orientation: the listed order must wind counterclockwise
    Q a2 = 0;
    for (size_t i = 0; i < n; ++i) a2 += p[i].x * p[(i + 1) % n].y - p[i].y * p[(i + 1) % n].x;
    if (a2 <= 0) return false;
    auto inner = lattice_points(hull, true);
    if (inner.size() != 1 || !(inner[0] == IPt{F.ix, F.iy})) return false;
    auto bd = blocking_data(hull);
    for (auto& [i, pts2] : bd.per_edge)
        for (auto& z : pts2)
            for (auto& h : F.Bh)
                if (h.a * make_q(z.x) + h.b * make_q(z.y) - h.c > 0) return false;
    return true;
}

template <class T>
T width_A(const Fam<T>& F, const std::vector<V2<T>>& p) {
    T best = T(-1);
    for (auto& u : F.dirs) {
        T lo = T(0), hi = T(0);
        for (size_t i = 0; i < p.size(); ++i) {
            T s = from_ll<T>(u.x) * p[i].x + from_ll<T>(u.y) * p[i].y;
            if (i == 0 || s < lo) lo = s;
            if (i == 0 || s > hi) hi = s;
        }
        T w = hi - lo;
        if (best < 0 || w < best) best = w;
    }
    return best;
}

// full evaluation in doubles; NaN when infeasible
double eval_float(const Fam<double>& F, const std::vector<double>& par, std::vector<V2<double>>* verts = nullptr) {
    size_t n = F.regions.size();
    std::vector<V2<double>> p;
    for (size_t i = 0; i + 1 < n; ++i)
        if (!build_prefix(F, par.data(), p, i)) return NAN;
    if (!close_polygon(F, p)) return NAN;
    if (!lattice_checks(F, p)) return NAN;
    if (verts) *verts = p;
    return width_A(F, p);
}

}  // namespace

std::optional<Polygon> instantiate(const CaseFamily& CF, const std::vector<Q>& params) {
    if (params.size() != CF.num_params()) throw Error("BadParameters", "parameter count mismatch");
    for (auto& t : params)
        if (t < 0 || t > 1) return std::nullopt;
    Fam<Q> F = make_fam<Q>(CF);
    size_t n = F.regions.size();
    std::vector<V2<Q>> p;
    for (size_t i = 0; i + 1 < n; ++i)
        if (!build_prefix(F, params.data(), p, i)) return std::nullopt;
    if (!close_polygon(F, p)) return std::nullopt;
    Polygon hull;
    if (!lattice_checks(F, p, hull)) return std::nullopt;
    return hull;
}

std::optional<std::vector<std::pair<double, double>>> instantiate_float(const CaseFamily& CF,
                                                                        const std::vector<double>& params) {
    if (params.size() != CF.num_params()) throw Error("BadParameters", "parameter count mismatch");
    Fam<double> F = make_fam<double>(CF);
    std::vector<V2<double>> v;
    double w = eval_float(F, params, &v);
    if (std::isnan(w)) return std::nullopt;
    std::vector<std::pair<double, double>> out;
    for (auto& p : v) out.push_back({p.x, p.y});
    return out;
}

int effective_resolution(int grid, size_t nparams) {
    auto total = [&](LL g) {
        long double t = 1;
        for (size_t i = 0; i < nparams; ++i) t *= (long double)g;
        return t;
    };
    LL g = grid;
    while (g > 2 && total(g) > (long double)kGridBudget) --g;
    return (int)g;
}

namespace {

struct Cand {
    double val;
    std::vector<double> par;
};

bool cand_better(const Cand& a, const Cand& b) {
    if (a.val != b.val) return a.val > b.val;
    return a.par < b.par;
}

void push_top(std::vector<Cand>& top, Cand c, size_t K) {
    top.push_back(std::move(c));
    if (top.size() > 4 * K) {
        std::partial_sort(top.begin(), top.begin() + K, top.end(), cand_better);
        top.resize(K);
    }
}

void finish_top(std::vector<Cand>& top, size_t K) {
    std::sort(top.begin(), top.end(), cand_better);
    if (top.size() > K) top.resize(K);
}

// does the (near-)optimum collapse onto a copy of 3*Delta_2?
bool degenerates_to_3delta2(const std::vector<V2<double>>& p) {
    std::vector<V2<double>> v;
    for (auto& x : p)
        if (v.empty() || std::hypot(x.x - v.back().x, x.y - v.back().y) > 1e-3) v.push_back(x);
    while (v.size() > 1 && std::hypot(v.front().x - v.back().x, v.front().y - v.back().y) <= 1e-3) v.pop_back();
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i) {
            auto& a = v[(i + v.size() - 1) % v.size()];
            auto& b = v[i];
            auto& c = v[(i + 1) % v.size()];
            double lab = std::hypot(b.x - a.x, b.y - a.y), lbc = std::hypot(c.x - b.x, c.y - b.y);
            if (std::fabs(cross3(a, b, c)) <= 1e-3 * lab * lbc) {
                v.erase(v.begin() + (long)i);
                changed = true;
                break;
            }
        }
    }
    if (v.size() != 3) return false;
    std::vector<Pt> pts;
    for (auto& x : v) {
        double rx = std::round(x.x), ry = std::round(x.y);
        if (std::fabs(rx - x.x) > 1e-3 || std::fabs(ry - x.y) > 1e-3) return false;
        pts.push_back(Pt(make_q((LL)rx), make_q((LL)ry)));
    }
    Polygon T = convex_hull(pts);
    return are_equivalent(T, make_polygon({{0, 0}, {3, 0}, {0, 3}})).has_value();
}

}  // namespace

VerificationReport verify_case(const CaseFamily& CF, int grid, int refine_iters, double tol, int jobs) {
    if (grid < 2) throw Error("InvalidGrid", "grid must be at least 2");
    if (tol < 0) throw Error("InvalidTolerance", "tol must be non-negative");
    Fam<double> F = make_fam<double>(CF);
    size_t n = CF.num_params();
    int G = effective_resolution(grid, n);
    const size_t K = 100;
    VerificationReport rep;
    rep.case_name = CF.name;
    rep.grid_resolution = grid;
    rep.effective_resolution = G;
    rep.refine_iters = refine_iters;
    rep.tol = tol;
    rep.normalization = CF.normalization;

    auto coord = [G](LL i) { return (double)i / (double)(G - 1); };
    struct Part {
        std::vector<Cand> top;
        LL feasible = 0, evals = 0;
    };
    std::vector<Part> parts((size_t)G);
    parallel_for((size_t)G, jobs, [&](size_t a) {
        Part& part = parts[a];
        std::vector<double> par(n);
        std::vector<V2<double>> p;
        par[0] = coord((LL)a);
        // depth-first over the remaining parameters, reusing the vertex prefix
        for (LL b = 0; b < G; ++b) {
            par[1] = coord(b);
            if (!build_prefix(F, par.data(), p, 0)) continue;
            std::function<void(size_t)> rec = [&](size_t level) {
                // level = index of the vertex to place (1..n-2), param index level+1
                if (level + 1 == n) {
                    ++part.evals;
                    std::vector<V2<double>> pp = p;
                    if (!close_polygon(F, pp) || !lattice_checks(F, pp)) return;
                    ++part.feasible;
                    push_top(part.top, {width_A(F, pp), par}, K);
                    return;
                }
                for (LL c = 0; c < G; ++c) {
                    par[level + 1] = coord(c);
                    if (!build_prefix(F, par.data(), p, level)) continue;
                    rec(level + 1);
                }
            };
            rec(1);
        }
        finish_top(part.top, K);
    });
    std::vector<Cand> top;
    for (auto& part : parts) {
        rep.feasible_points += part.feasible;
        rep.evaluations += part.evals;
        for (auto& c : part.top) top.push_back(c);
    }
    finish_top(top, K);
    if (top.empty()) throw Error("EmptyFamily", "no feasible grid point for case " + CF.name);
    Cand best_grid = top[0];

    // coordinate descent from the best grid points
    std::vector<Cand> refined(top.size());
    parallel_for(top.size(), jobs, [&](size_t k) {
        Cand c = top[k];
        double h = 1.0 / (double)(G - 1);
        for (int it = 0; it < refine_iters; ++it) {
            bool improved = false;
            for (size_t j = 0; j < n; ++j)
                for (int sgn_ : {1, -1}) {
                    std::vector<double> trial = c.par;
                    trial[j] = std::clamp(trial[j] + sgn_ * h, 0.0, 1.0);
                    double v = eval_float(F, trial);
                    if (!std::isnan(v) && v > c.val) {
                        c = {v, trial};
                        improved = true;
                    }
                }
            if (!improved) h *= 0.5;
        }
        refined[k] = c;
    });
    std::sort(refined.begin(), refined.end(), cand_better);
    Cand best = refined[0];
    std::vector<V2<double>> verts;
    eval_float(F, best.par, &verts);
    rep.best_width_found = best.val;
    rep.best_parameters = best.par;
    for (auto& v : verts) rep.best_vertices.push_back({v.x, v.y});
    rep.margin_to_3 = 3.0 - best.val;

    // exact certificate: snap the refined optimum, fall back to the (rational) grid optimum
    auto certify = [&](const std::vector<Q>& qp) -> std::optional<Certificate> {
        auto P = instantiate(CF, qp);
        if (!P) return std::nullopt;
        return Certificate{qp, *P, width_over_set(*P, CF.direction_set).value};
    };
    std::vector<Q> snapped;
    for (double x : best.par) snapped.push_back(snap(x, 1000000));
    rep.certificate = certify(snapped);
    if (!rep.certificate) {
        std::vector<Q> gp;
        for (double x : best_grid.par) gp.push_back(snap(x * (G - 1), 1) / (G - 1));
        rep.certificate = certify(gp);
    }
    rep.degeneration_flag = best.val >= 3.0 - 1e-3 && degenerates_to_3delta2(verts);
    if (CF.name == "hex" && verts.size() == 6) {
        auto near = [&](size_t i, double x, double y) { return std::hypot(verts[i].x - x, verts[i].y - y) < 1e-3; };
        if (near(1, 1, -1)) rep.route = "p2=(1,-1)";
        else if (near(4, -1, 1)) rep.route = "p5=(-1,1)";
        else rep.route = "interior";
    }
    bool cert_ok = !rep.certificate || rep.certificate->width <= 3;
    rep.passed = best.val <= 3.0 + tol && cert_ok;
    return rep;
}

std::vector<VerificationReport> verify_all(int grid, int refine_iters, double tol, int jobs) {
    std::vector<VerificationReport> out;
    for (auto& name : case_names()) out.push_back(verify_case(build_case(name), grid, refine_iters, tol, jobs));
    return out;
}

}  // namespace lw

#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latwidth/maximality.hpp"
#include "latwidth/metrics.hpp"

namespace lw {

// vertex_a, blocking_point, vertex_b are colinear (blocking point strictly between)
struct ColinearityTriple {
    int vertex_a;
    IPt blocking_point;
    int vertex_b;
};

// Vertex p_i sits beyond the edge [q_{i-1}, q_i] of B, and the edge [p_i, p_{i+1}] of the
// circumscriber passes through q_i. Parameters: two for p_1 (its region's bounding box),
// one per following vertex (position along the line through the previous blocking point),
// the last vertex is the intersection of two forced lines.
struct CaseFamily {
    std::string name;
    Polygon blocking_polygon;
    std::vector<Pt> q;  // blocking points in family order
    IPt interior_point{0, 0};
    std::vector<RegionSet> regions;  // regions[i] holds p_i
    std::vector<ColinearityTriple> colinearity_constraints;
    std::vector<Dir> direction_set;
    std::string normalization;
    size_t num_params() const { return regions.size(); }
};

const std::vector<std::string>& case_names();
CaseFamily build_case(const std::string& name);

// exact; empty when infeasible. params live in [0,1]
std::optional<Polygon> instantiate(const CaseFamily& F, const std::vector<Q>& params);
// same in doubles, returns the ordered vertex list
std::optional<std::vector<std::pair<double, double>>> instantiate_float(const CaseFamily& F,
                                                                        const std::vector<double>& params);

struct Certificate {
    std::vector<Q> params;
    Polygon polygon;
    Q width;  // exact w(P; directions)
};

struct VerificationReport {
    std::string case_name;
    int grid_resolution = 0;
    int effective_resolution = 0;
    int refine_iters = 0;
    double tol = 0;
    double best_width_found = 0;
    std::vector<double> best_parameters;
    std::vector<std::pair<double, double>> best_vertices;
    std::optional<Certificate> certificate;
    double margin_to_3 = 0;
    bool degeneration_flag = false;
    std::string route;  // hexagon only: which degeneration the optimum follows
    std::string normalization;
    long long feasible_points = 0;
    long long evaluations = 0;
    bool passed = false;
};

constexpr long long kGridBudget = 1LL << 24;  // max grid points per case
int effective_resolution(int grid, size_t nparams);

VerificationReport verify_case(const CaseFamily& F, int grid, int refine_iters, double tol, int jobs = 1);
std::vector<VerificationReport> verify_all(int grid, int refine_iters, double tol, int jobs = 1);

bool hexagon_width_sum_check(const CaseFamily& F, int samples, uint64_t seed = 0);

struct EliminationStats {
    int solutions = 0;
    double max_abs_g = 0;
    double max_sum = 0;
    bool ellipse_ok = false;
};
bool terminal_elimination_check(int samples, double tol, uint64_t seed = 0, EliminationStats* stats = nullptr);
bool lagrange_regularity_check(int samples, uint64_t seed = 0);

// terminal-triangle colinearity polynomials in (x, y, u, v, t)
Q terminal_f(int i, const Q& x, const Q& y, const Q& u, const Q& v, const Q& t);
Q terminal_minor(const Q& x, const Q& y, const Q& u, const Q& v, const Q& t);

// exact identities used in the trapezoid, standard-triangle and kite proofs
bool trapezoid_identity_check(int samples, uint64_t seed = 0);
bool standard_triangle_hyperbola_check(int samples, uint64_t seed = 0);
bool kite_algebra_check(int samples, uint64_t seed = 0);

}  // namespace lw

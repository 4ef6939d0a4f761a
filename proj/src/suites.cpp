#include <functional>

#include "latwidth/inequalities.hpp"
#include "latwidth/json_io.hpp"
#include "latwidth/parallel.hpp"
#include "latwidth/random.hpp"

namespace lw {

namespace {

json check(const std::string& name, bool passed, json detail = json::object()) {
    json j{{"name", name}, {"passed", passed}};
    for (auto& [k, v] : detail.items()) j[k] = v;
    return j;
}

// run f(i, rng_i) for i < n in parallel; rng_i derives from the seed and i so the
// outcome does not depend on the worker count
template <class F>
std::vector<char> sweep(int n, const SuiteOptions& o, uint64_t salt, F&& f) {
    std::vector<char> ok((size_t)n, 0);
    parallel_for((size_t)n, o.jobs, [&](size_t i) {
        Rng rng(o.seed * 0x9E3779B97F4A7C15ULL + salt * 1000003ULL + i);
        ok[i] = f(rng) ? 1 : 0;
    });
    return ok;
}

long long failures(const std::vector<char>& v) {
    long long c = 0;
    for (char x : v) c += !x;
    return c;
}

// mixes small and large lattice polygons, with the odd rational one
Polygon mixed_polygon(Rng& rng) {
    long long kind = rand_ll(rng, 0, 3);
    if (kind == 0) return random_lattice_polygon(rng, 2, (int)rand_ll(rng, 3, 6));
    if (kind == 1) return random_lattice_polygon(rng, 4, (int)rand_ll(rng, 3, 8));
    if (kind == 2) return random_lattice_polygon(rng, 6, (int)rand_ll(rng, 3, 8));
    return random_rational_polygon(rng, 3, rand_ll(rng, 2, 5), (int)rand_ll(rng, 3, 7));
}

json suite_extremizers(const SuiteOptions&) {
    json checks = json::array();
    json rows = json::array();
    bool ok = true;
    try {
        for (auto& r : check_extremizers()) {
            json row{{"name", r.name},
                     {"polygon", polygon_to_json(r.poly)},
                     {"width", to_string(r.width)},
                     {"interior_points", r.interior},
                     {"area", to_string(r.area)}};
            for (auto& [k, v] : r.extra) row[k] = v;
            rows.push_back(row);
        }
    } catch (const Error& e) {
        ok = false;
        rows.push_back({{"error", e.code}, {"message", e.what()}});
    }
    checks.push_back(check("catalog", ok, {{"rows", rows}}));
    json consts = json::array();
    for (auto& c : named_constants())
        consts.push_back({{"name", c.name},
                          {"lo", to_string(c.enclosure.lo)},
                          {"hi", to_string(c.enclosure.hi)},
                          {"source", c.source}});
    checks.push_back(check("constant-enclosures", verify_enclosures(), {{"constants", consts}}));
    return checks;
}

json suite_isominwidth(const SuiteOptions& o) {
    json checks = json::array();
    Polygon four = scale(three_delta2(), make_q(4, 3));
    auto a = check_isominwidth(three_delta2());
    auto b = check_isominwidth(four);
    auto c = check_isominwidth(make_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    checks.push_back(check("3delta2-equality", a.ok && a.equality && a.equality_class));
    checks.push_back(check("4delta2-strict", b.ok && !b.equality, {{"lhs", to_string(b.lhs)}, {"rhs", to_string(b.rhs)}}));
    checks.push_back(check("square-strict", c.ok && !c.equality));
    SearchSpec s;
    s.box_radius = 4;
    s.max_vertices = 3;
    s.k_min = 1;
    s.k_max = 20;
    bool ok = true;
    json detail;
    try {
        auto rep = isominwidth_scan(s, o.jobs);
        json mk = json::object();
        for (auto& [k, w] : rep.max_width_by_k) mk[std::to_string(k)] = to_string(w);
        detail = {{"checked", rep.checked}, {"equality_cases", rep.equality_cases}, {"max_width_by_k", mk}};
    } catch (const Error& e) {
        ok = false;
        detail = {{"error", e.code}, {"message", e.what()}};
    }
    checks.push_back(check("triangle-scan-R4", ok, detail));
    auto sw = sweep(o.samples, o, 11, [](Rng& rng) {
        Polygon P = mixed_polygon(rng);
        if (lattice_points(P, true).empty()) return true;
        auto r = check_isominwidth(P);
        return r.ok && (!r.equality || r.equality_class);
    });
    checks.push_back(check("random-polygons", failures(sw) == 0, {{"samples", o.samples}, {"violations", failures(sw)}}));
    return checks;
}

json suite_makai(const SuiteOptions& o) {
    json checks = json::array();
    Polygon T0 = make_polygon({{-1, -1}, {0, 1}, {1, 0}});
    auto t = check_makai(T0);
    auto d = check_makai(three_delta2());
    checks.push_back(check("T0-equality", t.ok && t.equality && t.equality_class));
    checks.push_back(check("3delta2-strict", d.ok && !d.equality, {{"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}}));
    auto s1 = sweep(o.samples, o, 21, [](Rng& rng) {
        auto r = check_makai(mixed_polygon(rng));
        return r.ok;
    });
    checks.push_back(check("makai-random", failures(s1) == 0, {{"samples", o.samples}, {"violations", failures(s1)}}));
    auto s2 = sweep(o.samples, o, 22, [](Rng& rng) { return makai_weak2_check(mixed_polygon(rng)); });
    checks.push_back(check("makai-weak-c2", failures(s2) == 0,
                           {{"samples", o.samples}, {"violations", failures(s2)}, {"c2_lo", to_string(c2().enclosure.lo)}}));
    auto s3 = sweep(o.samples, o, 23, [](Rng& rng) { return pal_ratio_check(mixed_polygon(rng)); });
    checks.push_back(check("pal-ratio", failures(s3) == 0, {{"samples", o.samples}, {"violations", failures(s3)}}));
    return checks;
}

json suite_chain(const SuiteOptions& o) {
    json checks = json::array();
    // the proof step: (1 + 2/sqrt3)/sqrt3 + sqrt(8/3) < 3
    auto c3 = check_flatness_chain(3, 4);
    checks.push_back(check("k3-ratio-below-3", c3.below_three, {{"certified_upper", to_string(c3.ratio_bound_hi)}}));
    SearchSpec s;
    s.box_radius = 4;
    s.max_vertices = 3;
    s.k_min = 1;
    s.k_max = 20;
    auto rep = isominwidth_scan(s, o.jobs);
    bool ok = true;
    json rows = json::array();
    for (auto& [k, M] : rep.max_width_by_k) {
        auto c = check_flatness_chain(k, M);
        ok = ok && c.ok;
        rows.push_back({{"k", k}, {"M_k", to_string(M)}, {"bound_lo", to_string(c.bound_lo)}, {"passed", c.ok}});
    }
    checks.push_back(check("lattice-maxima", ok, {{"rows", rows}}));
    auto k2 = check_flatness_chain(2, make_q(10, 3));
    checks.push_back(check("k2-flt22", k2.ok));
    int n = o.samples;
    std::vector<char> applicable((size_t)n, 0), lower((size_t)n, 0);
    std::vector<char> pass((size_t)n, 0);
    parallel_for((size_t)n, o.jobs, [&](size_t i) {
        Rng rng(o.seed * 0x9E3779B97F4A7C15ULL + 31 * 1000003ULL + i);
        Polygon P;
        DiscrepancyCheck d;
        // resample until the width exceeds Flt(2,0)
        for (int t = 0; t < 100 && !d.applicable; ++t) {
            P = mixed_polygon(rng);
            d = wdt_discrepancy_check(P, false);
        }
        if (d.applicable) d = wdt_discrepancy_check(P, covers_torus(P));
        applicable[i] = d.applicable;
        lower[i] = d.lower_checked;
        pass[i] = d.applicable && d.upper_ok && (!d.lower_checked || d.lower_ok);
    });
    long long na = 0, nl = 0;
    for (int i = 0; i < n; ++i) na += applicable[i], nl += lower[i];
    checks.push_back(check("wdt-discrepancy", failures(pass) == 0,
                           {{"samples", n}, {"applicable", na}, {"lower_bound_checked", nl}, {"violations", failures(pass)}}));
    auto sl = sweep(o.samples, o, 32, [](Rng& rng) {
        Polygon P = mixed_polygon(rng);
        long long k = (long long)lattice_points(P, true).size();
        return lambda1_lower_bound_check(P, k);
    });
    checks.push_back(check("lambda1-lower-bound", failures(sl) == 0 && lambda1_lower_bound_check(three_delta2(), 1),
                           {{"samples", o.samples}, {"violations", failures(sl)}}));
    return checks;
}

json suite_transference(const SuiteOptions& o) {
    json checks = json::array();
    Q t1 = transference_product(make_polygon({{-1, -1}, {-1, 2}, {2, -1}}), false);
    Q t2 = transference_product(make_polygon({{2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}, {1, -1}}), true);
    checks.push_back(check("cor-triangle", t1 == 3, {{"product", to_string(t1)}}));
    checks.push_back(check("hexagon-H", t2 == make_q(4, 3), {{"product", to_string(t2)}}));
    auto s1 = sweep(o.samples, o, 41, [](Rng& rng) {
        // 1-point polygons with the origin as interior point
        for (;;) {
            Polygon P = random_rational_polygon(rng, 3, rand_ll(rng, 1, 3), (int)rand_ll(rng, 3, 7));
            if (!contains(P, Pt(0, 0), true) || lattice_points(P, true).size() != 1) continue;
            return first_minimum(P) * lattice_width(P).value <= 3;
        }
    });
    checks.push_back(check("one-point-sweep", failures(s1) == 0, {{"samples", o.samples}, {"violations", failures(s1)}}));
    auto s2 = sweep(o.samples, o, 42, [](Rng& rng) {
        Polygon P = random_symmetric_polygon(rng, 4, (int)rand_ll(rng, 2, 4));
        // lambda_1 is scale invariant in the product; normalise anyway
        Polygon N = scale(P, first_minimum(P));
        return first_minimum(N) == 1 && transference_product(N, true) <= make_q(4, 3);
    });
    checks.push_back(check("symmetric-sweep", failures(s2) == 0, {{"samples", o.samples}, {"violations", failures(s2)}}));
    BarycentricStats bs;
    bool hb = hexagon_barycentric_check(o.samples, o.seed, &bs);
    checks.push_back(check("hexagon-barycentric", hb,
                           {{"feasible", bs.feasible},
                            {"skipped", bs.skipped},
                            {"identities", bs.identities_ok},
                            {"widths", bs.widths_ok},
                            {"max_product", to_string(bs.max_product)}}));
    CrossSolution cs;
    bool cr = false;
    try {
        cr = symmetric_cross_case_check(&cs);
    } catch (const Error&) {
    }
    checks.push_back(check("symmetric-cross", cr, {{"a", cs.a}, {"b", cs.b}, {"c", cs.c}, {"d", cs.d}, {"width_E", cs.width_E}}));
    return checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"extremizers", "isominwidth", "makai", "chain", "transference", "all"};
    return n;
}

json run_suite(const std::string& suite, const SuiteOptions& opt) {
    static const std::vector<std::pair<std::string, std::function<json(const SuiteOptions&)>>> table{
        {"extremizers", suite_extremizers},
        {"isominwidth", suite_isominwidth},
        {"makai", suite_makai},
        {"chain", suite_chain},
        {"transference", suite_transference},
    };
    json out = json::array();
    bool all_ok = true;
    bool found = false;
    for (auto& [name, f] : table) {
        if (suite != "all" && suite != name) continue;
        found = true;
        json checks = f(opt);
        bool ok = true;
        for (auto& c : checks) ok = ok && c["passed"].get<bool>();
        all_ok = all_ok && ok;
        out.push_back({{"suite", name}, {"checks", checks}, {"passed", ok}});
    }
    if (!found) throw Error("UnknownSuite", "unknown suite '" + suite + "'");
    return json{{"suites", out}, {"passed", all_ok}};
}

}  // namespace lw

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "latwidth/cases.hpp"
#include "latwidth/json_io.hpp"
#include "latwidth/maximality.hpp"
#include "latwidth/metrics.hpp"
#include "latwidth/parallel.hpp"
#include "latwidth/search.hpp"

using namespace lw;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Outcome {
    json results;
    bool passed = true;
};

Polygon load(const std::string& path) {
    if (path != "-") return read_polygon_file(path);
    json j;
    try {
        j = json::parse(std::cin);
    } catch (const json::parse_error& e) {
        throw Error("MalformedJSON", std::string("stdin: ") + e.what());
    }
    return polygon_from_json(j);
}

json width_json(const WidthResult& w) {
    return json{{"value", to_string(w.value)}, {"direction", ipoint_to_json(w.minimizer)}};
}

// functionals that need extra hypotheses come back as null with the reason
template <class F>
json guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return json{{"unavailable", e.code}};
    }
}

json metrics_json(const Polygon& P) {
    json pts = json::array();
    auto all = lattice_points(P, false);
    long long inner = (long long)lattice_points(P, true).size();
    json j{{"polygon", polygon_to_json(P)},
           {"area", to_string(area(P))},
           {"lattice_points", (long long)all.size()},
           {"interior_lattice_points", inner},
           {"boundary_lattice_points", (long long)all.size() - inner},
           {"integral", is_integral(P)},
           {"centrally_symmetric", P.full_dim() && is_centrally_symmetric(P)}};
    j["lattice_width"] = guarded([&] { return width_json(lattice_width(P)); });
    j["width_over_A"] = guarded([&] { return width_json(width_over_set(P, direction_set_A())); });
    j["difference_body"] = guarded([&] { return polygon_to_json(difference_body(P)); });
    j["polar"] = guarded([&] { return polygon_to_json(polar(P)); });
    j["first_minimum"] = guarded([&] { return json(to_string(first_minimum(P))); });
    j["transference_product"] = guarded([&] { return json(to_string(transference_product(P, false))); });
    j["transference_product_symmetric"] = guarded([&] { return json(to_string(transference_product(P, true))); });
    j["covering_radius"] = guarded([&] {
        auto b = covering_radius_bracket(P, make_q(1, 1000000));
        return json{{"lower", to_string(b.lower)}, {"upper", to_string(b.upper)}, {"witness_translate", point_to_json(b.witness_translate)}};
    });
    j["euclidean_min_width"] = guarded([&] {
        auto e = euclidean_min_width(P);
        return json{{"squared", to_string(e.squared)}, {"value", e.value}, {"normal", point_to_json(e.normal)}};
    });
    return j;
}

json blocking_json(const BlockingData& b) {
    json edges = json::object();
    for (auto& [i, v] : b.per_edge) {
        json a = json::array();
        for (auto& p : v) a.push_back(ipoint_to_json(p));
        edges[std::to_string(i)] = a;
    }
    json bp = b.blocking_polygon.v.empty() ? json(nullptr) : polygon_to_json(b.blocking_polygon);
    return json{{"per_edge", edges}, {"blocking_polygon", bp}};
}

std::pair<long long, long long> parse_range(const std::string& s) {
    static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw CLI::ValidationError("--interior", "expected k or k_min..k_max, got '" + s + "'");
    long long a = std::stoll(m[1]);
    long long b = m[2].matched ? std::stoll(m[2]) : a;
    if (a > b) throw CLI::ValidationError("--interior", "empty range '" + s + "'");
    return {a, b};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact planar lattice width toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    uint64_t seed = 0;
    int jobs = 0;
    bool timing = false, bare = false;
    app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (default: LATWIDTH_JOBS or all cores)");
    app.add_flag("--timing", timing, "report wall time in elapsed_ms");
    app.add_flag("--bare", bare, "print only the results object");

    std::string poly_path;
    auto* c_width = app.add_subcommand("width", "lattice width and a minimizing direction");
    c_width->add_option("polygon", poly_path, "polygon JSON file, or - for stdin")->required();
    auto* c_metrics = app.add_subcommand("metrics", "all lattice functionals of a polygon");
    c_metrics->add_option("polygon", poly_path)->required();
    auto* c_points = app.add_subcommand("points", "lattice points, all and interior");
    c_points->add_option("polygon", poly_path)->required();
    auto* c_blocking = app.add_subcommand("blocking", "blocking lattice points per edge");
    c_blocking->add_option("polygon", poly_path)->required();

    long long k = 0;
    bool extend = false;
    std::string step_s = "1/8", cap_s = "16";
    auto* c_maximal = app.add_subcommand("maximal", "k-maximality test and extension");
    c_maximal->add_option("polygon", poly_path)->required();
    c_maximal->add_option("--k", k, "interior lattice point count")->required();
    c_maximal->add_flag("--extend", extend, "also push edges outward to a k-maximal body");
    c_maximal->add_option("--step", step_s, "extension step")->capture_default_str();
    c_maximal->add_option("--cap", cap_s, "extension cap")->capture_default_str();

    std::string case_name;
    auto* c_regions = app.add_subcommand("regions", "vertex regions of a case family");
    c_regions->add_option("--case", case_name)->required();

    int grid = 64, refine = 30;
    double tol = 1e-6;
    bool all = false;
    auto* c_verify = app.add_subcommand("verify", "numeric verification of the case families");
    auto* o_case = c_verify->add_option("--case", case_name);
    auto* o_all = c_verify->add_flag("--all", all);
    o_case->excludes(o_all);
    c_verify->add_option("--grid", grid)->capture_default_str();
    c_verify->add_option("--tol", tol)->capture_default_str();
    c_verify->add_option("--refine", refine, "coordinate-descent iterations")->capture_default_str();

    std::string shape = "tri", interior = "0..1", emit;
    int radius = 3;
    bool large = false;
    auto* c_search = app.add_subcommand("search", "brute-force lattice polygon search");
    c_search->add_option("--shape", shape)->check(CLI::IsMember({"tri", "quad"}))->capture_default_str();
    c_search->add_option("--radius", radius)->capture_default_str();
    c_search->add_option("--interior", interior, "k_min..k_max")->capture_default_str();
    c_search->add_option("--emit-argmax", emit, "write the argmax polygons here");
    c_search->add_flag("--large", large, "allow quadrilateral radii 4 and 5");

    std::string suite = "all";
    int samples = 1000;
    auto* c_check = app.add_subcommand("check", "inequality suites");
    c_check->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    c_check->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
        if (c_verify->parsed() && !all && case_name.empty())
            throw CLI::RequiredError("verify needs --case or --all");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    jobs = resolve_jobs(jobs);
    auto t0 = std::chrono::steady_clock::now();
    CLI::App* cmd = app.get_subcommands().front();
    json inputs = json::object();
    for (const CLI::Option* o : cmd->get_options()) {
        if (o->get_name() == "--help" || o->count() == 0) continue;
        std::string name = o->get_name();
        while (!name.empty() && name[0] == '-') name.erase(0, 1);
        inputs[name] = o->get_type_size() == 0 ? json(true) : json(o->as<std::string>());
    }
    inputs["seed"] = seed;

    Outcome out;
    try {
        if (cmd == c_width) {
            out.results = width_json(lattice_width(load(poly_path)));
        } else if (cmd == c_metrics) {
            out.results = metrics_json(load(poly_path));
        } else if (cmd == c_points) {
            Polygon P = load(poly_path);
            json a = json::array(), b = json::array();
            for (auto& p : lattice_points(P, false)) a.push_back(ipoint_to_json(p));
            for (auto& p : lattice_points(P, true)) b.push_back(ipoint_to_json(p));
            out.results = {{"all", a}, {"interior", b}, {"count", a.size()}, {"interior_count", b.size()}};
        } else if (cmd == c_blocking) {
            Polygon P = load(poly_path);
            out.results = blocking_json(blocking_data(P));
            out.results["interior_lattice_points"] = interior_count(P);
            out.results["maximal_for_own_k"] = is_k_maximal(P, interior_count(P));
        } else if (cmd == c_maximal) {
            Polygon P = load(poly_path);
            out.results = {{"k", k}, {"interior_lattice_points", interior_count(P)}, {"is_k_maximal", is_k_maximal(P, k)}};
            if (extend) {
                Q step, cap;
                try {
                    step = parse_rational(step_s);
                    cap = parse_rational(cap_s);
                } catch (const Error& e) {
                    std::cerr << "usage: bad --step/--cap: " << e.what() << "\n";
                    return 2;
                }
                Polygon E = k_maximal_extension(P, step, cap);
                out.results["extension"] = polygon_to_json(E);
                out.results["extension_is_k_maximal"] = is_k_maximal(E, k);
            }
        } else if (cmd == c_regions) {
            CaseFamily F = build_case(case_name);
            json q = json::array(), regs = json::array(), dirs = json::array();
            for (auto& p : F.q) q.push_back(point_to_json(p));
            for (auto& r : F.regions) regs.push_back(regionset_to_json(r));
            for (auto& d : F.direction_set) dirs.push_back(ipoint_to_json(d));
            out.results = {{"case", F.name},
                           {"blocking_polygon", polygon_to_json(F.blocking_polygon)},
                           {"interior_point", ipoint_to_json(F.interior_point)},
                           {"blocking_points", q},
                           {"directions", dirs},
                           {"normalization", F.normalization},
                           {"regions", regs}};
        } else if (cmd == c_verify) {
            std::vector<VerificationReport> reps;
            if (all)
                reps = verify_all(grid, refine, tol, jobs);
            else
                reps.push_back(verify_case(build_case(case_name), grid, refine, tol, jobs));
            out.results = json::array();
            for (auto& r : reps) {
                out.results.push_back(report_to_json(r));
                out.passed = out.passed && r.passed;
            }
        } else if (cmd == c_search) {
            SearchSpec s;
            s.box_radius = radius;
            s.max_vertices = shape == "tri" ? 3 : 4;
            std::tie(s.k_min, s.k_max) = parse_range(interior);
            s.allow_large = large;
            SearchResult r = search(s, jobs);
            out.results = search_to_json(r);
            if (!emit.empty()) {
                std::ofstream f(emit);
                if (!f) throw Error("OutputError", "cannot write " + emit);
                f << out.results["argmax_polygons"].dump(2) << "\n";
            }
        } else if (cmd == c_check) {
            out.results = run_suite(suite, SuiteOptions{seed, jobs, samples});
            out.passed = out.results["passed"].get<bool>();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // a found counterexample is an assertion failure, everything else bad input
        return e.code == "CounterexampleFound" ? 1 : 2;
    }

    long long ms = 0;
    if (timing)
        ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (bare) {
        std::cout << out.results.dump(2) << "\n";
    } else {
        json env{{"command", cmd->get_name()}, {"inputs", inputs}, {"results", out.results}, {"version", kVersion}, {"elapsed_ms", ms}};
        std::cout << env.dump(2) << "\n";
    }
    return out.passed ? 0 : 1;
}

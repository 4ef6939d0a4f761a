#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "helpers.hpp"
#include "latwidth/json_io.hpp"
#include "latwidth/random.hpp"

using namespace lw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LATWIDTH_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string cat(const std::string& name) { return std::string(LATWIDTH_DATA) + "/catalog/" + name + ".json"; }

fs::path scratch() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / ("latwidth_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string write(const std::string& name, const std::string& body) {
    fs::path f = scratch() / name;
    std::ofstream(f) << body;
    return f.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("width of 3*Delta_2") {
    Run r = run("--bare width " + cat("3delta2"));
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"value":"3","direction":[1,0]})"));
}

TEST_CASE("envelope") {
    Run r = run("width " + cat("T0"));
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "width");
    CHECK(j["inputs"]["polygon"] == cat("T0"));
    CHECK(j["inputs"]["seed"] == 0);
    CHECK(j["results"]["value"] == "2");
    CHECK(j["elapsed_ms"] == 0);
    CHECK(j.contains("version"));
}

TEST_CASE("golden exit codes") {
    std::string bad_field = write("bad_field.json", R"({"vertices":[["1/2","x"],[0,1],[1,0]]})");
    std::string bad_syntax = write("bad_syntax.json", R"({"vertices":[[0,0],)");
    std::string no_vertices = write("no_vertices.json", R"({"points":[]})");
    std::string segment = write("segment.json", R"({"vertices":[[0,0],[2,1]]})");
    struct Golden {
        std::string args;
        int code;
    };
    std::vector<Golden> golden{
        {"width " + cat("3delta2"), 0},
        {"metrics " + cat("hexagon-H"), 0},
        {"points " + cat("T0"), 0},
        {"blocking " + cat("3delta2"), 0},
        {"maximal " + cat("3delta2") + " --k 1", 0},
        {"maximal " + cat("T0") + " --k 1 --extend", 0},
        {"regions --case hex", 0},
        {"verify --case term --grid 8 --refine 2", 0},
        {"search --shape tri --radius 2 --interior 0..1", 0},
        {"check --suite extremizers", 0},
        {"check --suite makai --samples 20", 0},
        {"width " + bad_field, 2},
        {"width " + bad_syntax, 2},
        {"width " + no_vertices, 2},
        {"width " + segment, 2},
        {"width /nonexistent/p.json", 2},
        {"frobnicate", 2},
        {"", 2},
        {"search --shape hexagon", 2},
        {"search --shape quad --radius 4 --interior 0..1", 2},
        {"verify --tol 1e-6", 2},
        {"regions --case octagon", 2},
        {"check --suite nope", 2},
        {"verify --case hex --grid 8 --tol -1", 2},
    };
    CHECK(golden.size() >= 20);
    for (auto& g : golden) {
        INFO(g.args);
        CHECK(run(g.args).code == g.code);
    }
}

TEST_CASE("malformed input names the field") {
    std::string f = write("bad_field2.json", R"({"vertices":[[0,0],[1,0],[0,"1/0"]]})");
    std::string cmd = std::string(LATWIDTH_CLI) + " width " + f + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string all;
    char buf[512];
    while (fgets(buf, sizeof buf, p)) all += buf;
    CHECK(pclose(p) != 0);
    CHECK(all.find("vertices[2][1]") != std::string::npos);
}

TEST_CASE("polygon json round trip") {
    for (auto& name : {"3delta2", "flt22-maximizer", "T0", "hexagon-H", "transference-triangle", "local-optimum-quad"}) {
        Polygon P = read_polygon_file(cat(name));
        json j = polygon_to_json(P);
        CHECK(polygon_from_json(json::parse(j.dump())) == P);
        Run r = run("--bare metrics " + cat(name));
        REQUIRE(r.code == 0);
        CHECK(polygon_from_json(json::parse(r.out)["polygon"]) == P);
    }
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        Polygon P = random_rational_polygon(rng, 4, rand_ll(rng, 1, 9), (int)rand_ll(rng, 3, 7));
        CHECK(polygon_from_json(json::parse(polygon_to_json(P).dump())) == P);
    }
}

TEST_CASE("region json round trip") {
    Run r = run("--bare regions --case cross");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    for (auto& rs : j["regions"]) CHECK(regionset_to_json(regionset_from_json(rs)) == rs);
}

TEST_CASE("catalog values through the cli") {
    CHECK(json::parse(run("--bare width " + cat("flt22-maximizer")).out)["value"] == "10/3");
    CHECK(json::parse(run("--bare width " + cat("local-optimum-quad")).out)["value"] == "2");
    json m = json::parse(run("--bare metrics " + cat("hexagon-H")).out);
    CHECK(m["transference_product_symmetric"] == "4/3");
    CHECK(m["first_minimum"] == "2/3");
    json t = json::parse(run("--bare metrics " + cat("transference-triangle")).out);
    CHECK(t["transference_product"] == "3");
}

TEST_CASE("search emits argmax polygons") {
    std::string out = (scratch() / "argmax.json").string();
    Run r = run("--bare search --shape tri --radius 2 --interior 1 --emit-argmax " + out);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["max_width"] == "3");
    std::ifstream in(out);
    json a = json::parse(in);
    REQUIRE(a.size() == 1);
    CHECK(are_equivalent(polygon_from_json(a[0]), make_polygon({{0, 0}, {3, 0}, {0, 3}})));
}

TEST_CASE("seeds") {
    std::string a = run("check --suite transference --samples 25 --seed 5").out;
    std::string b = run("--seed 5 check --suite transference --samples 25 --jobs 3").out;
    CHECK(json::parse(a)["results"] == json::parse(b)["results"]);
    CHECK(a == run("check --suite transference --samples 25 --seed 5").out);
    CHECK(run("check --suite transference --samples 25").out == run("check --suite transference --samples 25 --seed 0").out);
    auto verdicts = [](const std::string& s) {
        std::vector<bool> v;
        for (auto& su : json::parse(s)["results"]["suites"])
            for (auto& c : su["checks"]) v.push_back(c["passed"].get<bool>());
        return v;
    };
    std::string c = run("check --suite transference --samples 25 --seed 12345").out;
    CHECK(verdicts(a) == verdicts(c));
}

TEST_CASE("jobs from the environment") {
    std::string a = run("--bare search --shape tri --radius 2 --interior 0..2").out;
    setenv("LATWIDTH_JOBS", "3", 1);
    std::string b = run("--bare search --shape tri --radius 2 --interior 0..2").out;
    unsetenv("LATWIDTH_JOBS");
    CHECK(a == b);
}

}  // TEST_SUITE

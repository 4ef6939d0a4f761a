#pragma once
#include <cstdint>
#include <string>

#include <json.hpp>

#include "latwidth/cases.hpp"
#include "latwidth/search.hpp"

namespace lw {

using json = nlohmann::ordered_json;

// {"vertices": [["p/q","r/s"], ...]}; numbers are accepted too. Throws MalformedJSON naming the field.
Polygon polygon_from_json(const json& j);
json polygon_to_json(const Polygon& P);
Polygon read_polygon_file(const std::string& path);

json point_to_json(const Pt& p);
json ipoint_to_json(const IPt& p);
json region_to_json(const Region& r);
json regionset_to_json(const RegionSet& rs);
RegionSet regionset_from_json(const json& j);

json report_to_json(const VerificationReport& r);
json search_to_json(const SearchResult& r);

struct SuiteOptions {
    uint64_t seed = 0;
    int jobs = 1;
    int samples = 1000;
};
// {"suite", "checks": [{"name", "passed", ...}], "passed"}
json run_suite(const std::string& suite, const SuiteOptions& opt);
const std::vector<std::string>& suite_names();

}  // namespace lw

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kahn/certify.hpp"
#include "kahn/config_search.hpp"
#include "kahn/good_vertex.hpp"
#include "kahn/regular.hpp"

namespace kahn {

inline constexpr const char* tool_version = "1.0.0";

struct run_config {
    std::string subcommand = "verify-all";
    int delta = 5;
    std::string statement = "all"; // all | 1 | 2
    unsigned jobs = 1;
    unsigned precision_bits = 128;
    unsigned precision_cap = 8192;
    std::uint64_t seed = 0;

    friend bool operator==(const run_config&, const run_config&) = default;
};

enum class run_status { pass, fail, undecided };
std::string_view to_string(run_status s);
run_status run_status_from(std::string_view s);

struct stage1_section {
    search_report stage1;
    std::vector<exceptional_pattern> exceptions;
    std::optional<stage2_result> stage2;
};

struct certificate {
    std::string version = tool_version;
    run_config config;
    std::optional<f_fact_report> fact_check;
    std::vector<regular_report> regular;
    std::optional<search_report> statement2;
    std::optional<stage1_section> statement1;
    run_status overall = run_status::fail;
    double fact_check_seconds = 0;
    double total_seconds = 0;
};

// Every sub-report passes and nothing is undecided -> pass; any undecided
// -> undecided; otherwise fail.
run_status evaluate_overall(const certificate& c);

nlohmann::ordered_json to_json(const verdict& v);
verdict verdict_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const search_report& r);
search_report search_report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const certificate& c);
certificate certificate_from_json(const nlohmann::ordered_json& j);

// Same document without the "timing" block (for reproducibility checks).
nlohmann::ordered_json without_timing(nlohmann::ordered_json j);

nlohmann::ordered_json to_json(const kahn_report& r);

} // namespace kahn

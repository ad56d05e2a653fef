#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kahn/certify.hpp"
#include "kahn/config_enum.hpp"
#include "kahn/local_config.hpp"
#include "kahn/pattern.hpp"

namespace kahn {

struct verdict_tally {
    std::uint64_t strict = 0;
    std::uint64_t equal = 0;
    std::uint64_t failing = 0;
    std::uint64_t undecided = 0;

    void add(outcome o);
    std::uint64_t total() const { return strict + equal + failing + undecided; }
    verdict_tally& operator+=(const verdict_tally& o);
    friend bool operator==(const verdict_tally&, const verdict_tally&) = default;
};

struct precision_stats {
    std::uint64_t exact = 0;
    std::map<unsigned, std::uint64_t> interval_bits; // deciding precision -> count

    void add(const verdict& v);
    precision_stats& operator+=(const precision_stats& o);
    friend bool operator==(const precision_stats&, const precision_stats&) = default;
};

struct config_record {
    canonical_form form;
    std::string description;
    verdict v;
};

struct search_report {
    std::string statement;
    int delta = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t deduplicated = 0;
    std::uint64_t excluded_regular = 0;
    verdict_tally tally;
    std::vector<config_record> equalities; // sorted by canonical form
    std::vector<config_record> failures;   // StrictlyLess
    std::vector<config_record> undecided;
    precision_stats precision;
    std::vector<std::string> problems;     // reasons the run does not pass
    bool pass = false;
    double seconds = 0;
};

struct search_options {
    unsigned jobs = 1;
    certify_options cert;
};

// Every root of maximum degree, delta in [1, 4].
search_report verify_statement2(int delta, const search_options& opts = {});

struct exceptional_pattern {
    int reference = 0;     // 1-based index of the matching reference drawing, 0 if none
    local_config config;   // failing configuration (levels 0-2, padded)
    leveled_graph drawing; // levels 0-3
    std::string key;       // rooted-isomorphism key of the drawing
    std::string dot;
};

struct stage1_result {
    search_report report;
    std::vector<local_config> failing;          // canonical order
    std::vector<exceptional_pattern> patterns;  // sorted by reference index, then key
};

// Minimum-degree roots of non-regular graphs with maximum degree delta.
stage1_result verify_statement1_stage1(int delta = 5, const search_options& opts = {});

// Local configurations at x' (a neighbour of the drawing's root) consistent
// with the drawing: everything within distance two of x' is fixed except
// the degrees of level-3 drawing vertices, which range over
// [max(d(root), drawn degree), delta].
std::vector<local_config> neighbor_completions(const leveled_graph& drawing, vertex x_prime, int delta = 5);

struct neighbor_check {
    int pattern = 0;      // 1-based position in the pattern list
    int reference = 0;
    vertex neighbor = 0;  // vertex of the canonical drawing
    std::uint64_t completions = 0;
    verdict_tally tally;
    std::vector<config_record> nonstrict;
    bool pass() const { return completions > 0 && tally.strict == completions; }
};

struct stage2_result {
    search_report report;
    std::vector<neighbor_check> checks;
};

stage2_result verify_statement1_stage2(const std::vector<exceptional_pattern>& patterns, int delta = 5,
                                       const search_options& opts = {});

} // namespace kahn

// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "kahn/config_search.hpp"
#include "kahn/good_vertex.hpp"
#include "kahn/indset.hpp"
#include "kahn/regular.hpp"
#include "kahn/selftest.hpp"

using namespace kahn;

namespace {

constexpr std::uint64_t seed = 20240517;

struct check_result {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

search_options parallel() {
    search_options o;
    o.jobs = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

void fact_check(check_result& r) {
    auto rep = check_f_fact(5);
    r.require(rep.failures == 0, "no failures");
    r.require(rep.entries.size() == 100, "100 tuples");
    for (const auto& e : rep.entries)
        r.require(e.v.method == certification_method::exact && e.v.strict(), "exact strict entry");
    r.detail << rep.entries.size() << " tuples, " << rep.failures << " failures";
}

void regular_case(check_result& r) {
    for (int d = 1; d <= 5; ++d) {
        auto rep = verify_regular(d);
        r.require(rep.pass, "d=" + std::to_string(d) + " passes");
        r.require(rep.equality_profiles.size() == 1, "single equality");
        if (rep.equality_profiles.size() == 1) {
            const auto& p = rep.equality_profiles[0];
            r.require(p.k == d - 1 && std::all_of(p.xs.begin(), p.xs.end(), [](int x) { return x == 0; }),
                      "equality at k=d-1, all x=0");
        }
        r.detail << "d=" << d << ":" << rep.profiles << " ";
    }
}

// Complete bipartite rooted configurations with a maximum-degree root:
// the isolated root plus one per pair (root degree a, level-1 degree b<=a).
std::uint64_t complete_bipartite_classes(int delta) {
    std::uint64_t n = 1;
    for (int a = 1; a <= delta; ++a)
        n += static_cast<std::uint64_t>(a);
    return n;
}

void statement2(check_result& r) {
    auto rep = verify_statement2(4, parallel());
    r.require(rep.pass, "passes");
    r.require(rep.tally.failing == 0, "no violations");
    r.require(rep.tally.undecided == 0, "nothing undecided");
    r.require(rep.tally.equal == complete_bipartite_classes(4), "equality count");
    for (const auto& e : rep.equalities)
        r.require(is_complete_bipartite_config(from_canonical(e.form)), "equality is complete bipartite");
    r.detail << rep.deduplicated << " configurations, " << rep.tally.equal << " equal";
}

void stage1(check_result& r, stage1_result& out) {
    out = verify_statement1_stage1(5, parallel());
    const auto& rep = out.report;
    r.require(rep.tally.undecided == 0, "nothing undecided");
    r.require(out.patterns.size() == 14, "14 patterns");
    std::set<int> refs;
    std::set<std::string> keys;
    for (const auto& p : out.patterns) {
        refs.insert(p.reference);
        keys.insert(p.key);
    }
    r.require(keys.size() == out.patterns.size(), "pairwise non-isomorphic");
    r.require(refs.size() == 14 && !refs.contains(0), "each reference drawing matched once");
    for (const auto& e : rep.equalities)
        r.require(!has_level3(from_canonical(e.form)), "equality without level 3");
    r.detail << rep.deduplicated << " configurations, " << rep.tally.failing << " failing classes, "
             << out.patterns.size() << " patterns, " << rep.tally.equal << " equal";
}

void stage2(check_result& r, const stage1_result& s1) {
    auto res = verify_statement1_stage2(s1.patterns, 5, parallel());
    r.require(!s1.patterns.empty(), "patterns available");
    r.require(res.report.tally.undecided == 0, "nothing undecided");
    r.require(res.report.tally.equal == 0 && res.report.tally.failing == 0, "every completion strict");
    r.require(res.report.tally.strict > 0, "completions checked");
    r.detail << res.report.tally.strict << " completions strict";
}

void counting(check_result& r) {
    for (std::size_t d = 1; d <= 6; ++d) {
        mpz_class expect = (mpz_class(1) << (d + 1)) - 1;
        r.require(count_independent_sets(complete_bipartite(d, d)) == expect, "K_{d,d} count");
    }
    auto s = counting_suite(seed, 1000, 16);
    r.require(s.pass(), "branching counter matches brute force");
    r.detail << s.instances << " random graphs, " << s.disagreements << " disagreements";
}

void bound_suite(check_result& r) {
    auto s = kahn_bound_suite(seed, 10000, 8, 4);
    r.require(s.pass(), "bound and equality clause");
    r.detail << s.instances << " graphs, " << s.equalities << " equal, " << s.disagreements << " disagreements, "
             << s.undecided << " undecided";
}

void double_cover(check_result& r) {
    auto s = double_cover_suite(seed, 10000, 8, 4);
    r.require(s.pass(), "square inequality and bipartite equality");
    r.detail << s.instances << " graphs, " << s.equalities << " equal, " << s.disagreements << " disagreements";
}

void bad_root(check_result& r) {
    std::vector<edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}};
    auto g = graph::from_edges(7, es);
    auto v = is_good(g, 0);
    r.require(v.result == outcome::strictly_less, "end vertex is not good");
    auto s = find_good_vertex(g);
    r.require(s.found.has_value(), "a good vertex is found");
    r.detail << "x: " << to_string(v.result);
    if (s.found)
        r.detail << ", good vertex " << *s.found;
}

void cancellation(check_result& r) {
    auto s = cancellation_suite(seed, 10000, 12, 5);
    r.require(s.pass(), "local and whole-graph forms agree");
    r.detail << s.instances << " rooted graphs, " << s.disagreements << " disagreements";
}

} // namespace

int main() {
    stage1_result s1;
    std::vector<std::pair<std::string, std::function<void(check_result&)>>> criteria{
        {"f monotonicity table", fact_check},
        {"regular case", regular_case},
        {"maximum-degree roots (delta 4)", statement2},
        {"minimum-degree roots, stage 1", [&](check_result& r) { stage1(r, s1); }},
        {"minimum-degree roots, stage 2", [&](check_result& r) { stage2(r, s1); }},
        {"independent set counting", counting},
        {"product bound suite", bound_suite},
        {"double cover suite", double_cover},
        {"non-good root regression", bad_root},
        {"cancellation correctness", cancellation},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        check_result r;
        auto t = std::chrono::steady_clock::now();
        try {
            criteria[i].second(r);
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        char head[96];
        std::snprintf(head, sizeof head, "criterion %2zu %s %-32s %8.2f s  ", i + 1, r.ok ? "PASS" : "FAIL",
                      criteria[i].first.c_str(), secs);
        std::cout << head << r.detail.str() << std::endl;
        failed += !r.ok;
    }
    std::cout << (failed ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS") << std::endl;
    return failed ? 1 : 0;
}

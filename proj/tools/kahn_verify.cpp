// Command-line driver: full verification runs, single-graph checks, DOT
// export of the exceptional patterns, and the randomized self-test.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "kahn/config_search.hpp"
#include "kahn/good_vertex.hpp"
#include "kahn/indset.hpp"
#include "kahn/regular.hpp"
#include "kahn/report.hpp"
#include "kahn/selftest.hpp"

namespace fs = std::filesystem;
using namespace kahn;

namespace {

enum exit_code : int { ok = 0, failed = 1, undecided = 2, internal = 3, degree_too_large = 4 };

struct options {
    int delta = 5;
    std::string statement = "all";
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    unsigned precision_bits = 128;
    unsigned precision_cap = 8192;
    std::uint64_t seed = 0;
    std::string json_path;
    std::string dot_dir;
    std::string input;
};

search_options search_opts(const options& o) {
    search_options s;
    s.jobs = o.jobs;
    s.cert.cap_bits = o.precision_cap;
    s.cert.start_bits = std::min(o.precision_bits, o.precision_cap);
    return s;
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw fs::filesystem_error("cannot open for writing", path, std::make_error_code(std::errc::io_error));
    out << text;
    if (!out)
        throw fs::filesystem_error("write failed", path, std::make_error_code(std::errc::io_error));
}

void write_dots(const std::vector<exceptional_pattern>& patterns, const fs::path& dir) {
    fs::create_directories(dir);
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "appearance_%02zu.dot", i + 1);
        write_file(dir / name, patterns[i].dot);
    }
}

int exit_for(run_status s) {
    switch (s) {
    case run_status::pass: return ok;
    case run_status::undecided: return undecided;
    case run_status::fail: return failed;
    }
    return failed;
}

void print_search(const search_report& r) {
    std::cout << "  " << r.statement << " (delta " << r.delta << "): " << r.deduplicated << " configurations, "
              << r.tally.strict << " strict, " << r.tally.equal << " equal, " << r.tally.failing << " failing, "
              << r.tally.undecided << " undecided";
    if (r.excluded_regular)
        std::cout << ", " << r.excluded_regular << " regular skipped";
    std::cout << " -> " << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << " s)\n";
    for (std::size_t i = 0; i < r.problems.size() && i < 10; ++i)
        std::cout << "    problem: " << r.problems[i] << "\n";
}

int cmd_verify_all(const options& o) {
    if (o.delta > 5) {
        std::cerr << "maximum degree above 5 is outside the verified range\n";
        return degree_too_large;
    }
    auto start = std::chrono::steady_clock::now();
    certificate cert;
    cert.config = {"verify-all", o.delta, o.statement, o.jobs, o.precision_bits, o.precision_cap, o.seed};
    auto sopts = search_opts(o);

    if (o.delta >= 2) {
        auto t = std::chrono::steady_clock::now();
        cert.fact_check = check_f_fact(o.delta);
        cert.fact_check_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        std::cout << "f monotonicity (delta " << o.delta << "): " << cert.fact_check->entries.size() << " tuples, "
                  << cert.fact_check->failures << " failures\n";
    }
    for (int d = 1; d <= o.delta; ++d) {
        cert.regular.push_back(verify_regular(d));
        const auto& r = cert.regular.back();
        std::cout << "regular d=" << d << ": " << r.profiles << " profiles, " << r.equalities << " equality -> "
                  << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    if (o.statement == "all" || o.statement == "2") {
        cert.statement2 = verify_statement2(std::min(o.delta, 4), sopts);
        print_search(*cert.statement2);
    }
    if (o.delta == 5 && (o.statement == "all" || o.statement == "1")) {
        auto s1 = verify_statement1_stage1(5, sopts);
        print_search(s1.report);
        std::cout << "  exceptional patterns: " << s1.patterns.size() << "\n";
        stage1_section sec;
        sec.stage1 = std::move(s1.report);
        sec.exceptions = std::move(s1.patterns);
        sec.stage2 = verify_statement1_stage2(sec.exceptions, 5, sopts);
        print_search(sec.stage2->report);
        if (!o.dot_dir.empty())
            write_dots(sec.exceptions, o.dot_dir);
        cert.statement1 = std::move(sec);
    }
    cert.overall = evaluate_overall(cert);
    cert.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "overall: " << to_string(cert.overall) << "\n";
    if (!o.json_path.empty())
        write_file(o.json_path, to_json(cert).dump(2) + "\n");
    return exit_for(cert.overall);
}

int cmd_check(const options& o) {
    graph g;
    {
        std::ifstream in(o.input);
        if (!in) {
            std::cerr << "cannot read " << o.input << "\n";
            return internal;
        }
        g = parse_edge_list(in);
    }
    if (g.max_degree() > 5) {
        std::cerr << "maximum degree " << g.max_degree() << " exceeds 5\n";
        return degree_too_large;
    }
    auto rep = check_kahn_bound(g);
    std::cout << "vertices " << g.order() << ", edges " << g.size() << "\n";
    std::cout << "ind(G) = " << rep.independent_sets.get_str() << "\n";
    std::cout << "Pi(G) = " << rep.pi.to_string() << " in [" << rep.pi_low << ", " << rep.pi_high << "]\n";
    std::cout << "bound: Pi(G) vs ind(G) " << to_string(rep.bound.result) << " ("
              << to_string(rep.bound.method) << ")\n";
    std::cout << "every component complete bipartite or a single vertex: "
              << (rep.structural_equality ? "yes" : "no") << "\n";

    auto search = find_good_vertex(g, search_opts(o).cert);
    nlohmann::ordered_json probes = nlohmann::ordered_json::array();
    for (const auto& p : search.trace) {
        std::cout << "probe " << to_string(p.kind) << " vertex " << p.v << ": " << to_string(p.v_result.result)
                  << (p.v_result.holds() ? " (good)" : " (not good)") << "\n";
        probes.push_back({{"vertex", p.v}, {"kind", std::string(to_string(p.kind))}, {"verdict", to_json(p.v_result)}});
    }
    if (search.found)
        std::cout << "good vertex: " << *search.found << "\n";
    else if (!g.empty())
        std::cout << "no good vertex among the probes\n";

    if (!o.json_path.empty()) {
        auto j = to_json(rep);
        j["probes"] = probes;
        j["good_vertex"] = search.found ? nlohmann::ordered_json(*search.found) : nlohmann::ordered_json(nullptr);
        write_file(o.json_path, j.dump(2) + "\n");
    }
    if (rep.bound.result == outcome::undecided)
        return undecided;
    return rep.bound.holds() ? ok : failed;
}

int cmd_export(const options& o) {
    const fs::path dir = o.dot_dir.empty() ? fs::path("exceptions") : fs::path(o.dot_dir);
    auto s1 = verify_statement1_stage1(5, search_opts(o));
    write_dots(s1.patterns, dir);
    std::cout << "wrote " << s1.patterns.size() << " drawings to " << dir.string() << "\n";
    if (s1.report.tally.undecided > 0)
        return undecided;
    return s1.report.pass ? ok : failed;
}

int cmd_selftest(const options& o) {
    std::vector<suite_result> results{counting_suite(o.seed), kahn_bound_suite(o.seed),
                                      double_cover_suite(o.seed), cancellation_suite(o.seed)};
    bool all = true, any_undecided = false;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.instances << " instances, " << r.disagreements << " disagreements, "
                  << r.undecided << " undecided -> " << (r.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& e : r.examples)
            std::cout << "  " << e << "\n";
        all &= r.pass();
        any_undecided |= r.undecided > 0;
        j.push_back({{"suite", r.name},
                     {"instances", r.instances},
                     {"disagreements", r.disagreements},
                     {"undecided", r.undecided},
                     {"equalities", r.equalities}});
    }
    if (!o.json_path.empty())
        write_file(o.json_path, nlohmann::ordered_json{{"seed", o.seed}, {"suites", j}}.dump(2) + "\n");
    if (any_undecided)
        return undecided;
    return all ? ok : failed;
}

} // namespace

int main(int argc, char** argv) {
    options o;
    CLI::App app{"Verifier for the independent-set product bound on graphs of maximum degree at most 5"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--precision-bits", o.precision_bits, "starting interval precision")
            ->check(CLI::Range(2u, 1u << 20));
        sub->add_option("--precision-cap", o.precision_cap, "largest interval precision")
            ->check(CLI::Range(2u, 1u << 20));
        sub->add_option("--json", o.json_path, "write a JSON report here");
        sub->add_option("--seed", o.seed, "seed for randomized suites");
    };

    auto* verify = app.add_subcommand("verify-all", "run every verification step and emit a certificate");
    add_common(verify);
    verify->add_option("--delta", o.delta, "maximum degree (1-5)")->check(CLI::PositiveNumber);
    verify->add_option("--statement", o.statement, "which search to run")
        ->check(CLI::IsMember({"all", "1", "2"}));
    verify->add_option("--dot", o.dot_dir, "also write exceptional-pattern drawings here");

    auto* check = app.add_subcommand("check", "report ind(G), Pi(G) and good vertices of one graph");
    add_common(check);
    check->add_option("--input", o.input, "edge-list file")->required();

    auto* exp = app.add_subcommand("export-exceptions", "write the exceptional patterns as DOT files");
    add_common(exp);
    exp->add_option("--dot", o.dot_dir, "output directory");

    auto* self = app.add_subcommand("selftest", "randomized oracle and cancellation suites");
    add_common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return internal;
    }

    try {
        if (o.precision_cap < 2) {
            std::cerr << "precision cap must be at least 2 bits\n";
            return internal;
        }
        if (*verify)
            return cmd_verify_all(o);
        if (*check)
            return cmd_check(o);
        if (*exp)
            return cmd_export(o);
        return cmd_selftest(o);
    } catch (const degree_bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return degree_too_large;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return internal;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "filesystem error: " << e.what() << "\n";
        return internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
}

#include "doctest.h"

#include "kahn/report.hpp"

using namespace kahn;

namespace {

certificate small_certificate() {
    certificate c;
    c.config = {"verify-all", 3, "all", 2, 64, 512, 9};
    c.fact_check = check_f_fact(3);
    c.fact_check_seconds = 0.25;
    for (int d = 1; d <= 3; ++d)
        c.regular.push_back(verify_regular(d));
    c.statement2 = verify_statement2(3);
    c.overall = evaluate_overall(c);
    c.total_seconds = 1.5;
    return c;
}

} // namespace

TEST_CASE("certificate survives a JSON round trip") {
    auto c = small_certificate();
    CHECK(c.overall == run_status::pass);
    auto j = to_json(c);
    auto back = certificate_from_json(nlohmann::ordered_json::parse(j.dump()));
    CHECK(back.config == c.config);
    CHECK(back.overall == c.overall);
    CHECK(back.total_seconds == doctest::Approx(1.5));
    CHECK(to_json(back) == j);
    CHECK(j["overall"] == "PASS");
    CHECK(j["statement1"].is_null());
    CHECK(j["statement2"]["tally"]["failing"] == 0);
}

TEST_CASE("timing is the only run-dependent block") {
    auto a = to_json(small_certificate());
    auto b = to_json(small_certificate());
    CHECK(a.contains("timing"));
    CHECK_FALSE(without_timing(a).contains("timing"));
    CHECK(without_timing(a) == without_timing(b));
}

TEST_CASE("overall status") {
    certificate empty;
    CHECK(evaluate_overall(empty) == run_status::fail);

    auto c = small_certificate();
    c.statement2->tally.undecided = 1;
    c.statement2->pass = false;
    CHECK(evaluate_overall(c) == run_status::undecided);

    auto d = small_certificate();
    d.regular[1].pass = false;
    CHECK(evaluate_overall(d) == run_status::fail);

    auto e = small_certificate();
    e.statement1 = stage1_section{};
    e.statement1->stage1.pass = true;
    CHECK(evaluate_overall(e) == run_status::fail); // missing stage 2
}

TEST_CASE("status and verdict strings") {
    for (auto s : {run_status::pass, run_status::fail, run_status::undecided})
        CHECK(run_status_from(to_string(s)) == s);
    CHECK_THROWS(run_status_from("maybe"));
    verdict v = check_f_fact_tuple(2, 1, 2, 1).v;
    auto w = verdict_from_json(to_json(v));
    CHECK(w.result == v.result);
    CHECK(w.lhs_low == v.lhs_low);
    CHECK(w.precision_bits == v.precision_bits);
    CHECK_THROWS(certificate_from_json(nlohmann::ordered_json::object()));
}

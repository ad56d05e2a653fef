#include "kahn/report.hpp"

#include <stdexcept>

namespace kahn {

using json = nlohmann::ordered_json;

std::string_view to_string(run_status s) {
    switch (s) {
    case run_status::pass: return "PASS";
    case run_status::fail: return "FAIL";
    case run_status::undecided: return "UNDECIDED";
    }
    return "FAIL";
}

run_status run_status_from(std::string_view s) {
    if (s == "PASS")
        return run_status::pass;
    if (s == "FAIL")
        return run_status::fail;
    if (s == "UNDECIDED")
        return run_status::undecided;
    throw std::invalid_argument("unknown run status");
}

namespace {

outcome outcome_from(std::string_view s) {
    for (auto o : {outcome::strictly_greater, outcome::equal, outcome::strictly_less, outcome::undecided})
        if (to_string(o) == s)
            return o;
    throw std::invalid_argument("unknown outcome");
}

std::string pass_string(bool pass) { return pass ? "PASS" : "FAIL"; }

canonical_form form_from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("odd-length canonical form");
    canonical_form c;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        c.bytes.push_back(static_cast<std::uint8_t>(std::stoul(hex.substr(i, 2), nullptr, 16)));
    return c;
}

json to_json(const verdict_tally& t) {
    return {{"strict", t.strict}, {"equal", t.equal}, {"failing", t.failing}, {"undecided", t.undecided}};
}

verdict_tally tally_from(const json& j) {
    return {j.at("strict").get<std::uint64_t>(), j.at("equal").get<std::uint64_t>(),
            j.at("failing").get<std::uint64_t>(), j.at("undecided").get<std::uint64_t>()};
}

json to_json(const config_record& r) {
    json j = {{"canonical", r.form.hex()}, {"description", r.description}};
    j["verdict"] = to_json(r.v);
    return j;
}

config_record record_from(const json& j) {
    return {form_from_hex(j.at("canonical").get<std::string>()), j.at("description").get<std::string>(),
            verdict_from_json(j.at("verdict"))};
}

json records(const std::vector<config_record>& rs) {
    json a = json::array();
    for (const auto& r : rs)
        a.push_back(to_json(r));
    return a;
}

std::vector<config_record> records_from(const json& a) {
    std::vector<config_record> out;
    for (const auto& j : a)
        out.push_back(record_from(j));
    return out;
}

json to_json(const f_fact_report& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(
            {{"a", e.a}, {"a_shift", e.a_shift}, {"b", e.b}, {"b_shift", e.b_shift}, {"verdict", to_json(e.v)}});
    return {{"delta", r.delta},
            {"tuples", r.entries.size()},
            {"failures", r.failures},
            {"entries", entries},
            {"verdict", pass_string(r.pass())}};
}

f_fact_report fact_from(const json& j) {
    f_fact_report r;
    r.delta = j.at("delta").get<int>();
    r.failures = j.at("failures").get<std::size_t>();
    for (const auto& e : j.at("entries"))
        r.entries.push_back({e.at("a").get<int>(), e.at("a_shift").get<int>(), e.at("b").get<int>(),
                             e.at("b_shift").get<int>(), verdict_from_json(e.at("verdict"))});
    return r;
}

json to_json(const regular_report& r) {
    json eq = json::array();
    for (const auto& p : r.equality_profiles)
        eq.push_back({{"k", p.k}, {"xs", p.xs}});
    return {{"d", r.d},
            {"profiles", r.profiles},
            {"strict", r.strict},
            {"equalities", r.equalities},
            {"failing", r.failing},
            {"equality_profiles", eq},
            {"problems", r.problems},
            {"verdict", pass_string(r.pass)}};
}

regular_report regular_from(const json& j) {
    regular_report r;
    r.d = j.at("d").get<int>();
    r.profiles = j.at("profiles").get<std::uint64_t>();
    r.strict = j.at("strict").get<std::uint64_t>();
    r.equalities = j.at("equalities").get<std::uint64_t>();
    r.failing = j.at("failing").get<std::uint64_t>();
    for (const auto& p : j.at("equality_profiles"))
        r.equality_profiles.push_back({r.d, p.at("k").get<int>(), p.at("xs").get<std::vector<int>>()});
    r.problems = j.at("problems").get<std::vector<std::string>>();
    r.pass = j.at("verdict").get<std::string>() == "PASS";
    return r;
}

json to_json(const exceptional_pattern& p, std::size_t index) {
    auto c = canonicalize(p.drawing);
    json edges = json::array();
    for (auto [a, b] : c.g.edges())
        edges.push_back({a, b});
    return {{"index", index},
            {"reference", p.reference},
            {"config", canonical(p.config).hex()},
            {"description", describe(p.config)},
            {"key", p.key},
            {"levels", c.level},
            {"edges", edges},
            {"dot", p.dot}};
}

exceptional_pattern pattern_from(const json& j) {
    exceptional_pattern p;
    p.reference = j.at("reference").get<int>();
    p.config = from_canonical(form_from_hex(j.at("config").get<std::string>()));
    p.key = j.at("key").get<std::string>();
    p.dot = j.at("dot").get<std::string>();
    auto levels = j.at("levels").get<std::vector<int>>();
    std::vector<edge> es;
    for (const auto& e : j.at("edges"))
        es.emplace_back(e.at(0).get<vertex>(), e.at(1).get<vertex>());
    p.drawing = make_leveled(graph::from_edges(levels.size(), es), 0);
    if (p.drawing.level != levels)
        throw std::invalid_argument("pattern levels do not match its edges");
    return p;
}

json to_json(const neighbor_check& c) {
    return {{"pattern", c.pattern},     {"reference", c.reference},   {"neighbor", c.neighbor},
            {"completions", c.completions}, {"tally", to_json(c.tally)}, {"nonstrict", records(c.nonstrict)},
            {"verdict", pass_string(c.pass())}};
}

neighbor_check check_from(const json& j) {
    neighbor_check c;
    c.pattern = j.at("pattern").get<int>();
    c.reference = j.at("reference").get<int>();
    c.neighbor = j.at("neighbor").get<vertex>();
    c.completions = j.at("completions").get<std::uint64_t>();
    c.tally = tally_from(j.at("tally"));
    c.nonstrict = records_from(j.at("nonstrict"));
    return c;
}

} // namespace

run_status evaluate_overall(const certificate& c) {
    bool undecided = false, ok = true;
    if (c.fact_check) {
        ok &= c.fact_check->pass();
        for (const auto& e : c.fact_check->entries)
            undecided |= e.v.result == outcome::undecided;
    }
    for (const auto& r : c.regular)
        ok &= r.pass;
    auto search = [&](const search_report& r) {
        ok &= r.pass;
        undecided |= r.tally.undecided > 0;
    };
    if (c.statement2)
        search(*c.statement2);
    if (c.statement1) {
        search(c.statement1->stage1);
        if (c.statement1->stage2)
            search(c.statement1->stage2->report);
        else
            ok = false;
    }
    if (!c.fact_check && c.regular.empty() && !c.statement2 && !c.statement1)
        ok = false;
    if (undecided)
        return run_status::undecided;
    return ok ? run_status::pass : run_status::fail;
}

json to_json(const verdict& v) {
    return {{"result", std::string(to_string(v.result))},
            {"method", std::string(to_string(v.method))},
            {"precision_bits", v.precision_bits},
            {"lhs", json::array({v.lhs_low, v.lhs_high})},
            {"rhs", json::array({v.rhs_low, v.rhs_high})}};
}

verdict verdict_from_json(const json& j) {
    verdict v;
    v.result = outcome_from(j.at("result").get<std::string>());
    auto m = j.at("method").get<std::string>();
    if (m != "exact" && m != "interval")
        throw std::invalid_argument("unknown certification method");
    v.method = m == "exact" ? certification_method::exact : certification_method::interval;
    v.precision_bits = j.at("precision_bits").get<unsigned>();
    v.lhs_low = j.at("lhs").at(0).get<std::string>();
    v.lhs_high = j.at("lhs").at(1).get<std::string>();
    v.rhs_low = j.at("rhs").at(0).get<std::string>();
    v.rhs_high = j.at("rhs").at(1).get<std::string>();
    return v;
}

json to_json(const search_report& r) {
    json interval = json::object();
    for (auto [bits, n] : r.precision.interval_bits)
        interval[std::to_string(bits)] = n;
    return {{"statement", r.statement},
            {"delta", r.delta},
            {"configs_enumerated", r.enumerated},
            {"configs_deduplicated", r.deduplicated},
            {"excluded_regular", r.excluded_regular},
            {"tally", to_json(r.tally)},
            {"equalities", records(r.equalities)},
            {"failures", records(r.failures)},
            {"undecided", records(r.undecided)},
            {"precision", {{"exact", r.precision.exact}, {"interval_bits", interval}}},
            {"problems", r.problems},
            {"verdict", pass_string(r.pass)}};
}

search_report search_report_from_json(const json& j) {
    search_report r;
    r.statement = j.at("statement").get<std::string>();
    r.delta = j.at("delta").get<int>();
    r.enumerated = j.at("configs_enumerated").get<std::uint64_t>();
    r.deduplicated = j.at("configs_deduplicated").get<std::uint64_t>();
    r.excluded_regular = j.at("excluded_regular").get<std::uint64_t>();
    r.tally = tally_from(j.at("tally"));
    r.equalities = records_from(j.at("equalities"));
    r.failures = records_from(j.at("failures"));
    r.undecided = records_from(j.at("undecided"));
    r.precision.exact = j.at("precision").at("exact").get<std::uint64_t>();
    for (const auto& [bits, n] : j.at("precision").at("interval_bits").items())
        r.precision.interval_bits[static_cast<unsigned>(std::stoul(bits))] = n.get<std::uint64_t>();
    r.problems = j.at("problems").get<std::vector<std::string>>();
    r.pass = j.at("verdict").get<std::string>() == "PASS";
    return r;
}

json to_json(const certificate& c) {
    json j;
    j["version"] = c.version;
    j["config"] = {{"subcommand", c.config.subcommand},
                   {"delta", c.config.delta},
                   {"statement", c.config.statement},
                   {"jobs", c.config.jobs},
                   {"precision_bits", c.config.precision_bits},
                   {"precision_cap", c.config.precision_cap},
                   {"seed", c.config.seed}};
    j["fact_check"] = c.fact_check ? to_json(*c.fact_check) : json(nullptr);
    j["regular"] = json::array();
    for (const auto& r : c.regular)
        j["regular"].push_back(to_json(r));
    j["statement2"] = c.statement2 ? to_json(*c.statement2) : json(nullptr);
    if (c.statement1) {
        json s1;
        s1["stage1"] = to_json(c.statement1->stage1);
        s1["exceptions"] = json::array();
        for (std::size_t i = 0; i < c.statement1->exceptions.size(); ++i)
            s1["exceptions"].push_back(to_json(c.statement1->exceptions[i], i + 1));
        if (c.statement1->stage2) {
            json s2 = to_json(c.statement1->stage2->report);
            s2["checks"] = json::array();
            for (const auto& chk : c.statement1->stage2->checks)
                s2["checks"].push_back(to_json(chk));
            s1["stage2"] = s2;
        } else {
            s1["stage2"] = nullptr;
        }
        j["statement1"] = s1;
    } else {
        j["statement1"] = nullptr;
    }
    j["overall"] = std::string(to_string(c.overall));

    json timing;
    timing["fact_check"] = c.fact_check_seconds;
    json reg = json::array();
    for (const auto& r : c.regular)
        reg.push_back(r.seconds);
    timing["regular"] = reg;
    timing["statement2"] = c.statement2 ? json(c.statement2->seconds) : json(nullptr);
    timing["stage1"] = c.statement1 ? json(c.statement1->stage1.seconds) : json(nullptr);
    timing["stage2"] = c.statement1 && c.statement1->stage2 ? json(c.statement1->stage2->report.seconds)
                                                             : json(nullptr);
    timing["total"] = c.total_seconds;
    j["timing"] = timing;
    return j;
}

certificate certificate_from_json(const json& j) {
    certificate c;
    c.version = j.at("version").get<std::string>();
    const auto& cfg = j.at("config");
    c.config.subcommand = cfg.at("subcommand").get<std::string>();
    c.config.delta = cfg.at("delta").get<int>();
    c.config.statement = cfg.at("statement").get<std::string>();
    c.config.jobs = cfg.at("jobs").get<unsigned>();
    c.config.precision_bits = cfg.at("precision_bits").get<unsigned>();
    c.config.precision_cap = cfg.at("precision_cap").get<unsigned>();
    c.config.seed = cfg.at("seed").get<std::uint64_t>();
    if (!j.at("fact_check").is_null())
        c.fact_check = fact_from(j.at("fact_check"));
    for (const auto& r : j.at("regular"))
        c.regular.push_back(regular_from(r));
    if (!j.at("statement2").is_null())
        c.statement2 = search_report_from_json(j.at("statement2"));
    if (!j.at("statement1").is_null()) {
        const auto& s1 = j.at("statement1");
        stage1_section sec;
        sec.stage1 = search_report_from_json(s1.at("stage1"));
        for (const auto& p : s1.at("exceptions"))
            sec.exceptions.push_back(pattern_from(p));
        if (!s1.at("stage2").is_null()) {
            stage2_result s2;
            s2.report = search_report_from_json(s1.at("stage2"));
            for (const auto& chk : s1.at("stage2").at("checks"))
                s2.checks.push_back(check_from(chk));
            sec.stage2 = std::move(s2);
        }
        c.statement1 = std::move(sec);
    }
    c.overall = run_status_from(j.at("overall").get<std::string>());

    if (j.contains("timing")) {
        const auto& t = j.at("timing");
        const auto& reg = t.at("regular");
        for (std::size_t i = 0; i < c.regular.size() && i < reg.size(); ++i)
            c.regular[i].seconds = reg.at(i).get<double>();
        if (c.statement2 && !t.at("statement2").is_null())
            c.statement2->seconds = t.at("statement2").get<double>();
        if (c.statement1 && !t.at("stage1").is_null())
            c.statement1->stage1.seconds = t.at("stage1").get<double>();
        if (c.statement1 && c.statement1->stage2 && !t.at("stage2").is_null())
            c.statement1->stage2->report.seconds = t.at("stage2").get<double>();
        c.fact_check_seconds = t.at("fact_check").get<double>();
        c.total_seconds = t.at("total").get<double>();
    }
    return c;
}

json without_timing(json j) {
    j.erase("timing");
    return j;
}

json to_json(const kahn_report& r) {
    return {{"independent_sets", r.independent_sets.get_str()},
            {"pi", r.pi.to_string()},
            {"pi_enclosure", json::array({r.pi_low, r.pi_high})},
            {"bound", to_json(r.bound)},
            {"structural_equality", r.structural_equality}};
}

} // namespace kahn

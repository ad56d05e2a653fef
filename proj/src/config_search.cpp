#include "kahn/config_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

namespace kahn {

void verdict_tally::add(outcome o) {
    switch (o) {
    case outcome::strictly_greater: ++strict; break;
    case outcome::equal: ++equal; break;
    case outcome::strictly_less: ++failing; break;
    case outcome::undecided: ++undecided; break;
    }
}

verdict_tally& verdict_tally::operator+=(const verdict_tally& o) {
    strict += o.strict;
    equal += o.equal;
    failing += o.failing;
    undecided += o.undecided;
    return *this;
}

void precision_stats::add(const verdict& v) {
    if (v.method == certification_method::exact)
        ++exact;
    else
        ++interval_bits[v.precision_bits];
}

precision_stats& precision_stats::operator+=(const precision_stats& o) {
    exact += o.exact;
    for (auto [bits, n] : o.interval_bits)
        interval_bits[bits] += n;
    return *this;
}

namespace {

using clock_type = std::chrono::steady_clock;

// Undecided configurations are counted in full but only this many are kept.
constexpr std::size_t max_listed_undecided = 1000;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

config_record make_record(const local_config& cfg, const verdict& v) {
    return {canonical(cfg), describe(cfg), v};
}

void sort_records(std::vector<config_record>& rs) {
    std::sort(rs.begin(), rs.end(), [](const auto& a, const auto& b) { return a.form < b.form; });
}

// Per-shard partial report; merged in shard order.
struct shard_outcome {
    enumeration_stats stats;
    std::uint64_t excluded = 0;
    verdict_tally tally;
    precision_stats precision;
    std::vector<config_record> equalities, failures, undecided;
    std::vector<std::string> problems;
};

// Returns false to skip a configuration, true to certify it.
using config_filter = std::function<bool(const local_config&)>;
// Called after certification; may append problems.
using config_check = std::function<void(const local_config&, const verdict&, std::vector<std::string>&)>;

shard_outcome run_shard(const config_shard& shard, const search_options& opts, const config_filter& keep,
                        const config_check& check) {
    shard_outcome out;
    out.stats = enumerate_shard(shard, [&](const local_config& cfg) {
        if (!keep(cfg)) {
            ++out.excluded;
            return;
        }
        verdict v = config_goodness(cfg, opts.cert);
        out.tally.add(v.result);
        out.precision.add(v);
        switch (v.result) {
        case outcome::equal: out.equalities.push_back(make_record(cfg, v)); break;
        case outcome::strictly_less: out.failures.push_back(make_record(cfg, v)); break;
        case outcome::undecided:
            if (out.undecided.size() < max_listed_undecided)
                out.undecided.push_back(make_record(cfg, v));
            break;
        case outcome::strictly_greater: break;
        }
        check(cfg, v, out.problems);
    });
    return out;
}

void run_spaces(search_report& rep, const std::vector<config_space>& spaces, const search_options& opts,
                const config_filter& keep, const config_check& check) {
    std::vector<config_shard> shards;
    for (const auto& s : spaces)
        for (auto& sh : make_shards(s))
            shards.push_back(std::move(sh));

    std::vector<shard_outcome> results(shards.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < shards.size();)
            results[i] = run_shard(shards[i], opts, keep, check);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(shards.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    for (auto& r : results) {
        rep.enumerated += r.stats.leaves;
        rep.deduplicated += r.stats.accepted;
        rep.excluded_regular += r.excluded;
        rep.tally += r.tally;
        rep.precision += r.precision;
        auto move_all = [](auto& dst, auto& src) {
            dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
        };
        move_all(rep.equalities, r.equalities);
        move_all(rep.failures, r.failures);
        move_all(rep.undecided, r.undecided);
        move_all(rep.problems, r.problems);
    }
    sort_records(rep.equalities);
    sort_records(rep.failures);
    sort_records(rep.undecided);
    if (rep.undecided.size() > max_listed_undecided)
        rep.undecided.resize(max_listed_undecided);
}

bool is_regular_config(const local_config& cfg) {
    if (cfg.root_degree == 0 || has_level3(cfg))
        return false;
    auto d = static_cast<std::uint8_t>(cfg.root_degree);
    return std::all_of(cfg.level1_degrees.begin(), cfg.level1_degrees.end(), [&](auto x) { return x == d; }) &&
           std::all_of(cfg.level2.begin(), cfg.level2.end(), [&](const auto& r) { return r.degree == d; });
}

} // namespace

search_report verify_statement2(int delta, const search_options& opts) {
    if (delta < 1 || delta > 4)
        throw std::invalid_argument("maximum-degree search covers delta in [1, 4]");
    auto start = clock_type::now();
    search_report rep;
    rep.statement = "statement2";
    rep.delta = delta;
    std::vector<config_space> spaces;
    for (int d0 = 0; d0 <= delta; ++d0)
        spaces.push_back(max_degree_space(d0));
    run_spaces(
        rep, spaces, opts, [](const local_config&) { return true; },
        [](const local_config& cfg, const verdict& v, std::vector<std::string>& problems) {
            bool bip = is_complete_bipartite_config(cfg);
            if ((v.result == outcome::equal) != bip)
                problems.push_back("equality mismatch at " + describe(cfg));
        });
    for (const auto& r : rep.failures)
        rep.problems.push_back("root not good: " + r.description + " [" + r.form.hex() + "]");
    if (rep.tally.undecided > 0)
        rep.problems.push_back(std::to_string(rep.tally.undecided) + " configurations undecided");
    rep.pass = rep.problems.empty() && rep.tally.failing == 0 && rep.tally.undecided == 0;
    rep.seconds = seconds_since(start);
    return rep;
}

stage1_result verify_statement1_stage1(int delta, const search_options& opts) {
    if (delta < 1 || delta > 5)
        throw std::invalid_argument("minimum-degree search covers delta in [1, 5]");
    auto start = clock_type::now();
    stage1_result res;
    auto& rep = res.report;
    rep.statement = "statement1.stage1";
    rep.delta = delta;
    std::vector<config_space> spaces;
    // A non-regular graph has minimum degree below its maximum degree.
    for (int d0 = 0; d0 < delta; ++d0)
        spaces.push_back(min_degree_space(d0, delta));
    run_spaces(
        rep, spaces, opts, [](const local_config& cfg) { return !is_regular_config(cfg); },
        [](const local_config& cfg, const verdict& v, std::vector<std::string>& problems) {
            bool clause = !has_level3(cfg) && is_complete_bipartite_config(cfg);
            if ((v.result == outcome::equal) != clause)
                problems.push_back("equality mismatch at " + describe(cfg));
        });
    if (rep.tally.undecided > 0)
        rep.problems.push_back(std::to_string(rep.tally.undecided) + " configurations undecided");

    std::set<std::string> seen;
    for (const auto& r : rep.failures) {
        auto cfg = from_canonical(r.form);
        res.failing.push_back(cfg);
        for (auto& lg : level3_variants(cfg)) {
            exceptional_pattern p;
            p.key = canonicalize(lg).key;
            if (!seen.insert(p.key).second)
                continue;
            p.reference = match_reference(lg);
            p.config = cfg;
            p.drawing = std::move(lg);
            res.patterns.push_back(std::move(p));
        }
    }
    std::sort(res.patterns.begin(), res.patterns.end(), [](const auto& a, const auto& b) {
        auto ka = a.reference == 0 ? 1000 : a.reference;
        auto kb = b.reference == 0 ? 1000 : b.reference;
        return ka != kb ? ka < kb : a.key < b.key;
    });
    for (std::size_t i = 0; i < res.patterns.size(); ++i) {
        auto& p = res.patterns[i];
        char name[32];
        std::snprintf(name, sizeof name, "appearance_%02zu", i + 1);
        p.dot = to_dot(p.drawing, name);
    }

    const std::size_t expected = reference_appearances().size();
    std::set<int> matched;
    for (const auto& p : res.patterns) {
        if (p.reference == 0)
            rep.problems.push_back("failing pattern not among the reference drawings: " + p.key);
        else
            matched.insert(p.reference);
    }
    if (res.patterns.size() != expected || matched.size() != expected)
        rep.problems.push_back("expected " + std::to_string(expected) + " exceptional patterns, found " +
                               std::to_string(res.patterns.size()) + " matching " +
                               std::to_string(matched.size()) + " reference drawings");
    rep.pass = rep.problems.empty() && rep.tally.undecided == 0;
    rep.seconds = seconds_since(start);
    return res;
}

std::vector<local_config> neighbor_completions(const leveled_graph& drawing, vertex x_prime, int delta) {
    const graph& g = drawing.g;
    const vertex x = drawing.root;
    if (!g.adjacent(x, x_prime))
        throw graph_error("x' must be a neighbour of the root");
    const int root_degree = static_cast<int>(g.degree(x));

    auto ld = decompose_levels(g, x_prime);
    std::vector<vertex> l1, l2;
    l1.push_back(x);
    for (vertex w : g.neighbors(x_prime))
        if (w != x)
            l1.push_back(w);
    for (vertex v = 0; v < g.order(); ++v)
        if (ld.level[v] == 2)
            l2.push_back(v);
    // Level-3 drawing vertices are the only ones whose neighbourhood is not
    // fully drawn.
    constexpr int depth = 3;
    for (vertex w : l1)
        if (drawing.level[w] >= depth)
            throw graph_error("x' must see only fully drawn vertices");

    local_config base;
    base.delta_eff = delta;
    base.root_degree = static_cast<int>(l1.size());
    if (base.root_degree > max_config_root_degree)
        throw config_error("x' has too many neighbours");
    for (vertex w : l1)
        base.level1_degrees.push_back(static_cast<std::uint8_t>(g.degree(w)));

    struct slot {
        std::uint8_t mask;
        int lo, hi;
    };
    std::vector<slot> slots;
    for (vertex v : l2) {
        std::uint8_t mask = 0;
        for (std::size_t i = 0; i < l1.size(); ++i)
            if (g.adjacent(v, l1[i]))
                mask = static_cast<std::uint8_t>(mask | (1u << i));
        int drawn = static_cast<int>(g.degree(v));
        if (drawing.level[v] >= depth)
            slots.push_back({mask, std::max({root_degree, drawn, 1}), delta});
        else
            slots.push_back({mask, drawn, drawn});
    }

    std::set<canonical_form> seen;
    std::vector<local_config> out;
    std::vector<int> choice(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
        choice[i] = slots[i].lo;
    for (;;) {
        local_config cfg = base;
        for (std::size_t i = 0; i < slots.size(); ++i)
            cfg.level2.push_back({slots[i].mask, static_cast<std::uint8_t>(choice[i])});
        validate_config(cfg);
        if (seen.insert(canonical(cfg)).second)
            out.push_back(std::move(cfg));
        std::size_t i = 0;
        while (i < slots.size() && choice[i] == slots[i].hi) {
            choice[i] = slots[i].lo;
            ++i;
        }
        if (i == slots.size())
            break;
        ++choice[i];
    }
    return out;
}

stage2_result verify_statement1_stage2(const std::vector<exceptional_pattern>& patterns, int delta,
                                       const search_options& opts) {
    auto start = clock_type::now();
    stage2_result res;
    auto& rep = res.report;
    rep.statement = "statement1.stage2";
    rep.delta = delta;

    struct job {
        int pattern, reference;
        leveled_graph drawing;
        vertex neighbor;
    };
    std::vector<job> jobs;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        auto c = canonicalize(patterns[i].drawing);
        leveled_graph lg{c.g, 0, c.level};
        for (vertex w : lg.g.neighbors(0))
            jobs.push_back({static_cast<int>(i) + 1, patterns[i].reference, lg, w});
    }

    res.checks.resize(jobs.size());
    std::vector<precision_stats> precision(jobs.size());
    std::vector<std::vector<config_record>> equalities(jobs.size()), failures(jobs.size()), undecided(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            auto& j = jobs[i];
            auto& chk = res.checks[i];
            chk.pattern = j.pattern;
            chk.reference = j.reference;
            chk.neighbor = j.neighbor;
            for (const auto& cfg : neighbor_completions(j.drawing, j.neighbor, delta)) {
                verdict v = config_goodness(cfg, opts.cert);
                ++chk.completions;
                chk.tally.add(v.result);
                precision[i].add(v);
                if (v.result != outcome::strictly_greater)
                    chk.nonstrict.push_back(make_record(cfg, v));
                if (v.result == outcome::equal)
                    equalities[i].push_back(make_record(cfg, v));
                else if (v.result == outcome::strictly_less)
                    failures[i].push_back(make_record(cfg, v));
                else if (v.result == outcome::undecided)
                    undecided[i].push_back(make_record(cfg, v));
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(jobs.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < n; ++k)
            pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& chk = res.checks[i];
        rep.enumerated += chk.completions;
        rep.deduplicated += chk.completions;
        rep.tally += chk.tally;
        rep.precision += precision[i];
        rep.equalities.insert(rep.equalities.end(), equalities[i].begin(), equalities[i].end());
        rep.failures.insert(rep.failures.end(), failures[i].begin(), failures[i].end());
        rep.undecided.insert(rep.undecided.end(), undecided[i].begin(), undecided[i].end());
        if (!chk.pass())
            rep.problems.push_back("pattern " + std::to_string(chk.pattern) + " neighbour v" +
                                   std::to_string(chk.neighbor) + ": " + std::to_string(chk.nonstrict.size()) +
                                   " of " + std::to_string(chk.completions) + " completions not strict");
    }
    sort_records(rep.equalities);
    sort_records(rep.failures);
    sort_records(rep.undecided);
    if (patterns.empty())
        rep.problems.push_back("no exceptional patterns supplied");
    rep.pass = rep.problems.empty();
    rep.seconds = seconds_since(start);
    return res;
}

} // namespace kahn

#include "doctest.h"

#include <set>

#include "kahn/config_search.hpp"

using namespace kahn;

namespace {

std::set<canonical_form> forms(const std::vector<config_record>& rs) {
    std::set<canonical_form> out;
    for (const auto& r : rs)
        out.insert(r.form);
    return out;
}

// Completions built the slow way: hang pendant leaves on each level-3
// vertex and read the configuration off the concrete graph.
std::set<canonical_form> completions_by_padding(const leveled_graph& d, vertex xp, int delta) {
    auto top = d.at_level(3);
    const int root_degree = static_cast<int>(d.g.degree(d.root));
    std::vector<int> lo, deg;
    for (vertex y : top) {
        lo.push_back(std::max<int>(root_degree, static_cast<int>(d.g.degree(y))));
        deg.push_back(lo.back());
    }
    std::set<canonical_form> out;
    for (;;) {
        auto drawn = d.g.edges();
        std::vector<edge> es(drawn.begin(), drawn.end());
        auto n = static_cast<vertex>(d.g.order());
        for (std::size_t i = 0; i < top.size(); ++i)
            for (int k = static_cast<int>(d.g.degree(top[i])); k < deg[i]; ++k)
                es.emplace_back(top[i], n++);
        out.insert(canonical(extract_config(graph::from_edges(n, es), xp, delta)));
        std::size_t i = 0;
        while (i < deg.size() && deg[i] == delta) {
            deg[i] = lo[i];
            ++i;
        }
        if (i == deg.size())
            break;
        ++deg[i];
    }
    return out;
}

} // namespace

TEST_CASE("maximum-degree search, small delta") {
    auto r1 = verify_statement2(1);
    CHECK(r1.pass);
    CHECK(r1.deduplicated == 2);
    CHECK(r1.tally.equal == 2);

    auto r2 = verify_statement2(2);
    CHECK(r2.pass);
    CHECK(r2.tally.equal == 4);
    CHECK(r2.tally.failing == 0);
    CHECK(r2.tally.undecided == 0);

    auto r3 = verify_statement2(3);
    CHECK(r3.pass);
    CHECK(r3.tally.failing == 0);
    CHECK(r3.tally.total() == r3.deduplicated);
    for (const auto& e : r3.equalities)
        CHECK(is_complete_bipartite_config(from_canonical(e.form)));
    CHECK(r3.equalities.size() == 7);
    CHECK_THROWS(verify_statement2(5));
}

TEST_CASE("thread count does not change the report") {
    search_options one, three;
    three.jobs = 3;
    auto a = verify_statement2(3, one);
    auto b = verify_statement2(3, three);
    CHECK(a.deduplicated == b.deduplicated);
    CHECK(a.enumerated == b.enumerated);
    CHECK(a.tally == b.tally);
    CHECK(a.precision == b.precision);
    CHECK(forms(a.equalities) == forms(b.equalities));
    REQUIRE(a.equalities.size() == b.equalities.size());
    for (std::size_t i = 0; i < a.equalities.size(); ++i)
        CHECK(a.equalities[i].form == b.equalities[i].form);
}

TEST_CASE("undecided results block a pass") {
    search_options tight;
    tight.cert.start_bits = 4;
    tight.cert.cap_bits = 4;
    auto r = verify_statement2(3, tight);
    CHECK(r.tally.undecided > 0);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.problems.empty());
}

TEST_CASE("neighbour completions match the padded-graph oracle") {
    const auto& refs = reference_appearances();
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const auto& d = refs[i];
        for (vertex xp : d.g.neighbors(d.root)) {
            auto fast = neighbor_completions(d, xp, 5);
            std::set<canonical_form> got;
            for (const auto& c : fast) {
                CHECK(c.delta_eff == 5);
                got.insert(canonical(c));
            }
            CHECK(got.size() == fast.size());
            CHECK(got == completions_by_padding(d, xp, 5));
        }
    }
    CHECK_THROWS(neighbor_completions(refs[0], refs[0].root, 5));
}

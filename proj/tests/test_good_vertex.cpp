#include "doctest.h"

#include "kahn/good_vertex.hpp"
#include "kahn/selftest.hpp"

using namespace kahn;

namespace {

// Path x-1-2-3 with three leaves on vertex 3.
graph leafy_path() {
    std::vector<edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}};
    return graph::from_edges(7, es);
}

} // namespace

TEST_CASE("level decomposition of a leafy path") {
    auto ld = decompose_levels(leafy_path(), 0);
    CHECK(ld.level == std::vector<int>{0, 1, 2, 3, 4, 4, 4});
    CHECK(ld.e01.size() == 1);
    CHECK(ld.e12.size() == 1);
    CHECK(ld.e23.size() == 1);
    CHECK(ld.iso_component == 0);
    CHECK(ld.iso_without_root == 0);
    CHECK(ld.iso_without_closed == 0);
    CHECK_THROWS_AS(decompose_levels(cycle_graph(5), 0), not_bipartite_error);
}

TEST_CASE("square: terms are 7, 5 and 2") {
    auto gi = goodness_terms(decompose_levels(cycle_graph(4), 0));
    CHECK(gi.lhs.to_integer() == 7);
    CHECK(gi.first.to_integer() == 5);
    CHECK(gi.second.to_integer() == 2);
    CHECK(gi.equality_expected);
    CHECK(is_good(cycle_graph(4), 0).result == outcome::equal);
}

TEST_CASE("isolated root is good with equality") {
    auto g = graph::from_edges(1, {});
    CHECK(is_good(g, 0).result == outcome::equal);
    CHECK(is_good_fullgraph(g, 0).result == outcome::equal);
}

TEST_CASE("leafy path: end vertex is not good, a better vertex exists") {
    auto g = leafy_path();
    auto v = is_good(g, 0);
    CHECK(v.result == outcome::strictly_less);
    CHECK(is_good_fullgraph(g, 0).result == outcome::strictly_less);
    // Whole-graph values: Pi(G) about 43.999 against about 44.050.
    auto full = is_good_fullgraph(g, 0);
    CHECK(std::stod(full.lhs_low) == doctest::Approx(43.9988).epsilon(1e-5));
    CHECK(std::stod(full.rhs_low) == doctest::Approx(44.0499).epsilon(1e-5));

    auto found = find_good_vertex(g);
    REQUIRE(found.found.has_value());
    CHECK(*found.found == 3);
    CHECK(found.trace.front().kind == probe_kind::max_degree);
}

TEST_CASE("probe order: minimum degree vertex and its neighbours") {
    // Star K_{1,3}: the centre is good at once.
    auto star = complete_bipartite(1, 3);
    auto s = find_good_vertex(star);
    REQUIRE(s.found);
    CHECK(s.trace.size() == 1);
    CHECK(find_good_vertex(graph{}).trace.empty());
}

TEST_CASE("non-bipartite probes use the whole-graph form") {
    auto s = find_good_vertex(cycle_graph(5));
    REQUIRE(s.found.has_value());
    CHECK(s.trace.front().v_result.holds());
}

TEST_CASE("bound reports") {
    auto k22 = check_kahn_bound(cycle_graph(4));
    CHECK(k22.independent_sets == 7);
    CHECK(k22.bound.result == outcome::equal);
    CHECK(k22.structural_equality);

    auto tri = check_kahn_bound(cycle_graph(3));
    CHECK(tri.independent_sets == 4);
    CHECK(tri.pi.to_string() == "7^(3/4)");
    CHECK(tri.bound.result == outcome::strictly_greater);
    CHECK_FALSE(tri.structural_equality);

    CHECK_THROWS_AS(check_kahn_bound(complete_bipartite(1, 6)), degree_bound_error);
}

TEST_CASE("local and whole-graph goodness agree on random bipartite graphs") {
    rng_type rng(5);
    for (int i = 0; i < 300; ++i) {
        auto g = random_bipartite_graph(rng, 1 + rng() % 11, 5, 0.5);
        vertex x = static_cast<vertex>(rng() % g.order());
        CHECK(is_good(g, x).result == is_good_fullgraph(g, x).result);
    }
}

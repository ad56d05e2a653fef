#include "doctest.h"

#include <set>

#include "kahn/graph.hpp"

using namespace kahn;

TEST_CASE("from_edges rejects loops, repeats and bad indices") {
    std::vector<edge> loop{{0, 0}};
    std::vector<edge> twice{{0, 1}, {1, 0}};
    std::vector<edge> far{{0, 3}};
    CHECK_THROWS_AS(graph::from_edges(2, loop), graph_error);
    CHECK_THROWS_AS(graph::from_edges(2, twice), graph_error);
    CHECK_THROWS_AS(graph::from_edges(3, far), graph_error);
}

TEST_CASE("degrees, isolated vertices and sorted edge list") {
    std::vector<edge> es{{2, 1}, {0, 1}};
    auto g = graph::from_edges(4, es);
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 0);
    CHECK(g.isolated_count() == 1);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edges() == std::vector<edge>{{0, 1}, {1, 2}});
}

TEST_CASE("vertex_set basics") {
    vertex_set s(130);
    CHECK(s.none());
    CHECK(s.first() == no_vertex);
    s.insert(129);
    s.insert(3);
    CHECK(s.count() == 2);
    CHECK(s.first() == 3);
    CHECK(s.members() == std::vector<vertex>{3, 129});
    s.erase(3);
    CHECK(s.first() == 129);
    CHECK(vertex_set(70, true).count() == 70);
}

TEST_CASE("closed deletion keeps the right vertices") {
    auto g = path_graph(5);
    auto parts = delete_closed(g, 2);
    CHECK(parts.without_vertex.g.order() == 4);
    CHECK(parts.without_vertex.g.size() == 2);
    CHECK(parts.without_neighborhood.g.order() == 2);
    CHECK(parts.without_neighborhood.g.size() == 0);
    for (vertex v = 0; v < parts.without_neighborhood.g.order(); ++v) {
        auto host = parts.without_neighborhood.host_of[v];
        CHECK((host == 0 || host == 4));
    }
}

TEST_CASE("components split a disjoint union") {
    auto g = disjoint_union(cycle_graph(4), path_graph(3));
    auto cs = components(g);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].g.order() + cs[1].g.order() == 7);
    CHECK(component_of(g, 5).count() == 3);
}

TEST_CASE("bipartition or odd cycle witness") {
    auto even = cycle_graph(6);
    auto r = find_bipartition(even);
    REQUIRE(std::holds_alternative<bipartition>(r));
    const auto& side = std::get<bipartition>(r).side;
    for (auto [u, v] : even.edges())
        CHECK(side[u] != side[v]);

    auto odd = disjoint_union(path_graph(2), cycle_graph(5));
    auto w = find_bipartition(odd);
    REQUIRE(std::holds_alternative<odd_cycle>(w));
    const auto& cyc = std::get<odd_cycle>(w).cycle;
    CHECK(cyc.size() % 2 == 1);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(odd.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    CHECK(std::set<vertex>(cyc.begin(), cyc.end()).size() == cyc.size());
}

TEST_CASE("double cover is bipartite with twice the order") {
    auto g = cycle_graph(5);
    auto t = tensor_k2(g);
    CHECK(t.order() == 10);
    CHECK(t.size() == 10);
    CHECK(is_bipartite(t));
    CHECK(t.adjacent(0, 1 + 5));
    CHECK_FALSE(t.adjacent(0, 1));
}

TEST_CASE("component classification") {
    auto g = disjoint_union(disjoint_union(complete_bipartite(2, 3), path_graph(1)), path_graph(4));
    CHECK(classify_component(g, 0) == component_kind::complete_bipartite);
    CHECK(classify_component(g, 5) == component_kind::isolated_vertex);
    CHECK(classify_component(g, 6) == component_kind::other);
    CHECK_FALSE(all_components_complete_bipartite(g));
    CHECK(all_components_complete_bipartite(disjoint_union(complete_bipartite(1, 1), path_graph(1))));
    CHECK_THROWS(complete_bipartite(0, 2));
}

TEST_CASE("edge-list parsing and errors") {
    auto g = parse_edge_list("# square\nn 4\n0 1\n1 2\n\n2 3\n3 0\n");
    CHECK(g == cycle_graph(4));
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);

    auto expect = [](std::string_view text, parse_error::kind k, std::size_t line) {
        try {
            parse_edge_list(text);
            FAIL("accepted malformed input");
        } catch (const parse_error& e) {
            CHECK(e.error_kind() == k);
            CHECK(e.line() == line);
        }
    };
    expect("0 1\n", parse_error::kind::missing_header, 1);
    expect("", parse_error::kind::missing_header, 1);
    expect("n 3\n0 x\n", parse_error::kind::malformed, 2);
    expect("n 3\n1 1\n", parse_error::kind::self_loop, 2);
    expect("n 3\n0 1\n1 2\n1 0\n", parse_error::kind::duplicate_edge, 4);
    expect("n 3\n0 3\n", parse_error::kind::out_of_range, 2);
}

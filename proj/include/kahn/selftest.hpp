#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kahn/graph.hpp"

namespace kahn {

using rng_type = std::mt19937_64;

// Random simple graph on n vertices: pairs in random order, each kept with
// probability p while both ends stay below max_degree.
graph random_graph(rng_type& rng, std::size_t n, std::size_t max_degree, double p);
// Same, but only pairs across a random two-colouring are offered.
graph random_bipartite_graph(rng_type& rng, std::size_t n, std::size_t max_degree, double p);
// Disjoint union of complete bipartite graphs and isolated vertices.
graph random_complete_bipartite_union(rng_type& rng, std::size_t max_n, std::size_t max_degree);

// The instance stream shared by the bound and double-cover suites.
std::vector<graph> small_graph_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                      std::size_t max_degree);

struct suite_result {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t undecided = 0;
    std::uint64_t equalities = 0;
    std::vector<std::string> examples; // first few offending instances
    double seconds = 0;

    bool pass() const { return instances > 0 && disagreements == 0 && undecided == 0; }
};

// Branching counter against brute force.
suite_result counting_suite(std::uint64_t seed, std::size_t count = 1000, std::size_t max_n = 16);
// ind(G) <= Pi(G), equality exactly on unions of complete bipartite graphs
// and isolated vertices.
suite_result kahn_bound_suite(std::uint64_t seed, std::size_t count = 10000, std::size_t max_n = 8,
                              std::size_t max_degree = 4);
// ind(G)^2 <= ind(G x K2), equality exactly for bipartite G.
suite_result double_cover_suite(std::uint64_t seed, std::size_t count = 10000, std::size_t max_n = 8,
                                std::size_t max_degree = 4);
// Local goodness test against the whole-graph products.
suite_result cancellation_suite(std::uint64_t seed, std::size_t count = 10000, std::size_t max_n = 12,
                                std::size_t max_degree = 5);

} // namespace kahn

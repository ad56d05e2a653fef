#include "doctest.h"

#include <random>

#include "kahn/indset.hpp"
#include "kahn/selftest.hpp"

using namespace kahn;

TEST_CASE("small closed forms") {
    CHECK(count_independent_sets(graph{}) == 1);
    CHECK(count_independent_sets(path_graph(1)) == 2);
    CHECK(count_independent_sets(path_graph(4)) == 8);
    CHECK(count_independent_sets(cycle_graph(6)) == 18);
    CHECK(count_independent_sets(cycle_graph(3)) == 4);
}

TEST_CASE("complete bipartite graphs") {
    for (std::size_t d = 1; d <= 6; ++d) {
        mpz_class expected = (mpz_class(1) << (d + 1)) - 1;
        CHECK(count_independent_sets(complete_bipartite(d, d)) == expected);
    }
    // 2^a + 2^b - 1 in general.
    CHECK(count_independent_sets(complete_bipartite(2, 5)) == 4 + 32 - 1);
}

TEST_CASE("paths follow the Fibonacci recurrence") {
    mpz_class a = 2, b = 3; // P1, P2
    for (std::size_t n = 3; n <= 60; ++n) {
        mpz_class c = a + b;
        CHECK(count_independent_sets(path_graph(n)) == c);
        a = b;
        b = c;
    }
}

TEST_CASE("agrees with brute force on random graphs") {
    rng_type rng(7);
    std::uniform_int_distribution<std::size_t> order(0, 14);
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(rng, order(rng), 14, 0.3);
        CHECK(count_independent_sets(g) == count_bruteforce(g));
    }
}

TEST_CASE("multiplicative over components") {
    auto g = disjoint_union(cycle_graph(5), complete_bipartite(2, 3));
    CHECK(count_independent_sets(g) == count_independent_sets(cycle_graph(5)) * 11);
}

TEST_CASE("node budget") {
    count_options tight;
    tight.node_budget = 3;
    CHECK_THROWS_AS(count_independent_sets(cycle_graph(30), tight), budget_exceeded);
    CHECK_THROWS(count_bruteforce(path_graph(31)));
}

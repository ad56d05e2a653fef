#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "kahn/good_vertex.hpp"
#include "kahn/regular.hpp"

using namespace kahn;

TEST_CASE("profiles for d = 1, 2, 3") {
    auto p1 = enumerate_profiles(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].k == 0);
    CHECK(p1[0].xs.empty());

    auto p2 = enumerate_profiles(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == regular_profile{2, 1, {0}});
    CHECK(p2[1] == regular_profile{2, 2, {1, 1}});

    auto p3 = enumerate_profiles(3);
    CHECK(p3.front() == regular_profile{3, 2, {0, 0}});
    CHECK(p3.back() == regular_profile{3, 6, {2, 2, 2, 2, 2, 2}});
    CHECK_THROWS(enumerate_profiles(6));
}

TEST_CASE("profiles satisfy their constraints, once each") {
    for (int d = 1; d <= 5; ++d) {
        auto ps = enumerate_profiles(d);
        for (const auto& p : ps) {
            CHECK((p.k >= d - 1 && p.k <= d * (d - 1)));
            CHECK(std::is_sorted(p.xs.rbegin(), p.xs.rend()));
            CHECK(std::accumulate(p.xs.begin(), p.xs.end(), 0) == p.k * d - d * (d - 1));
            for (int x : p.xs)
                CHECK((x >= 0 && x <= d - 1));
        }
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK_FALSE(ps[i] == ps[i - 1]);
    }
}

TEST_CASE("profile values") {
    auto a = check_profile({2, 1, {0}});
    CHECK(a.result == outcome::equal);
    CHECK(a.lhs_low == "4");
    auto b = check_profile({2, 2, {1, 1}});
    CHECK(b.result == outcome::strictly_greater);
    CHECK(b.lhs_low == "28");
    CHECK(b.rhs_low == "25");
    auto c = check_profile({5, 4, {0, 0, 0, 0}});
    CHECK(c.result == outcome::equal);
    CHECK(c.lhs_low == mpz_class(mpz_class(1) << 20).get_str());
    CHECK(check_profile({1, 0, {}}).result == outcome::equal);
}

TEST_CASE("regular verification") {
    for (int d = 1; d <= 5; ++d) {
        auto r = verify_regular(d);
        CHECK(r.pass);
        CHECK(r.equalities == 1);
        REQUIRE(r.equality_profiles.size() == 1);
        CHECK(r.equality_profiles[0].k == d - 1);
        CHECK(r.failing == 0);
    }
}

TEST_CASE("ratio monotonicity and the exchange step") {
    for (int d = 1; d <= 5; ++d)
        CHECK(check_g_ratio_monotone(d));
    CHECK(g_value(2, 2) * g_value(2, 0) == 28);
    CHECK(g_value(2, 1) * g_value(2, 1) == 25);
    // (1,1) -> (2,0) for d = 3.
    CHECK(g_value(3, 2) * g_value(3, 0) == 88);
    CHECK(g_value(3, 1) * g_value(3, 1) == 81);
    // Exchange for x_i >= x_j increases the product.
    for (int d = 2; d <= 5; ++d)
        for (int xi = 0; xi < d; ++xi)
            for (int xj = 1; xj <= xi; ++xj)
                CHECK(g_value(d, xi + 1) * g_value(d, xj - 1) > g_value(d, xi) * g_value(d, xj));
}

TEST_CASE("extremal string maximizes the product for fixed k and sum") {
    for (int d = 1; d <= 5; ++d) {
        std::map<int, mpz_class> best;
        for (const auto& p : enumerate_profiles(d)) {
            mpz_class prod = 1;
            for (int x : p.xs)
                prod *= g_value(d, x);
            auto& b = best[p.k];
            if (prod > b)
                b = prod;
        }
        for (auto& [k, prod] : best) {
            // (d, ..., d, 0, ..., 0) with k-(d-1) d's.
            mpz_class ext = 1;
            for (int i = 0; i < k; ++i)
                ext *= g_value(d, i < k - (d - 1) ? d : 0);
            CHECK(ext >= prod);
        }
    }
}

TEST_CASE("integer form agrees with the product form") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& p : enumerate_profiles(d)) {
            auto cfg = profile_config(p);
            CHECK(config_goodness(cfg).result == check_profile(p).result);
        }
}

TEST_CASE("concrete regular graphs") {
    for (std::size_t d = 1; d <= 4; ++d)
        CHECK(is_good(complete_bipartite(d, d), 0).result == outcome::equal);
    // Cube: three level-2 vertices, one level-3 neighbour each.
    std::vector<edge> cube;
    for (vertex v = 0; v < 8; ++v)
        for (vertex bit = 1; bit < 8; bit <<= 1)
            if (v < (v ^ bit))
                cube.emplace_back(v, v ^ bit);
    auto g = graph::from_edges(8, cube);
    CHECK(is_good(g, 0).result == check_profile({3, 3, {1, 1, 1}}).result);
    CHECK(is_good(g, 0).result == outcome::strictly_greater);
    // 8-cycle: two level-2 vertices each with one level-3 edge.
    CHECK(is_good(cycle_graph(8), 0).result == check_profile({2, 2, {1, 1}}).result);
}

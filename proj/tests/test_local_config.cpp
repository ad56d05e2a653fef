#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "kahn/config_enum.hpp"
#include "kahn/local_config.hpp"
#include "kahn/selftest.hpp"

using namespace kahn;

namespace {

local_config make(int delta, std::vector<std::uint8_t> degs, std::vector<level2_record> l2) {
    local_config c;
    c.delta_eff = delta;
    c.root_degree = static_cast<int>(degs.size());
    c.level1_degrees = std::move(degs);
    c.level2 = std::move(l2);
    return c;
}

factor_product f(int a, int b) { return factor_product::of_factor(a, b); }

// Brute-force isomorphism: some level-1 permutation maps one multiset of
// level-2 records onto the other.
bool isomorphic(const local_config& a, const local_config& b) {
    if (a.delta_eff != b.delta_eff || a.root_degree != b.root_degree || a.level2.size() != b.level2.size())
        return false;
    std::vector<int> p(static_cast<std::size_t>(a.root_degree));
    std::iota(p.begin(), p.end(), 0);
    auto sorted_b = b.level2;
    std::sort(sorted_b.begin(), sorted_b.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i)
            ok = a.level1_degrees[i] == b.level1_degrees[static_cast<std::size_t>(p[i])];
        if (!ok)
            continue;
        std::vector<level2_record> mapped;
        for (auto r : a.level2) {
            std::uint8_t m = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                if ((r.neighbors >> i) & 1)
                    m = static_cast<std::uint8_t>(m | (1u << p[i]));
            mapped.push_back({m, r.degree});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == sorted_b)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

local_config random_relabel(const local_config& c, rng_type& rng) {
    std::vector<int> perm(static_cast<std::size_t>(c.root_degree));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> order(c.level2.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return relabel(c, perm, order);
}

} // namespace

TEST_CASE("terms of a single padded level-3 edge") {
    auto c = make(5, {2}, {{1, 2}});
    auto gi = config_terms(c);
    CHECK(gi.lhs == f(1, 2) * f(2, 2) * f(2, 5));
    CHECK(gi.first == f(1, 2) * f(2, 5));
    CHECK(gi.second == f(1, 5));
    CHECK_FALSE(gi.equality_expected);
}

TEST_CASE("no level 3: padding is vacuous and isolated vertices count") {
    // Root of degree 1 whose neighbour has two leaf neighbours.
    auto c = make(5, {3}, {{1, 1}, {1, 1}});
    CHECK_FALSE(has_level3(c));
    auto gi = config_terms(c);
    CHECK(gi.second == factor_product::power_of_two(2));
    CHECK(gi.first == f(2, 1) * f(2, 1));
}

TEST_CASE("small verdicts") {
    CHECK(config_goodness(make(2, {2, 2}, {{3, 2}})).result == outcome::equal);
    CHECK(config_goodness(make(0, {}, {})).result == outcome::equal);
    CHECK(config_goodness(make(1, {1}, {})).result == outcome::equal);
    // Leafy path: root, neighbour of degree 2, then a degree-4 vertex.
    CHECK(config_goodness(make(4, {2}, {{1, 2}})).result == outcome::strictly_less);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate_config(make(5, {2}, {})), config_error);          // missing upward edge
    CHECK_THROWS_AS(validate_config(make(5, {2}, {{1, 2}, {1, 2}})), config_error);
    CHECK_THROWS_AS(validate_config(make(5, {2}, {{0, 2}})), config_error);    // empty mask
    CHECK_THROWS_AS(validate_config(make(5, {2}, {{2, 2}})), config_error);    // names vertex 1
    CHECK_THROWS_AS(validate_config(make(5, {2, 2}, {{3, 1}})), config_error); // degree below multiplicity
    CHECK_THROWS_AS(validate_config(make(0, {2}, {{1, 2}})), config_error);    // no padding degree
    CHECK_NOTHROW(validate_config(make(5, {2, 1}, {{1, 3}})));
}

TEST_CASE("canonical form: symmetric relabels agree, different degrees differ") {
    auto a = make(5, {3, 3}, {{1, 2}, {1, 3}, {2, 4}, {2, 2}});
    auto b = make(5, {3, 3}, {{2, 2}, {2, 3}, {1, 4}, {1, 2}});
    CHECK(canonical(a) == canonical(b));
    auto c = make(5, {3, 3}, {{2, 2}, {2, 3}, {1, 5}, {1, 2}});
    CHECK(canonical(a) != canonical(c));
    CHECK(from_canonical(canonical(a)).level2.size() == 4);
    CHECK(isomorphic(from_canonical(canonical(a)), a));
    CHECK_THROWS(from_canonical(canonical_form{{5, 1}}));
}

TEST_CASE("canonical form: random relabel round trip") {
    rng_type rng(3);
    std::vector<local_config> pool;
    for (int d0 = 1; d0 <= 4; ++d0)
        for (const auto& c : collect_configs(min_degree_space(d0, d0 + 1)))
            pool.push_back(c);
    REQUIRE(pool.size() > 100);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        const auto& c = pool[pick(rng)];
        auto r = random_relabel(c, rng);
        auto form = canonical(r);
        REQUIRE(form == canonical(c));
        if (i % 100 == 0)
            CHECK(isomorphic(from_canonical(form), r));
    }
}

TEST_CASE("canonical form collisions are isomorphisms") {
    // Random labelled configs over a small space; equal forms must come with
    // an explicit mapping, distinct forms with none.
    rng_type rng(17);
    std::vector<local_config> sample;
    for (int i = 0; i < 300; ++i) {
        auto g = random_bipartite_graph(rng, 4 + rng() % 6, 3, 0.6);
        vertex x = static_cast<vertex>(rng() % g.order());
        sample.push_back(extract_config(g, x, 3));
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < std::min(sample.size(), i + 20); ++j)
            CHECK((canonical(sample[i]) == canonical(sample[j])) == isomorphic(sample[i], sample[j]));
}

TEST_CASE("realize and extract round trip") {
    for (const auto& c : collect_configs(max_degree_space(3))) {
        auto rg = realize(c);
        auto back = extract_config(rg.g, rg.root, c.delta_eff);
        CHECK(canonical(back) == canonical(c));
        CHECK(is_good(rg.g, rg.root).result == config_goodness(c).result);
    }
}

TEST_CASE("padded local model agrees with padded graphs") {
    rng_type rng(23);
    for (int i = 0; i < 2000; ++i) {
        auto g = random_bipartite_graph(rng, 2 + rng() % 14, 5, 0.4);
        vertex x = static_cast<vertex>(rng() % g.order());
        auto cfg = extract_config(g, x, 5);
        auto padded = pad_level3(g, x, 5);
        auto local = config_goodness(cfg);
        CHECK(local.result == is_good(padded.g, padded.root).result);
        // Padding only makes goodness harder.
        if (local.holds())
            CHECK(is_good(g, x).holds());
        if (local.result == outcome::equal)
            CHECK(classify_component(g, x) != component_kind::other);
    }
}

TEST_CASE("padding hangs leaves on level-3 vertices only") {
    std::vector<edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    auto g = graph::from_edges(6, es);
    auto p = pad_level3(g, 0, 5);
    CHECK(p.g.degree(p.root) == 1);
    CHECK(p.g.order() == 5 + 3); // vertex 5 dropped, three leaves added
    CHECK(p.g.max_degree() == 5);
}

TEST_CASE("describe mentions the structure") {
    auto s = describe(make(5, {2}, {{1, 2}}));
    CHECK(s.find("level-1 degrees [2]") != std::string::npos);
    CHECK(s.find("padding 5") != std::string::npos);
}

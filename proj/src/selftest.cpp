#include "kahn/selftest.hpp"

#include <algorithm>
#include <chrono>

#include "kahn/good_vertex.hpp"
#include "kahn/indset.hpp"

namespace kahn {

namespace {

graph random_from_pairs(rng_type& rng, std::size_t n, std::size_t max_degree, double p,
                        const std::vector<edge>& pairs) {
    auto order = pairs;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution keep(p);
    std::vector<std::size_t> deg(n, 0);
    std::vector<edge> es;
    for (auto [u, v] : order) {
        if (deg[u] >= max_degree || deg[v] >= max_degree || !keep(rng))
            continue;
        ++deg[u];
        ++deg[v];
        es.emplace_back(u, v);
    }
    return graph::from_edges(n, es);
}

std::string brief(const graph& g) {
    std::string s = "n=" + std::to_string(g.order()) + " E={";
    for (auto [u, v] : g.edges())
        s += std::to_string(u) + "-" + std::to_string(v) + " ";
    return s + "}";
}

void note(suite_result& r, const std::string& what) {
    ++r.disagreements;
    if (r.examples.size() < 5)
        r.examples.push_back(what);
}

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t) { return std::chrono::duration<double>(clock_type::now() - t).count(); }

} // namespace

graph random_graph(rng_type& rng, std::size_t n, std::size_t max_degree, double p) {
    std::vector<edge> pairs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return random_from_pairs(rng, n, max_degree, p, pairs);
}

graph random_bipartite_graph(rng_type& rng, std::size_t n, std::size_t max_degree, double p) {
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> side(n);
    for (auto&& s : side)
        s = coin(rng);
    std::vector<edge> pairs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (side[u] != side[v])
                pairs.emplace_back(u, v);
    return random_from_pairs(rng, n, max_degree, p, pairs);
}

graph random_complete_bipartite_union(rng_type& rng, std::size_t max_n, std::size_t max_degree) {
    std::vector<edge> es;
    std::size_t n = 0;
    std::uniform_int_distribution<std::size_t> part(0, max_degree);
    while (n < max_n) {
        std::size_t a = part(rng), b = part(rng);
        if (a == 0 || b == 0) {
            ++n; // isolated vertex
            continue;
        }
        if (n + a + b > max_n)
            break;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                es.emplace_back(static_cast<vertex>(n + i), static_cast<vertex>(n + a + j));
        n += a + b;
    }
    return graph::from_edges(std::max<std::size_t>(n, 1), es);
}

std::vector<graph> small_graph_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                      std::size_t max_degree) {
    rng_type rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_n);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::uniform_int_distribution<int> kind(0, 7);
    std::vector<graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        switch (kind(rng)) {
        case 0: out.push_back(random_complete_bipartite_union(rng, max_n, max_degree)); break;
        case 1:
        case 2: out.push_back(random_bipartite_graph(rng, order(rng), max_degree, density(rng))); break;
        default: out.push_back(random_graph(rng, order(rng), max_degree, density(rng))); break;
        }
    }
    return out;
}

suite_result counting_suite(std::uint64_t seed, std::size_t count, std::size_t max_n) {
    auto start = clock_type::now();
    suite_result r;
    r.name = "counting";
    rng_type rng(seed);
    std::uniform_int_distribution<std::size_t> order(0, max_n);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (std::size_t i = 0; i < count; ++i) {
        graph g = random_graph(rng, order(rng), max_n, density(rng));
        ++r.instances;
        if (count_independent_sets(g) != count_bruteforce(g))
            note(r, brief(g));
    }
    r.seconds = since(start);
    return r;
}

suite_result kahn_bound_suite(std::uint64_t seed, std::size_t count, std::size_t max_n, std::size_t max_degree) {
    auto start = clock_type::now();
    suite_result r;
    r.name = "kahn_bound";
    for (const auto& g : small_graph_corpus(seed, count, max_n, max_degree)) {
        ++r.instances;
        auto rep = check_kahn_bound(g, max_degree);
        if (rep.bound.result == outcome::undecided) {
            ++r.undecided;
            continue;
        }
        if (rep.bound.result == outcome::equal)
            ++r.equalities;
        if (!rep.bound.holds())
            note(r, "bound fails: " + brief(g));
        else if ((rep.bound.result == outcome::equal) != rep.structural_equality)
            note(r, "equality mismatch: " + brief(g));
    }
    r.seconds = since(start);
    return r;
}

suite_result double_cover_suite(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                std::size_t max_degree) {
    auto start = clock_type::now();
    suite_result r;
    r.name = "double_cover";
    for (const auto& g : small_graph_corpus(seed, count, max_n, max_degree)) {
        ++r.instances;
        mpz_class a = count_independent_sets(g);
        mpz_class b = count_independent_sets(tensor_k2(g));
        int c = cmp(a * a, b);
        if (c == 0)
            ++r.equalities;
        if (c > 0)
            note(r, "inequality fails: " + brief(g));
        else if ((c == 0) != is_bipartite(g))
            note(r, "equality mismatch: " + brief(g));
    }
    r.seconds = since(start);
    return r;
}

suite_result cancellation_suite(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                std::size_t max_degree) {
    auto start = clock_type::now();
    suite_result r;
    r.name = "cancellation";
    rng_type rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, max_n);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::uniform_int_distribution<int> kind(0, 9);
    for (std::size_t i = 0; i < count; ++i) {
        graph g = kind(rng) == 0 ? random_complete_bipartite_union(rng, max_n, max_degree)
                                 : random_bipartite_graph(rng, order(rng), max_degree, density(rng));
        std::uniform_int_distribution<vertex> pick(0, static_cast<vertex>(g.order() - 1));
        vertex x = pick(rng);
        ++r.instances;
        verdict local = is_good(g, x, {}, max_degree);
        verdict full = is_good_fullgraph(g, x, {}, max_degree);
        if (local.result == outcome::undecided || full.result == outcome::undecided)
            ++r.undecided;
        if (local.result == outcome::equal)
            ++r.equalities;
        if (local.result != full.result)
            note(r, "root " + std::to_string(x) + " local " + std::string(to_string(local.result)) + " full " +
                        std::string(to_string(full.result)) + ": " + brief(g));
    }
    r.seconds = since(start);
    return r;
}

} // namespace kahn

#include "kahn/good_vertex.hpp"

#include <algorithm>
#include <queue>

#include "kahn/indset.hpp"

namespace kahn {

level_decomposition decompose_levels(const graph& g, vertex x) {
    if (x >= g.order())
        throw graph_error("vertex " + std::to_string(x) + " out of range");
    level_decomposition ld;
    ld.root = x;
    ld.level.assign(g.order(), -1);
    ld.degree.resize(g.order());
    ld.level1_count.assign(g.order(), 0);
    for (vertex v = 0; v < g.order(); ++v)
        ld.degree[v] = g.degree(v);

    std::queue<vertex> q;
    ld.level[x] = 0;
    q.push(x);
    while (!q.empty()) {
        vertex u = q.front();
        q.pop();
        for (vertex v : g.neighbors(u)) {
            if (ld.level[v] < 0) {
                ld.level[v] = ld.level[u] + 1;
                q.push(v);
            } else if (ld.level[v] == ld.level[u]) {
                throw not_bipartite_error("component of vertex " + std::to_string(x) + " has an odd cycle");
            }
        }
    }

    for (auto [a, b] : g.edges()) {
        int la = ld.level[a], lb = ld.level[b];
        if (la < 0)
            continue;
        vertex lo = la < lb ? a : b;
        vertex hi = la < lb ? b : a;
        switch (std::min(la, lb)) {
        case 0: ld.e01.emplace_back(lo, hi); break;
        case 1:
            ld.e12.emplace_back(lo, hi);
            ++ld.level1_count[hi];
            break;
        case 2: ld.e23.emplace_back(lo, hi); break;
        default: break;
        }
    }

    ld.iso_component = g.degree(x) == 0 ? 1 : 0;
    for (vertex v = 0; v < g.order(); ++v) {
        if (ld.level[v] == 1 && g.degree(v) == 1)
            ++ld.iso_without_root;
        if (ld.level[v] == 2 && g.degree(v) == ld.level1_count[v])
            ++ld.iso_without_closed;
    }
    ld.kind = classify_component(g, x);
    return ld;
}

goodness_instance goodness_terms(const level_decomposition& ld) {
    auto deg = [&](vertex v) { return static_cast<int>(ld.degree[v]); };
    goodness_instance gi;
    gi.lhs = factor_product::power_of_two(static_cast<std::int64_t>(ld.iso_component));
    gi.first = factor_product::power_of_two(static_cast<std::int64_t>(ld.iso_without_root));
    gi.second = factor_product::power_of_two(static_cast<std::int64_t>(ld.iso_without_closed));
    for (auto [u, v] : ld.e01)
        gi.lhs.multiply_factor(deg(u), deg(v));
    for (auto [u, v] : ld.e12) {
        gi.lhs.multiply_factor(deg(u), deg(v));
        gi.first.multiply_factor(deg(u) - 1, deg(v));
    }
    for (auto [u, v] : ld.e23) {
        gi.lhs.multiply_factor(deg(u), deg(v));
        gi.first.multiply_factor(deg(u), deg(v));
        gi.second.multiply_factor(deg(u) - static_cast<int>(ld.level1_count[u]), deg(v));
    }
    gi.equality_expected = ld.kind != component_kind::other;
    return gi;
}

namespace {

void check_degree(const graph& g, std::size_t max_degree) {
    if (g.max_degree() > max_degree)
        throw degree_bound_error("maximum degree " + std::to_string(g.max_degree()) + " exceeds bound " +
                                 std::to_string(max_degree));
}

} // namespace

verdict is_good(const graph& g, vertex x, const certify_options& opts, std::size_t max_degree) {
    check_degree(g, max_degree);
    auto gi = goodness_terms(decompose_levels(g, x));
    return certify_sum_inequality(gi.lhs, gi.first, gi.second, gi.equality_expected, opts);
}

verdict is_good_fullgraph(const graph& g, vertex x, const certify_options& opts, std::size_t max_degree) {
    auto parts = delete_closed(g, x);
    auto a = pi_product(g, max_degree);
    auto b = pi_product(parts.without_vertex.g, max_degree);
    auto c = pi_product(parts.without_neighborhood.g, max_degree);
    bool expected = classify_component(g, x) != component_kind::other;
    return certify_sum_inequality(a, b, c, expected, opts);
}

std::string_view to_string(probe_kind k) {
    switch (k) {
    case probe_kind::max_degree: return "max_degree";
    case probe_kind::min_degree: return "min_degree";
    case probe_kind::min_degree_neighbor: return "min_degree_neighbor";
    }
    return "max_degree";
}

good_vertex_search find_good_vertex(const graph& g, const certify_options& opts) {
    good_vertex_search out;
    if (g.empty())
        return out;

    vertex top = 0, bottom = 0;
    for (vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) > g.degree(top))
            top = v;
        if (g.degree(v) < g.degree(bottom))
            bottom = v;
    }

    std::vector<std::pair<vertex, probe_kind>> order{{top, probe_kind::max_degree},
                                                     {bottom, probe_kind::min_degree}};
    for (vertex w : g.neighbors(bottom))
        order.emplace_back(w, probe_kind::min_degree_neighbor);

    std::vector<bool> tried(g.order(), false);
    for (auto [v, kind] : order) {
        if (tried[v])
            continue;
        tried[v] = true;
        // The level form needs a bipartite component; otherwise compare the
        // whole-graph products directly.
        verdict res = is_bipartite(induced_subgraph(g, component_of(g, v)).g) ? is_good(g, v, opts)
                                                                               : is_good_fullgraph(g, v, opts);
        out.trace.push_back({v, kind, res});
        if (res.holds()) {
            out.found = v;
            break;
        }
    }
    return out;
}

kahn_report check_kahn_bound(const graph& g, std::size_t max_degree) {
    kahn_report r;
    r.independent_sets = count_independent_sets(g);
    r.pi = pi_product(g, max_degree);
    r.structural_equality = all_components_complete_bipartite(g);

    interval enclosure = r.pi.evaluate(128);
    r.pi_low = enclosure.lo_string();
    r.pi_high = enclosure.hi_string();

    verdict& v = r.bound;
    v.rhs_low = v.rhs_high = r.independent_sets.get_str();
    if (r.pi.is_integer()) {
        mpz_class pi = r.pi.to_integer();
        v.method = certification_method::exact;
        v.result = cmp(pi, r.independent_sets) > 0   ? outcome::strictly_greater
                   : cmp(pi, r.independent_sets) < 0 ? outcome::strictly_less
                                                     : outcome::equal;
        v.lhs_low = v.lhs_high = pi.get_str();
        return r;
    }

    interval ind = interval::exact(r.independent_sets, 128);
    v.lhs_low = r.pi_low;
    v.lhs_high = r.pi_high;
    v.precision_bits = 128;
    if (certainly_greater(enclosure, ind)) {
        v.method = certification_method::interval;
        v.result = outcome::strictly_greater;
        return r;
    }
    if (certainly_greater(ind, enclosure)) {
        v.method = certification_method::interval;
        v.result = outcome::strictly_less;
        return r;
    }
    // Pi^L = num / den exactly; compare against ind^L.
    std::int64_t L = r.pi.denominator_lcm();
    auto [num, den] = r.pi.cleared(L);
    mpz_class ind_power;
    mpz_pow_ui(ind_power.get_mpz_t(), r.independent_sets.get_mpz_t(), static_cast<unsigned long>(L));
    int c = cmp(num, ind_power * den);
    v.method = certification_method::exact;
    v.precision_bits = 0;
    v.result = c > 0 ? outcome::strictly_greater : (c < 0 ? outcome::strictly_less : outcome::equal);
    return r;
}

} // namespace kahn

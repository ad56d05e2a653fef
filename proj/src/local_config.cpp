#include "kahn/local_config.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kahn {

void validate_config(const local_config& cfg) {
    const int d0 = cfg.root_degree;
    if (d0 < 0 || d0 > max_config_root_degree)
        throw config_error("root degree out of range");
    if (static_cast<int>(cfg.level1_degrees.size()) != d0)
        throw config_error("level-1 degree list must have one entry per root neighbour");
    std::vector<int> up(static_cast<std::size_t>(d0), 0);
    for (const auto& r : cfg.level2) {
        if (r.neighbors == 0)
            throw config_error("level-2 vertex without level-1 neighbour");
        if (d0 < 8 && (r.neighbors >> d0) != 0)
            throw config_error("level-2 neighbour mask names a missing level-1 vertex");
        if (r.degree < r.multiplicity())
            throw config_error("level-2 degree below its level-1 multiplicity");
        if (r.level3_edges() > 0 && cfg.delta_eff < 1)
            throw config_error("level-3 edges need a positive padding degree");
        for (int u = 0; u < d0; ++u)
            if ((r.neighbors >> u) & 1)
                ++up[static_cast<std::size_t>(u)];
    }
    for (int u = 0; u < d0; ++u) {
        int deg = cfg.level1_degrees[static_cast<std::size_t>(u)];
        if (deg < 1)
            throw config_error("level-1 vertex degree must be positive");
        if (up[static_cast<std::size_t>(u)] != deg - 1)
            throw config_error("level-1 vertex " + std::to_string(u) + " has " +
                               std::to_string(up[static_cast<std::size_t>(u)]) + " level-2 neighbours, expected " +
                               std::to_string(deg - 1));
    }
}

bool has_level3(const local_config& cfg) {
    return std::any_of(cfg.level2.begin(), cfg.level2.end(), [](const auto& r) { return r.level3_edges() > 0; });
}

bool is_complete_bipartite_config(const local_config& cfg) {
    if (cfg.root_degree == 0)
        return true;
    const auto full = static_cast<std::uint8_t>((1u << cfg.root_degree) - 1);
    const auto l2 = static_cast<int>(cfg.level2.size());
    for (const auto& r : cfg.level2)
        if (r.neighbors != full || r.level3_edges() != 0)
            return false;
    return std::all_of(cfg.level1_degrees.begin(), cfg.level1_degrees.end(),
                       [&](int d) { return d == l2 + 1; });
}

goodness_instance config_terms(const local_config& cfg) {
    const int d0 = cfg.root_degree;
    goodness_instance gi;
    gi.lhs = factor_product::power_of_two(d0 == 0 ? 1 : 0);
    std::int64_t leaves = std::count(cfg.level1_degrees.begin(), cfg.level1_degrees.end(), 1);
    gi.first = factor_product::power_of_two(leaves);
    std::int64_t closed_isolated = 0;
    for (int deg : cfg.level1_degrees)
        gi.lhs.multiply_factor(d0, deg);
    for (const auto& r : cfg.level2) {
        for (int u = 0; u < d0; ++u) {
            if ((r.neighbors >> u) & 1) {
                int deg = cfg.level1_degrees[static_cast<std::size_t>(u)];
                gi.lhs.multiply_factor(deg, r.degree);
                gi.first.multiply_factor(deg - 1, r.degree);
            }
        }
        const int t = r.level3_edges();
        if (t > 0) {
            gi.lhs.multiply_factor(r.degree, cfg.delta_eff, t);
            gi.first.multiply_factor(r.degree, cfg.delta_eff, t);
            gi.second.multiply_factor(t, cfg.delta_eff, t);
        } else {
            ++closed_isolated;
        }
    }
    gi.second *= factor_product::power_of_two(closed_isolated);
    gi.equality_expected = is_complete_bipartite_config(cfg);
    return gi;
}

verdict config_goodness(const local_config& cfg, const certify_options& opts) {
    auto gi = config_terms(cfg);
    return certify_sum_inequality(gi.lhs, gi.first, gi.second, gi.equality_expected, opts);
}

// ------------------------------------------------------------- canonical form

namespace {

// Global order on (mask, degree) types: larger masks (by popcount) first,
// then mask value, then degree.
bool type_before(level2_record a, level2_record b) {
    if (a.multiplicity() != b.multiplicity())
        return a.multiplicity() > b.multiplicity();
    if (a.neighbors != b.neighbors)
        return a.neighbors < b.neighbors;
    return a.degree < b.degree;
}

std::uint8_t permute_mask(std::uint8_t mask, const std::vector<int>& perm) {
    std::uint8_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((mask >> i) & 1)
            out = static_cast<std::uint8_t>(out | (1u << perm[i]));
    return out;
}

// The records in type order; comparing these sequences lexicographically
// with "earlier type wins" is the count-vector order used for canonical
// representatives.
std::vector<level2_record> sorted_records(std::vector<level2_record> recs) {
    std::sort(recs.begin(), recs.end(), type_before);
    return recs;
}

// Count-vector comparison: a beats b if at the first type where the counts
// differ, a has more copies.
bool count_vector_greater(const std::vector<level2_record>& a, const std::vector<level2_record>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
        if (a[i] == b[i]) {
            ++i;
            continue;
        }
        // The sequence whose element comes earlier in type order has a larger
        // count at that type.
        return type_before(a[i], b[i]);
    }
    return a.size() > b.size();
}

} // namespace

local_config relabel(const local_config& cfg, const std::vector<int>& perm, const std::vector<int>& l2_order) {
    local_config out = cfg;
    for (std::size_t i = 0; i < perm.size(); ++i)
        out.level1_degrees[static_cast<std::size_t>(perm[i])] = cfg.level1_degrees[i];
    for (std::size_t i = 0; i < l2_order.size(); ++i) {
        auto r = cfg.level2[static_cast<std::size_t>(l2_order[i])];
        r.neighbors = permute_mask(r.neighbors, perm);
        out.level2[i] = r;
    }
    return out;
}

canonical_form canonical(const local_config& cfg) {
    const auto d0 = static_cast<std::size_t>(cfg.root_degree);
    // Sort level-1 vertices by non-increasing degree.
    std::vector<int> order(d0);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return cfg.level1_degrees[static_cast<std::size_t>(a)] > cfg.level1_degrees[static_cast<std::size_t>(b)];
    });
    std::vector<std::uint8_t> degs(d0);
    for (std::size_t i = 0; i < d0; ++i)
        degs[i] = cfg.level1_degrees[static_cast<std::size_t>(order[i])];

    // pos[k]: sorted position that old vertex order[k] goes to, composed with
    // every degree-preserving permutation of positions.
    std::vector<int> slot(d0);
    std::iota(slot.begin(), slot.end(), 0);
    std::vector<level2_record> best;
    bool have = false;
    do {
        bool preserves = true;
        for (std::size_t i = 0; i < d0 && preserves; ++i)
            preserves = degs[static_cast<std::size_t>(slot[i])] == degs[i];
        if (!preserves)
            continue;
        std::vector<int> perm(d0);
        for (std::size_t i = 0; i < d0; ++i)
            perm[static_cast<std::size_t>(order[i])] = slot[i];
        std::vector<level2_record> recs;
        recs.reserve(cfg.level2.size());
        for (auto r : cfg.level2) {
            r.neighbors = permute_mask(r.neighbors, perm);
            recs.push_back(r);
        }
        recs = sorted_records(std::move(recs));
        if (!have || count_vector_greater(recs, best)) {
            best = std::move(recs);
            have = true;
        }
    } while (std::next_permutation(slot.begin(), slot.end()));

    canonical_form c;
    c.bytes.push_back(static_cast<std::uint8_t>(cfg.delta_eff));
    c.bytes.push_back(static_cast<std::uint8_t>(d0));
    c.bytes.insert(c.bytes.end(), degs.begin(), degs.end());
    c.bytes.push_back(static_cast<std::uint8_t>(best.size()));
    for (auto r : best) {
        c.bytes.push_back(r.neighbors);
        c.bytes.push_back(r.degree);
    }
    return c;
}

local_config from_canonical(const canonical_form& c) {
    const auto& b = c.bytes;
    if (b.size() < 3)
        throw config_error("truncated canonical form");
    local_config cfg;
    cfg.delta_eff = b[0];
    cfg.root_degree = b[1];
    std::size_t i = 2;
    const auto d0 = static_cast<std::size_t>(cfg.root_degree);
    if (b.size() < i + d0 + 1)
        throw config_error("truncated canonical form");
    cfg.level1_degrees.assign(b.begin() + static_cast<std::ptrdiff_t>(i),
                              b.begin() + static_cast<std::ptrdiff_t>(i + d0));
    i += d0;
    const std::size_t n2 = b[i++];
    if (b.size() != i + 2 * n2)
        throw config_error("canonical form length mismatch");
    for (std::size_t k = 0; k < n2; ++k, i += 2)
        cfg.level2.push_back({b[i], b[i + 1]});
    validate_config(cfg);
    return cfg;
}

std::string canonical_form::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto byte : bytes) {
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 15]);
    }
    return s;
}

std::size_t canonical_form_hash::operator()(const canonical_form& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto byte : c.bytes)
        h = (h ^ byte) * 1099511628211ull;
    return h;
}

// ------------------------------------------------------- graph round trips

local_config extract_config(const graph& g, vertex x, int delta_eff) {
    auto ld = decompose_levels(g, x);
    local_config cfg;
    cfg.delta_eff = delta_eff;
    cfg.root_degree = static_cast<int>(g.degree(x));
    if (cfg.root_degree > max_config_root_degree)
        throw config_error("root degree too large for a local configuration");
    std::vector<int> index(g.order(), -1);
    int k = 0;
    for (vertex u : g.neighbors(x)) {
        index[u] = k++;
        cfg.level1_degrees.push_back(static_cast<std::uint8_t>(g.degree(u)));
    }
    for (vertex v = 0; v < g.order(); ++v) {
        if (ld.level[v] != 2)
            continue;
        level2_record r;
        r.degree = static_cast<std::uint8_t>(g.degree(v));
        for (vertex u : g.neighbors(v))
            if (ld.level[u] == 1)
                r.neighbors = static_cast<std::uint8_t>(r.neighbors | (1u << index[u]));
        cfg.level2.push_back(r);
    }
    return cfg;
}

rooted_graph realize(const local_config& cfg) {
    validate_config(cfg);
    std::vector<edge> es;
    vertex next = 1;
    const auto d0 = static_cast<vertex>(cfg.root_degree);
    for (vertex u = 0; u < d0; ++u)
        es.emplace_back(0, 1 + u);
    next = 1 + d0;
    for (const auto& r : cfg.level2) {
        vertex v = next++;
        for (vertex u = 0; u < d0; ++u)
            if ((r.neighbors >> u) & 1)
                es.emplace_back(1 + u, v);
        for (int t = 0; t < r.level3_edges(); ++t) {
            vertex w = next++;
            es.emplace_back(v, w);
            for (int leaf = 1; leaf < cfg.delta_eff; ++leaf)
                es.emplace_back(w, next++);
        }
    }
    return {graph::from_edges(next, es), 0};
}

rooted_graph pad_level3(const graph& g, vertex x, int delta) {
    auto ld = decompose_levels(g, x);
    vertex_set keep(g.order());
    for (vertex v = 0; v < g.order(); ++v)
        if (ld.level[v] >= 0 && ld.level[v] <= 4)
            keep.insert(v);
    auto sub = induced_subgraph(g, keep);
    auto es = sub.g.edges();
    vertex next = static_cast<vertex>(sub.g.order());
    for (vertex v = 0; v < sub.g.order(); ++v) {
        if (ld.level[sub.host_of[v]] != 3)
            continue;
        if (static_cast<int>(sub.g.degree(v)) > delta)
            throw degree_bound_error("level-3 vertex already exceeds the padding degree");
        for (auto d = static_cast<int>(sub.g.degree(v)); d < delta; ++d)
            es.emplace_back(v, next++);
    }
    return {graph::from_edges(next, es), sub.local_of[x]};
}

std::string describe(const local_config& cfg) {
    std::ostringstream out;
    out << "root degree " << cfg.root_degree << "; level-1 degrees [";
    for (std::size_t i = 0; i < cfg.level1_degrees.size(); ++i)
        out << (i ? "," : "") << int(cfg.level1_degrees[i]);
    out << "]; level-2 {";
    for (std::size_t i = 0; i < cfg.level2.size(); ++i) {
        const auto& r = cfg.level2[i];
        out << (i ? ", " : "") << "N1=";
        bool first = true;
        for (int u = 0; u < cfg.root_degree; ++u)
            if ((r.neighbors >> u) & 1) {
                out << (first ? "" : "+") << u;
                first = false;
            }
        out << " deg " << int(r.degree);
    }
    out << "}; padding " << cfg.delta_eff;
    return out.str();
}

} // namespace kahn

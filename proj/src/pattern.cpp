#include "kahn/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kahn {

int leveled_graph::depth() const {
    return level.empty() ? -1 : *std::max_element(level.begin(), level.end());
}

std::vector<vertex> leveled_graph::at_level(int l) const {
    std::vector<vertex> out;
    for (vertex v = 0; v < level.size(); ++v)
        if (level[v] == l)
            out.push_back(v);
    return out;
}

leveled_graph make_leveled(graph g, vertex root) {
    if (root >= g.order())
        throw graph_error("root out of range");
    std::vector<int> level(g.order(), -1);
    std::queue<vertex> q;
    level[root] = 0;
    q.push(root);
    while (!q.empty()) {
        vertex u = q.front();
        q.pop();
        for (vertex v : g.neighbors(u))
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
    }
    if (std::find(level.begin(), level.end(), -1) != level.end())
        throw graph_error("leveled graph must be connected");
    return {std::move(g), root, std::move(level)};
}

namespace {

// Colour refinement seeded by (level, degree); colours are ranks of
// invariant signatures, so they are themselves invariant.
std::vector<int> refined_colours(const leveled_graph& lg) {
    const auto n = lg.g.order();
    std::vector<int> colour(n);
    {
        std::vector<std::pair<int, std::size_t>> sig(n);
        for (vertex v = 0; v < n; ++v)
            sig[v] = {lg.level[v], lg.g.degree(v)};
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (vertex v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (vertex v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (vertex w : lg.g.neighbors(v))
                nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (vertex v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        int before = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end());
        int after = next.empty() ? 0 : *std::max_element(next.begin(), next.end());
        colour = std::move(next);
        if (after == before)
            return colour;
    }
}

} // namespace

leveled_canonical canonicalize(const leveled_graph& lg) {
    const auto n = lg.g.order();
    auto colour = refined_colours(lg);
    // Classes in colour order; colour order refines level order because the
    // first signature component is the seed colour.
    std::map<int, std::vector<vertex>> classes;
    for (vertex v = 0; v < n; ++v)
        classes[colour[v]].push_back(v);
    std::vector<std::vector<vertex>> cls;
    double work = 1;
    for (auto& [c, vs] : classes) {
        cls.push_back(vs);
        for (std::size_t k = 2; k <= vs.size(); ++k)
            work *= static_cast<double>(k);
    }
    if (work > 5e6)
        throw std::length_error("leveled graph too symmetric for brute-force canonicalization");

    std::vector<vertex> label(n);
    std::vector<edge> best;
    bool have = false;
    std::vector<edge> es = lg.g.edges();

    // Odometer over the per-class permutations.
    std::vector<std::vector<vertex>> perm = cls;
    for (auto& p : perm)
        std::sort(p.begin(), p.end());
    for (;;) {
        vertex next = 0;
        for (auto& p : perm)
            for (vertex v : p)
                label[v] = next++;
        std::vector<edge> cand;
        cand.reserve(es.size());
        for (auto [a, b] : es) {
            vertex x = label[a], y = label[b];
            cand.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(cand.begin(), cand.end());
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
        std::size_t i = 0;
        while (i < perm.size() && !std::next_permutation(perm[i].begin(), perm[i].end()))
            ++i;
        if (i == perm.size())
            break;
    }

    leveled_canonical out;
    out.level.resize(n);
    {
        vertex next = 0;
        for (auto& p : cls)
            for (vertex v : p)
                out.level[next++] = lg.level[v];
    }
    out.g = graph::from_edges(n, best);
    std::ostringstream key;
    key << n << ':';
    for (int l : out.level)
        key << l;
    key << ':';
    for (auto [a, b] : best)
        key << a << '-' << b << ',';
    out.key = key.str();
    return out;
}

std::vector<leveled_graph> level3_variants(const local_config& cfg) {
    validate_config(cfg);
    const auto k = cfg.level2.size();
    if (k > 12)
        throw config_error("too many level-2 vertices for level-3 expansion");
    std::vector<int> need(k);
    for (std::size_t i = 0; i < k; ++i)
        need[i] = cfg.level2[i].level3_edges();

    std::vector<edge> base;
    const auto d0 = static_cast<vertex>(cfg.root_degree);
    for (vertex u = 0; u < d0; ++u)
        base.emplace_back(0, 1 + u);
    const vertex first_l2 = 1 + d0;
    for (std::size_t i = 0; i < k; ++i)
        for (vertex u = 0; u < d0; ++u)
            if ((cfg.level2[i].neighbors >> u) & 1)
                base.emplace_back(1 + u, first_l2 + static_cast<vertex>(i));

    std::map<std::string, leveled_graph> found;
    std::vector<unsigned> chosen;
    // Level-3 neighbourhoods as a non-increasing sequence of masks.
    auto rec = [&](auto&& self, unsigned bound) -> void {
        unsigned support = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (need[i] > 0)
                support |= 1u << i;
        if (support == 0) {
            std::vector<edge> es = base;
            vertex next = first_l2 + static_cast<vertex>(k);
            for (unsigned s : chosen) {
                for (std::size_t i = 0; i < k; ++i)
                    if ((s >> i) & 1)
                        es.emplace_back(first_l2 + static_cast<vertex>(i), next);
                ++next;
            }
            auto lg = make_leveled(graph::from_edges(next, es), 0);
            auto key = canonicalize(lg).key;
            found.emplace(std::move(key), std::move(lg));
            return;
        }
        for (unsigned s = std::min(bound, support); s > 0; --s) {
            if ((s & ~support) != 0)
                continue;
            for (std::size_t i = 0; i < k; ++i)
                if ((s >> i) & 1)
                    --need[i];
            chosen.push_back(s);
            self(self, s);
            chosen.pop_back();
            for (std::size_t i = 0; i < k; ++i)
                if ((s >> i) & 1)
                    ++need[i];
        }
    };
    rec(rec, (1u << k) - 1);

    std::vector<leveled_graph> out;
    for (auto& [key, lg] : found)
        out.push_back(std::move(lg));
    return out;
}

leveled_graph ball_of_radius3(const graph& g, vertex root) {
    auto ld = decompose_levels(g, root);
    vertex_set keep(g.order());
    for (vertex v = 0; v < g.order(); ++v)
        if (ld.level[v] >= 0 && ld.level[v] <= 3)
            keep.insert(v);
    auto sub = induced_subgraph(g, keep);
    return make_leveled(std::move(sub.g), sub.local_of[root]);
}

namespace {

leveled_graph drawing(std::size_t n, std::vector<edge> es) {
    return make_leveled(graph::from_edges(n, es), 0);
}

std::vector<leveled_graph> build_references() {
    // Levels 0-2 shared by several drawings.
    const std::vector<edge> two_paths{{0, 1}, {0, 2}, {1, 3}, {2, 4}};
    const std::vector<edge> square_plus{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}};
    const std::vector<edge> k33_minus{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}};
    auto with = [](std::vector<edge> es, std::initializer_list<edge> more) {
        es.insert(es.end(), more);
        return es;
    };
    std::vector<leveled_graph> r;
    r.push_back(drawing(4, {{0, 1}, {1, 2}, {2, 3}}));
    r.push_back(drawing(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}}));
    r.push_back(drawing(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}}));
    r.push_back(drawing(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    r.push_back(drawing(9, with(two_paths, {{3, 5}, {3, 6}, {4, 7}, {4, 8}})));
    r.push_back(drawing(8, with(two_paths, {{3, 5}, {3, 6}, {4, 6}, {4, 7}})));
    r.push_back(drawing(7, with(two_paths, {{3, 5}, {4, 5}, {3, 6}, {4, 6}})));
    r.push_back(drawing(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
    r.push_back(drawing(6, with(square_plus, {{3, 5}})));
    r.push_back(drawing(7, with(square_plus, {{3, 5}, {4, 6}})));
    r.push_back(drawing(6, with(square_plus, {{3, 5}, {4, 5}})));
    r.push_back(drawing(7, with(k33_minus, {{4, 6}})));
    r.push_back(drawing(8, with(k33_minus, {{4, 6}, {5, 7}})));
    r.push_back(drawing(7, with(k33_minus, {{4, 6}, {5, 6}})));
    return r;
}

} // namespace

const std::vector<leveled_graph>& reference_appearances() {
    static const std::vector<leveled_graph> refs = build_references();
    return refs;
}

int match_reference(const leveled_graph& lg) {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> ks;
        for (const auto& r : reference_appearances())
            ks.push_back(canonicalize(r).key);
        return ks;
    }();
    auto key = canonicalize(lg).key;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key)
            return static_cast<int>(i) + 1;
    return 0;
}

std::string to_dot(const leveled_graph& lg, const std::string& name) {
    auto c = canonicalize(lg);
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=circle, width=0.25, fixedsize=true, label=\"\"];\n";
    const int depth = c.level.empty() ? -1 : *std::max_element(c.level.begin(), c.level.end());
    for (int l = 0; l <= depth; ++l) {
        out << "  { rank=" << (l == 0 ? "source" : "same") << ";";
        for (vertex v = 0; v < c.level.size(); ++v)
            if (c.level[v] == l)
                out << " v" << v << (l == 0 ? " [label=\"x\"]" : "") << ";";
        out << " }\n";
    }
    for (auto [a, b] : c.g.edges())
        out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace kahn

#include "kahn/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <queue>
#include <sstream>

namespace kahn {

graph graph::from_edges(std::size_t n, std::span<const edge> edges) {
    graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw graph_error("edge endpoint out of range");
        if (u == v)
            throw graph_error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw graph_error("duplicate edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

bool graph::adjacent(vertex u, vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::size_t graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_)
        best = std::max(best, list.size());
    return best;
}

std::size_t graph::min_degree() const {
    if (adj_.empty())
        return 0;
    std::size_t best = adj_.front().size();
    for (const auto& list : adj_)
        best = std::min(best, list.size());
    return best;
}

std::size_t graph::isolated_count() const {
    return static_cast<std::size_t>(
        std::count_if(adj_.begin(), adj_.end(), [](const auto& l) { return l.empty(); }));
}

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    out.reserve(edge_count_);
    for (vertex u = 0; u < adj_.size(); ++u)
        for (vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

vertex_set::vertex_set(std::size_t n, bool full) : n_(n), words_((n + 63) / 64, 0) {
    if (full) {
        for (vertex v = 0; v < n; ++v)
            insert(v);
    }
}

std::size_t vertex_set::count() const {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool vertex_set::none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

vertex vertex_set::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return static_cast<vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return no_vertex;
}

std::vector<vertex> vertex_set::members() const {
    std::vector<vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

relabeled_graph induced_subgraph(const graph& g, const vertex_set& keep) {
    relabeled_graph r;
    r.local_of.assign(g.order(), no_vertex);
    for (vertex v = 0; v < g.order(); ++v) {
        if (keep.contains(v)) {
            r.local_of[v] = static_cast<vertex>(r.host_of.size());
            r.host_of.push_back(v);
        }
    }
    std::vector<edge> es;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            es.emplace_back(r.local_of[u], r.local_of[v]);
    r.g = graph::from_edges(r.host_of.size(), es);
    return r;
}

closed_deletion delete_closed(const graph& g, vertex x) {
    if (x >= g.order())
        throw graph_error("vertex " + std::to_string(x) + " out of range");
    vertex_set keep(g.order(), true);
    keep.erase(x);
    closed_deletion out;
    out.without_vertex = induced_subgraph(g, keep);
    for (vertex u : g.neighbors(x))
        keep.erase(u);
    out.without_neighborhood = induced_subgraph(g, keep);
    return out;
}

vertex_set component_of(const graph& g, vertex x) {
    vertex_set seen(g.order());
    std::vector<vertex> stack{x};
    seen.insert(x);
    while (!stack.empty()) {
        vertex v = stack.back();
        stack.pop_back();
        for (vertex w : g.neighbors(v)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<relabeled_graph> components(const graph& g) {
    std::vector<relabeled_graph> out;
    vertex_set assigned(g.order());
    for (vertex v = 0; v < g.order(); ++v) {
        if (assigned.contains(v))
            continue;
        auto comp = component_of(g, v);
        for (vertex w : comp.members())
            assigned.insert(w);
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

std::variant<bipartition, odd_cycle> find_bipartition(const graph& g) {
    const std::size_t n = g.order();
    std::vector<int> depth(n, -1);
    std::vector<vertex> parent(n, no_vertex);
    for (vertex s = 0; s < n; ++s) {
        if (depth[s] >= 0)
            continue;
        depth[s] = 0;
        std::queue<vertex> q;
        q.push(s);
        while (!q.empty()) {
            vertex u = q.front();
            q.pop();
            for (vertex v : g.neighbors(u)) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if ((depth[v] - depth[u]) % 2 == 0) {
                    // Same parity: walk both ends up to their common ancestor.
                    std::vector<vertex> up_u{u}, up_v{v};
                    vertex a = u, b = v;
                    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_v.push_back(b = parent[b]);
                    }
                    odd_cycle c;
                    c.cycle = up_u;
                    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it)
                        c.cycle.push_back(*it);
                    return c;
                }
            }
        }
    }
    bipartition b;
    b.side.resize(n);
    for (vertex v = 0; v < n; ++v)
        b.side[v] = static_cast<std::uint8_t>(depth[v] & 1);
    return b;
}

bool is_bipartite(const graph& g) {
    return std::holds_alternative<bipartition>(find_bipartition(g));
}

graph tensor_k2(const graph& g) {
    const auto n = static_cast<vertex>(g.order());
    std::vector<edge> es;
    for (auto [u, v] : g.edges()) {
        es.emplace_back(u, v + n);
        es.emplace_back(v, u + n);
    }
    return graph::from_edges(2 * g.order(), es);
}

component_kind classify_component(const graph& g, vertex x) {
    if (x >= g.order())
        throw graph_error("vertex " + std::to_string(x) + " out of range");
    if (g.degree(x) == 0)
        return component_kind::isolated_vertex;
    auto r = induced_subgraph(g, component_of(g, x));
    auto parts = find_bipartition(r.g);
    if (!std::holds_alternative<bipartition>(parts))
        return component_kind::other;
    const auto& side = std::get<bipartition>(parts).side;
    std::size_t a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    std::size_t b = side.size() - a;
    return r.g.size() == a * b ? component_kind::complete_bipartite : component_kind::other;
}

bool all_components_complete_bipartite(const graph& g) {
    for (const auto& c : components(g))
        if (classify_component(c.g, 0) == component_kind::other)
            return false;
    return true;
}

graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0)
        throw graph_error("complete_bipartite needs both sides non-empty");
    std::vector<edge> es;
    for (vertex u = 0; u < a; ++u)
        for (vertex v = 0; v < b; ++v)
            es.emplace_back(u, static_cast<vertex>(a + v));
    return graph::from_edges(a + b, es);
}

graph path_graph(std::size_t n) {
    std::vector<edge> es;
    for (vertex v = 0; v + 1 < n; ++v)
        es.emplace_back(v, v + 1);
    return graph::from_edges(n, es);
}

graph cycle_graph(std::size_t n) {
    if (n < 3)
        throw graph_error("cycle needs at least three vertices");
    std::vector<edge> es;
    for (vertex v = 0; v < n; ++v)
        es.emplace_back(v, static_cast<vertex>((v + 1) % n));
    return graph::from_edges(n, es);
}

graph disjoint_union(const graph& a, const graph& b) {
    auto es = a.edges();
    const auto shift = static_cast<vertex>(a.order());
    for (auto [u, v] : b.edges())
        es.emplace_back(u + shift, v + shift);
    return graph::from_edges(a.order() + b.order(), es);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_uint(std::string_view tok, std::uint64_t& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

} // namespace

graph parse_edge_list(std::istream& in) {
    using k = parse_error::kind;
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<edge> es;
    std::vector<std::pair<edge, std::size_t>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;
        if (!have_header) {
            std::uint64_t value = 0;
            if (toks.size() != 2 || toks[0] != "n" || !parse_uint(toks[1], value))
                throw parse_error(k::missing_header, lineno, "expected header 'n <count>'");
            n = static_cast<std::size_t>(value);
            have_header = true;
            continue;
        }
        std::uint64_t u = 0, v = 0;
        if (toks.size() != 2 || !parse_uint(toks[0], u) || !parse_uint(toks[1], v))
            throw parse_error(k::malformed, lineno, "expected '<u> <v>'");
        if (u >= n || v >= n)
            throw parse_error(k::out_of_range, lineno, "vertex index must be below " + std::to_string(n));
        if (u == v)
            throw parse_error(k::self_loop, lineno, "self-loop at vertex " + std::to_string(u));
        edge e{static_cast<vertex>(std::min(u, v)), static_cast<vertex>(std::max(u, v))};
        seen.emplace_back(e, lineno);
        es.push_back(e);
    }
    if (!have_header)
        throw parse_error(k::missing_header, lineno == 0 ? 1 : lineno, "missing header 'n <count>'");

    // Report the later occurrence of any repeated edge.
    std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t dup_line = 0;
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first && (dup_line == 0 || seen[i].second < dup_line))
            dup_line = seen[i].second;
    if (dup_line != 0)
        throw parse_error(k::duplicate_edge, dup_line, "duplicate edge");
    return graph::from_edges(n, es);
}

graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string serialize_edge_list(const graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace kahn

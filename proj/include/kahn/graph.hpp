#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kahn {

using vertex = std::uint32_t;
inline constexpr vertex no_vertex = std::numeric_limits<vertex>::max();

using edge = std::pair<vertex, vertex>;

class graph_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Undirected simple graph. Adjacency lists are sorted; values are immutable
// once built, so they can be shared freely between threads.
class graph {
  public:
    graph() = default;
    explicit graph(std::size_t n) : adj_(n) {}

    // Throws graph_error on self-loops, duplicate edges or out-of-range ends.
    static graph from_edges(std::size_t n, std::span<const edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const vertex> neighbors(vertex v) const { return adj_.at(v); }
    std::size_t degree(vertex v) const { return adj_.at(v).size(); }
    bool adjacent(vertex u, vertex v) const;

    std::size_t max_degree() const;
    std::size_t min_degree() const;
    std::size_t isolated_count() const;

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<edge> edges() const;

    friend bool operator==(const graph&, const graph&) = default;

  private:
    std::vector<std::vector<vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Membership over [0, n) of a fixed host graph.
class vertex_set {
  public:
    vertex_set() = default;
    explicit vertex_set(std::size_t n, bool full = false);

    std::size_t capacity() const { return n_; }
    bool contains(vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t count() const;
    bool none() const;
    vertex first() const;  // no_vertex when empty
    std::vector<vertex> members() const;

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// A subgraph with dense indices and the maps back to (and from) its host.
struct relabeled_graph {
    graph g;
    std::vector<vertex> host_of;  // new index -> host index
    std::vector<vertex> local_of; // host index -> new index, or no_vertex
};

relabeled_graph induced_subgraph(const graph& g, const vertex_set& keep);

struct closed_deletion {
    relabeled_graph without_vertex;       // G - x
    relabeled_graph without_neighborhood; // G - x - N(x)
};

closed_deletion delete_closed(const graph& g, vertex x);

std::vector<relabeled_graph> components(const graph& g);

// Vertices of the connected component containing x.
vertex_set component_of(const graph& g, vertex x);

struct bipartition {
    std::vector<std::uint8_t> side;
};

// Closed walk v0 v1 ... v_{k-1} (v_{k-1} adjacent to v0) with k odd.
struct odd_cycle {
    std::vector<vertex> cycle;
};

std::variant<bipartition, odd_cycle> find_bipartition(const graph& g);
bool is_bipartite(const graph& g);

// Bipartite double cover G x K2; (v, i) is vertex v + i * n.
graph tensor_k2(const graph& g);

enum class component_kind { isolated_vertex, complete_bipartite, other };

component_kind classify_component(const graph& g, vertex x);

// True iff every component is a single vertex or complete bipartite.
bool all_components_complete_bipartite(const graph& g);

// Constructors for standard families.
graph complete_bipartite(std::size_t a, std::size_t b);
graph path_graph(std::size_t n);
graph cycle_graph(std::size_t n);
graph disjoint_union(const graph& a, const graph& b);

// Edge-list text format: '#' comment lines, header "n <count>", then "u v"
// lines. Errors carry the 1-based line number.
class parse_error : public std::runtime_error {
  public:
    enum class kind { malformed, missing_header, self_loop, duplicate_edge, out_of_range };

    parse_error(kind k, std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(k), line_(line) {}

    kind error_kind() const { return kind_; }
    std::size_t line() const { return line_; }

  private:
    kind kind_;
    std::size_t line_;
};

graph parse_edge_list(std::istream& in);
graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const graph& g);

} // namespace kahn

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kahn/bound_algebra.hpp"
#include "kahn/certify.hpp"
#include "kahn/graph.hpp"

namespace kahn {

class not_bipartite_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// BFS layering of the component of a root x by edge distance.
struct level_decomposition {
    vertex root = 0;
    std::vector<int> level;                 // -1 outside the component
    std::vector<std::size_t> degree;        // degrees in the host graph
    std::vector<edge> e01, e12, e23;        // (lower level, upper level)
    std::vector<std::size_t> level1_count;  // d_{N(x)}(u), meaningful for level-2 u
    std::size_t iso_component = 0;          // iso(G')
    std::size_t iso_without_root = 0;       // iso(G' - x)
    std::size_t iso_without_closed = 0;     // iso(G' - x - N(x))
    component_kind kind = component_kind::other;
};

// Throws not_bipartite_error when x's component has an odd cycle.
level_decomposition decompose_levels(const graph& g, vertex x);

// The three sides of the local good-vertex inequality A >= B + C.
struct goodness_instance {
    factor_product lhs;   // A
    factor_product first; // B
    factor_product second;// C
    bool equality_expected = false;
};

goodness_instance goodness_terms(const level_decomposition& ld);

// Local test via the cancelled form; max_degree guards the factor table.
verdict is_good(const graph& g, vertex x, const certify_options& opts = {}, std::size_t max_degree = 5);

// Pi(G) >= Pi(G - x) + Pi(G - x - N(x)) evaluated on whole graphs.
verdict is_good_fullgraph(const graph& g, vertex x, const certify_options& opts = {}, std::size_t max_degree = 5);

enum class probe_kind { max_degree, min_degree, min_degree_neighbor };
std::string_view to_string(probe_kind k);

struct probe_record {
    vertex v;
    probe_kind kind;
    verdict v_result;
};

struct good_vertex_search {
    std::optional<vertex> found;
    std::vector<probe_record> trace;
};

// Probes a maximum-degree vertex, then a minimum-degree vertex v, then the
// neighbours of v; stops at the first certified good vertex. Probes in a
// non-bipartite component use the whole-graph form.
good_vertex_search find_good_vertex(const graph& g, const certify_options& opts = {});

// Comparison of Pi(G) (left) against ind(G) (right).
struct kahn_report {
    mpz_class independent_sets;
    factor_product pi;
    std::string pi_low, pi_high; // 128-bit enclosure of Pi(G)
    verdict bound;               // holds() means ind(G) <= Pi(G)
    bool structural_equality = false;
};

kahn_report check_kahn_bound(const graph& g, std::size_t max_degree = 5);

} // namespace kahn

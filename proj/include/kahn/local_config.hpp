#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kahn/certify.hpp"
#include "kahn/good_vertex.hpp"
#include "kahn/graph.hpp"

namespace kahn {

inline constexpr int max_config_root_degree = 8;

// A level-2 vertex: which level-1 vertices it sees, and its total degree.
// Its remaining degree - multiplicity() edges go to level 3.
struct level2_record {
    std::uint8_t neighbors = 0;
    std::uint8_t degree = 0;

    int multiplicity() const { return std::popcount(neighbors); }
    int level3_edges() const { return degree - multiplicity(); }

    friend auto operator<=>(const level2_record&, const level2_record&) = default;
};

// Rooted radius-2 structure of a bipartite graph around x. Level-3 vertices
// are not stored: every level-2/level-3 edge is taken to end at a vertex of
// degree delta_eff, which is what the padding reduction allows.
struct local_config {
    int delta_eff = 0;
    int root_degree = 0;
    std::vector<std::uint8_t> level1_degrees;
    std::vector<level2_record> level2;

    friend bool operator==(const local_config&, const local_config&) = default;
};

class config_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Throws config_error naming the first broken invariant.
void validate_config(const local_config& cfg);

// Isolated root, or levels 0-2 form a complete bipartite graph with no
// level-3 edges.
bool is_complete_bipartite_config(const local_config& cfg);
bool has_level3(const local_config& cfg);

goodness_instance config_terms(const local_config& cfg);
verdict config_goodness(const local_config& cfg, const certify_options& opts = {});

// Relabeling-invariant encoding (exact: equal iff isomorphic as rooted
// structures).
struct canonical_form {
    std::vector<std::uint8_t> bytes;

    friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
    std::string hex() const;
};

struct canonical_form_hash {
    std::size_t operator()(const canonical_form& c) const noexcept;
};

canonical_form canonical(const local_config& cfg);
local_config from_canonical(const canonical_form& c);

// Same config with level-1 indices permuted by perm (new index of old i is
// perm[i]) and level-2 records reordered by l2_order.
local_config relabel(const local_config& cfg, const std::vector<int>& perm, const std::vector<int>& l2_order);

// Reads the radius-2 structure around x in a graph whose x-component is
// bipartite.
local_config extract_config(const graph& g, vertex x, int delta_eff);

struct rooted_graph {
    graph g;
    vertex root = 0;
};

// Concrete graph realizing cfg with every level-3 vertex of degree delta_eff.
rooted_graph realize(const local_config& cfg);

// Keeps x's component up to level 4, then hangs new level-4 leaves on every
// level-3 vertex until it has degree delta. Level 0-2 degrees are unchanged.
rooted_graph pad_level3(const graph& g, vertex x, int delta);

std::string describe(const local_config& cfg);

} // namespace kahn

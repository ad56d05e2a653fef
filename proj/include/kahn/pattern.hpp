#pragma once

#include <string>
#include <vector>

#include "kahn/graph.hpp"
#include "kahn/local_config.hpp"

namespace kahn {

// A rooted graph drawn by BFS levels from the root; every vertex is at a
// finite level.
struct leveled_graph {
    graph g;
    vertex root = 0;
    std::vector<int> level;

    int depth() const;
    std::vector<vertex> at_level(int l) const;
};

leveled_graph make_leveled(graph g, vertex root);

// Exact rooted-isomorphism invariant: the lexicographically smallest edge
// list over all relabelings that respect (level, degree) classes.
struct leveled_canonical {
    graph g;                 // relabelled copy, vertices ordered by level
    std::vector<int> level;
    std::string key;         // "n:levels:edges"
};

leveled_canonical canonicalize(const leveled_graph& lg);

// Every way of attaching level-3 vertices to cfg: a multiset of nonempty
// sets of level-2 vertices in which level-2 vertex v lies in exactly
// (degree - multiplicity) sets. Results are pairwise non-isomorphic and
// sorted by canonical key.
std::vector<leveled_graph> level3_variants(const local_config& cfg);

// The radius-3 ball of the root with level-3 vertices kept but not padded.
leveled_graph ball_of_radius3(const graph& g, vertex root);

// Fourteen minimum-degree roots that fail the local test at maximum degree
// five, as hand-drawn reference pictures (root first).
const std::vector<leveled_graph>& reference_appearances();

// 1-based index into reference_appearances(), or 0.
int match_reference(const leveled_graph& lg);

// Graphviz drawing: the root on top and one rank per level. Output depends
// only on the isomorphism class.
std::string to_dot(const leveled_graph& lg, const std::string& name);

} // namespace kahn

#ifndef SGT_SPANNING_HPP
#define SGT_SPANNING_HPP

#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// Breadth-first spanning forest: one root per connected component, parent
/// links with the connecting edge id, and depths. Deterministic given id
/// order (lowest id roots, neighbors scanned in incident-edge order).
struct SpanningForest {
    std::vector<int> parent_vertex;  // -1 at roots
    std::vector<int> parent_edge;    // -1 at roots
    std::vector<int> depth;
    std::vector<int> component;  // component index per vertex
    std::vector<int> roots;      // one per component, ascending
    std::vector<bool> in_forest;  // per edge id

    bool contains_edge(int e) const { return in_forest[static_cast<std::size_t>(e)]; }
    bool same_component(int u, int v) const { return component[u] == component[v]; }
};

SpanningForest spanning_forest(const SignedGraph& g);

/// The walk along forest edges from u to v (requires same component).
Walk forest_path(const SignedGraph& g, const SpanningForest& f, int u, int v);

/// The unique cycle in T + e, as a closed walk starting at e's first
/// endpoint and traversing e first. A loop yields the length-1 walk.
/// Requires e off the forest with both endpoints in one component.
Walk fundamental_cycle(const SignedGraph& g, const SpanningForest& f, int e);

}  // namespace sgt

#endif

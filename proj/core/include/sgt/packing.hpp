#ifndef SGT_PACKING_HPP
#define SGT_PACKING_HPP

#include <optional>
#include <vector>

#include "sgt/hom.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A switching with a disjoint negative edge set, when one exists; the
/// certificate for impossibility is an odd cycle of the subgraph induced by
/// the negative edges.
struct DisjointSwitchResult {
    bool possible = false;
    SwitchSet switch_set;
    std::optional<Walk> odd_negative_cycle;
};

DisjointSwitchResult disjoint_switch(const SignedGraph& g);

/// Negative-edge contraction route to the same disjoint signature: contract
/// the negative edges, transport the negative-walk system, rebuild a
/// signature on the contraction and lift it back. Fails exactly when the
/// negative subgraph is not bipartite (the contracted system would contain
/// a trivial negative walk).
struct ContractNegativeResult {
    bool ok = false;
    SignedGraph contracted;            // with the reconstructed signature
    std::vector<int> vertex_image;     // g vertex -> contracted vertex
    std::vector<int> edge_image;       // g edge -> contracted edge, -1 if contracted away
    SignedGraph lifted;                // sigma' on g, negative set disjoint from E^-(sigma)
    std::optional<Walk> odd_negative_cycle;
};

ContractNegativeResult contract_negative(const SignedGraph& g, int bound = -1);

/// A family of switchings of (G, sigma) whose negative edge sets are
/// pairwise disjoint.
struct SignaturePacking {
    std::vector<SwitchSet> switch_sets;
    std::vector<std::vector<int>> negative_sets;
    bool exact = true;  // false: search hit its budget, size is a lower bound
    int size() const { return static_cast<int>(switch_sets.size()); }
};

struct PackOptions {
    std::uint64_t budget = 50'000'000;
    int max_vertices = 24;  // 2^(n-1) candidate switchings
};

/// Maximum packing by depth-first search over candidate switchings
/// (canonical up to complement, deduplicated by negative set), pruning on
/// used edges.
SignaturePacking pack_signatures(const SignedGraph& g, const PackOptions& options = {});

/// Both sides of the projective-cube correspondence: an exact search for a
/// partition of E into k+1 negative sets of switching-equivalent signatures,
/// against find_hom into spc(k).
struct PackVsSpcResult {
    bool partition_exists = false;
    std::optional<std::vector<std::vector<int>>> partition;  // k+1 classes of edge ids
    HomSearchResult hom;
    bool agreement() const {
        return hom.status != SearchStatus::budget_exceeded &&
               partition_exists == hom.found();
    }
};

PackVsSpcResult pack_vs_spc(const SignedGraph& g, int k, const SearchOptions& options = {});

}  // namespace sgt

#endif

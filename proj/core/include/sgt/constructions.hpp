#ifndef SGT_CONSTRUCTIONS_HPP
#define SGT_CONSTRUCTIONS_HPP

#include <vector>

#include "sgt/equivalence.hpp"
#include "sgt/hom.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

/// Double switching graph on V+ u V-: vertex v sits at id v (plus copy)
/// and n+v (minus copy); each source edge uv yields the four images
/// u^a v^b with sign a*b*sigma(uv).
struct Dsg {
    SignedGraph graph;
    int source_vertices = 0;
    std::vector<int> edge_source;  // per dsg edge: originating edge id

    int plus_vertex(int v) const { return v; }
    int minus_vertex(int v) const { return source_vertices + v; }
};

Dsg dsg(const SignedGraph& g);

/// Projection data for an extended double cover: every constructed vertex
/// belongs to the fiber {v+, v-} of a source vertex.
struct FiberMap {
    int source_vertices = 0;

    int vertex_of(int edc_vertex) const { return edc_vertex % source_vertices; }
    Sign tag_of(int edc_vertex) const {
        return edc_vertex < source_vertices ? Sign::plus : Sign::minus;
    }
    int plus_vertex(int v) const { return v; }
    int minus_vertex(int v) const { return source_vertices + v; }
};

/// Extended double cover: the double covering graph with positive signs
/// plus one negative edge per vertex fiber.
struct Edc {
    SignedGraph graph;
    FiberMap fibers;
    std::vector<int> edge_source;  // source edge id, or -1 for fiber edges
};

Edc edc(const SignedGraph& g);

/// Builds the fiber-swapping isomorphism between edc(g) and edc(switched(g, x))
/// and verifies it edge-by-edge; true by construction.
bool edc_invariance_check(const SignedGraph& g, const SwitchSet& x);

/// Both sides of the homomorphism transfer: the direct search and the
/// color-preserving search between the extended double covers. The verdicts
/// agree whenever both searches complete.
struct EdcTransferResult {
    HomSearchResult direct;
    HomSearchResult via_edc;
    bool agreement() const {
        return direct.status != SearchStatus::budget_exceeded &&
               via_edc.status != SearchStatus::budget_exceeded &&
               direct.found() == via_edc.found();
    }
};

EdcTransferResult edc_hom_transfer(const SignedGraph& src, const SignedGraph& tgt,
                                   const SearchOptions& options = {});

/// Signed projective cube, direct form: vertices Z_2^k, positive edges at
/// Hamming distance one, negative edges between antipodal pairs.
SignedGraph spc(int k);

/// The inductive form: k-1 extended double covers applied to spc(1).
SignedGraph spc_inductive(int k);

/// Exact sign-isomorphism of the two builders.
bool spc_coherence_check(int k, const SearchOptions& options = {});

/// classify(spc(k)): signed bipartite for odd k, antibalanced for even k.
SpecialClass spc_class_check(int k);

/// S(G): every edge replaced by a 4-cycle with one negative edge in which
/// the original endpoints are not adjacent. Vertices 0..n-1 are the source
/// vertices, then two subdivision vertices per edge. Rejects loops; input
/// signs are ignored.
SignedGraph s_of(const SignedGraph& g);

}  // namespace sgt

#endif

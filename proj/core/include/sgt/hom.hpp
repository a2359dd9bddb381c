#ifndef SGT_HOM_HPP
#define SGT_HOM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A homomorphism of signed graphs: a switching of the source followed by
/// an incidence- and sign-preserving map of vertices and edges.
struct Homomorphism {
    SwitchSet switch_set;         // on the source
    std::vector<int> vertex_map;  // one entry per source vertex
    std::vector<int> edge_map;    // one entry per source edge
};

struct VerifyReport {
    bool valid = false;
    std::string reason;
};

/// Checks incidence preservation and post-switch edge-sign preservation,
/// and cross-checks the closed-walk-sign criterion on every fundamental
/// cycle of the source (the two criteria agree for valid maps).
/// Throws ValidationError on partial maps or out-of-range images.
VerifyReport verify_hom(const SignedGraph& src, const SignedGraph& tgt, const Homomorphism& h);

enum class SearchStatus { found, none, budget_exceeded };

struct SearchOptions {
    std::uint64_t budget = 10'000'000;  // node expansions
    bool allow_switching = true;        // false: color-preserving (2-edge-colored) search
    bool use_girth_filter = true;
};

struct HomSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Homomorphism> hom;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::found; }
};

/// Backtracking search assigning each source vertex a (target vertex,
/// switch bit) pair with forward checking; any returned object passes
/// verify_hom. The girth filter may settle non-existence immediately.
HomSearchResult find_hom(const SignedGraph& src, const SignedGraph& tgt,
                         const SearchOptions& options = {});

/// Switching isomorphism: a bijective homomorphism whose inverse verifies.
HomSearchResult switching_iso(const SignedGraph& g1, const SignedGraph& g2,
                              const SearchOptions& options = {});

/// Exact sign-isomorphism (2-edge-colored: no switching allowed).
HomSearchResult sign_iso(const SignedGraph& g1, const SignedGraph& g2,
                         const SearchOptions& options = {});

/// Composition h23 . h12; the combined switch set is recovered from the
/// pullback signature, so the composite verifies whenever the parts do.
Homomorphism compose_hom(const SignedGraph& g1, const SignedGraph& g2, const SignedGraph& g3,
                         const Homomorphism& h12, const Homomorphism& h23);

struct CoreCheckResult {
    SearchStatus status = SearchStatus::none;
    bool core = false;
    /// A retraction to a proper subgraph when not a core.
    std::optional<Homomorphism> retraction;
};

/// Whether g admits no homomorphism to a proper subgraph. Color-preserving
/// mode is selected through options.allow_switching = false.
CoreCheckResult is_core(const SignedGraph& g, const SearchOptions& options = {});

struct CoreComputation {
    SearchStatus status = SearchStatus::none;
    SignedGraph core;
    /// Original vertex/edge ids of the core inside the input graph.
    std::vector<int> core_vertex_ids;
    std::vector<int> core_edge_ids;
    /// Retraction of the input onto the core (verifies against `core`).
    Homomorphism retraction;
};

/// Iterated retraction to a fixpoint; the result is a core, unique up to
/// switching isomorphism.
CoreComputation compute_core(const SignedGraph& g, const SearchOptions& options = {});

}  // namespace sgt

#endif

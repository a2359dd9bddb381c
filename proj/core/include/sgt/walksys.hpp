#ifndef SGT_WALKSYS_HPP
#define SGT_WALKSYS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/spanning.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A membership predicate on incidence-valid closed walks together with the
/// declared length bound B used by verification sweeps. Predicates must be
/// pure and total on closed walks.
class WalkOracle {
public:
    using Predicate = std::function<bool(const Walk&)>;

    WalkOracle(Predicate pred, int bound) : pred_(std::move(pred)), bound_(bound) {}

    bool contains(const Walk& w) const { return pred_(w); }
    int bound() const { return bound_; }

private:
    Predicate pred_;
    int bound_;
};

/// The negative closed walks of (G, sigma). Bound defaults to 2|E|.
WalkOracle negative_walk_oracle(const SignedGraph& g, int bound = -1);

/// The closed walks of odd length.
WalkOracle odd_walk_oracle(int bound);

/// Membership in the closure of an explicit finite list under rotation and
/// inversion.
WalkOracle explicit_walk_oracle(const SignedGraph& g, const std::vector<Walk>& walks, int bound);

/// An edge set in which every vertex of the induced subgraph has even
/// degree; an element of the binary cycle space.
class EvenSubgraph {
public:
    EvenSubgraph() = default;
    explicit EvenSubgraph(int edge_universe) : in_(static_cast<std::size_t>(edge_universe), false) {}

    static EvenSubgraph from_edges(int edge_universe, const std::vector<int>& ids);

    int universe_size() const { return static_cast<int>(in_.size()); }
    bool contains(int e) const { return in_[static_cast<std::size_t>(e)]; }
    void flip(int e) { in_[static_cast<std::size_t>(e)] = !in_[static_cast<std::size_t>(e)]; }
    bool empty() const;
    std::vector<int> edge_ids() const;
    EvenSubgraph symmetric_difference(const EvenSubgraph& o) const;

    bool operator==(const EvenSubgraph&) const = default;
    /// Lexicographic order on the characteristic vector (for set storage).
    bool operator<(const EvenSubgraph& o) const { return in_ < o.in_; }

private:
    std::vector<bool> in_;
};

/// The edges appearing an odd number of times on a closed walk.
EvenSubgraph even_subgraph_of(const SignedGraph& g, const Walk& w);

/// True when the edge set forms a single cycle (every support vertex of
/// degree 2, connected support; a loop counts twice at its vertex).
bool edge_set_is_cycle(const SignedGraph& g, const EvenSubgraph& c);

/// A theta subgraph: three internally disjoint xy-paths, carrying the count
/// of its three cycles that lie in the tested set.
struct ThetaWitness {
    int x = 0;
    int y = 0;
    std::array<Walk, 3> paths;
    int member_count = 0;
};

struct ThetaResult {
    bool coadditive = true;
    std::optional<ThetaWitness> witness;
};

/// Exhaustive theta sweep (exponential; the vertex cap guards desk scale).
/// Validates that every member of `cycles` is a cycle.
ThetaResult theta_coadditive(const SignedGraph& g, const std::vector<EvenSubgraph>& cycles,
                             int vertex_cap = 12);

struct CycleSignatureResult {
    std::optional<SignedGraph> signature;   // negative-cycle set is exactly the input
    std::optional<ThetaWitness> violation;  // set on co-additivity failure
    bool ok() const { return signature.has_value(); }
};

/// Builds a signature whose negative cycles are exactly `cycles` (positive
/// on a spanning forest, fundamental-cycle membership off it), verified by
/// exhaustive cycle enumeration; or reports the violated theta.
CycleSignatureResult cycles_to_signature(const SignedGraph& g,
                                         const std::vector<EvenSubgraph>& cycles,
                                         int vertex_cap = 12);

struct Ex3Violation {
    enum class Kind { rotation, triple };
    Kind kind = Kind::triple;
    // rotation: w1 = PQ, w2 = QP. triple: three xy-walks whose induced
    // closed walks contain an odd number of members.
    Walk w1, w2, w3;
    std::string detail;
};

struct Ex3Report {
    bool pass = true;
    int bound = 0;
    std::optional<Ex3Violation> violation;
};

/// Sweeps rotations of closed walks and xy-walk triples whose induced
/// closed walks all have length <= B. PASS is always bound-qualified.
Ex3Report exclusive_3walk_check(const SignedGraph& g, const WalkOracle& o);

struct OracleSignatureResult {
    std::optional<SignedGraph> signature;
    std::optional<Walk> counterexample;  // closed walk on which oracle and signature disagree
    bool ok() const { return signature.has_value(); }
};

/// Reconstructs a signature from a walk oracle: positive on a spanning
/// forest, the oracle's verdict on each fundamental cycle off it. Every
/// closed walk up to the oracle's bound is then checked; the first
/// disagreement is returned as a counterexample.
OracleSignatureResult signature_from_oracle(const SignedGraph& g, const WalkOracle& o);

/// Presentation of a walk system by the off-forest edges whose fundamental
/// cycle is in the system; membership of any closed walk W reduces to the
/// parity of |C_W intersect E^-|.
struct TreePresentation {
    std::vector<int> negative_edges;
    std::optional<Walk> counterexample;

    bool valid() const { return !counterexample.has_value(); }
};

TreePresentation tree_presentation(const SignedGraph& g, const SpanningForest& f,
                                   const WalkOracle& o);

/// Membership test from a tree presentation.
bool tree_presentation_member(const SignedGraph& g, const TreePresentation& t, const Walk& w);

/// First violation of the basic walk-system properties [1]..[5] (trivial
/// walks, W W^-1, inversion, concatenation, conjugation), swept up to the
/// oracle's bound.
struct PropertyViolation {
    int item = 0;
    Walk w1, w2;
    std::string detail;
};

std::optional<PropertyViolation> walk_system_properties_check(const SignedGraph& g,
                                                              const WalkOracle& o);

}  // namespace sgt

#endif

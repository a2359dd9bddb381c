#ifndef SGT_EQUIVALENCE_HPP
#define SGT_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>

#include "sgt/signed_graph.hpp"
#include "sgt/spanning.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// Verdict plus certificate: on YES the switch set that makes every edge
/// positive, on NO a negative cycle.
struct BalanceResult {
    bool balanced = false;
    SwitchSet switch_set;
    std::optional<Walk> negative_cycle;
};

BalanceResult is_balanced(const SignedGraph& g);

/// Balance of (G,-sigma). On YES the switch set makes every edge negative;
/// on NO the certificate is a cycle that is negative in the negated graph.
BalanceResult is_antibalanced(const SignedGraph& g);

/// Verdict plus certificate for switching equivalence of two signatures on
/// the same underlying graph: on YES a witness X with switch(g1, X) == g2
/// edge-for-edge, on NO a cycle whose signs differ under the two signatures.
struct EquivalenceResult {
    bool equivalent = false;
    SwitchSet switch_set;
    std::optional<Walk> distinguishing_cycle;
};

EquivalenceResult switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// The unique switching-equivalent signature that is all-positive on the
/// forest edges. Idempotent; two signatures on the same graph are switching
/// equivalent iff their canonical forms w.r.t. the same forest are identical.
SignedGraph canonical_signature(const SignedGraph& g, const SpanningForest& f);
SignedGraph canonical_signature(const SignedGraph& g);

/// 2^(e-n+c). Throws BudgetError when the count exceeds 2^63.
std::uint64_t count_switching_classes(const SignedGraph& g);

/// Membership in the three special classes. An edgeless graph is in all
/// three; the flags are independent.
struct SpecialClass {
    bool balanced = false;          // G01
    bool signed_bipartite = false;  // G10
    bool antibalanced = false;      // G11
};

SpecialClass classify(const SignedGraph& g);

/// Bipartiteness of the underlying graph with certificate: one side of a
/// bipartition on YES, an odd cycle on NO.
struct BipartiteResult {
    bool bipartite = false;
    SwitchSet side;
    std::optional<Walk> odd_cycle;
};

BipartiteResult bipartition(const SignedGraph& g);

}  // namespace sgt

#endif

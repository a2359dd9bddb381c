#ifndef SGT_WALK_ENUM_HPP
#define SGT_WALK_ENUM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

inline constexpr std::uint64_t kDefaultEnumCap = 50'000'000;

/// All walks from x to y grouped by length 0..max_len, each level in
/// lexicographic edge-id order. Throws BudgetError past the cap.
std::vector<std::vector<Walk>> walks_between(const SignedGraph& g, int x, int y, int max_len,
                                             std::uint64_t cap = kDefaultEnumCap);

/// All walks from x of length 0..max_len bucketed by endpoint then length
/// (result[y][l], same per-level order as walks_between). One traversal
/// serves every endpoint; sweeps that pair walks across endpoints want this.
std::vector<std::vector<std::vector<Walk>>> walks_from(const SignedGraph& g, int x, int max_len,
                                                       std::uint64_t cap = kDefaultEnumCap);

/// Visits every closed walk of length 1..max_len in a fixed order: start
/// vertex ascending, then depth-first prefix order with incident edges taken
/// in id order (so a walk precedes its extensions). The visitor returns
/// false to stop early; the function returns false when stopped.
bool for_each_closed_walk(const SignedGraph& g, int max_len,
                          const std::function<bool(const Walk&)>& visit,
                          std::uint64_t cap = kDefaultEnumCap);

/// Visits every walk (closed or not, including trivial ones) of length
/// 0..max_len, in the same start-then-prefix order.
bool for_each_walk(const SignedGraph& g, int max_len, const std::function<bool(const Walk&)>& visit,
                   std::uint64_t cap = kDefaultEnumCap);

/// Every cycle of the graph with length <= max_len (all of them when
/// max_len < 0), each reported once, started at its smallest vertex. Order:
/// smallest vertex ascending, then depth-first edge order. Exponential in
/// general; intended for desk-scale inputs.
std::vector<Walk> all_cycles(const SignedGraph& g, int max_len = -1,
                             std::uint64_t cap = kDefaultEnumCap);

}  // namespace sgt

#endif

#ifndef SGT_WALK_HPP
#define SGT_WALK_HPP

#include <string>
#include <vector>

#include "sgt/sign.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

/// Alternating vertex/edge sequence v0 e1 v1 ... ek vk. A trivial walk has
/// one vertex and no edges and counts as closed.
struct Walk {
    std::vector<int> verts;  // length k+1
    std::vector<int> edges;  // length k

    static Walk trivial(int v) { return Walk{{v}, {}}; }

    int length() const { return static_cast<int>(edges.size()); }
    bool is_trivial() const { return edges.empty(); }
    int start() const { return verts.front(); }
    int end() const { return verts.back(); }
    bool is_closed() const { return start() == end(); }

    bool operator==(const Walk&) const = default;
};

/// Type of a closed walk in Z2^2, written "ij": the first bit is the sign
/// (1 = negative) and the second the parity (1 = odd), so 00 is positive
/// even, 01 positive odd, 10 negative even and 11 negative odd.
struct WalkType {
    bool negative = false;
    bool odd = false;

    int index() const { return (negative ? 2 : 0) + (odd ? 1 : 0); }
    std::string str() const { return std::string() + (negative ? '1' : '0') + (odd ? '1' : '0'); }

    static WalkType from_index(int i) { return WalkType{(i & 2) != 0, (i & 1) != 0}; }

    friend WalkType operator+(WalkType a, WalkType b) {
        return WalkType{a.negative != b.negative, a.odd != b.odd};
    }
    bool operator==(const WalkType&) const = default;
};

inline constexpr WalkType kType00{false, false};
inline constexpr WalkType kType01{false, true};
inline constexpr WalkType kType10{true, false};
inline constexpr WalkType kType11{true, true};

/// Throws ValidationError naming the first index whose edge/vertex incidence
/// is broken. A valid walk has verts.size() == edges.size() + 1.
void validate_walk(const SignedGraph& g, const Walk& w);

bool walk_is_valid(const SignedGraph& g, const Walk& w);

/// Product of the edge signs along the walk, counting repetition.
/// The trivial walk is positive.
Sign sign_of_walk(const SignedGraph& g, const Walk& w);

/// Type of a closed walk; requires w closed.
WalkType type_of_walk(const SignedGraph& g, const Walk& w);

/// The reversed walk.
Walk inverse(const Walk& w);

/// The rotation of a closed walk starting at its i-th vertex (0-based,
/// 0 <= i <= length). Requires w closed.
Walk rotated(const Walk& w, int i);

/// Concatenation; requires a.end() == b.start().
Walk concat(const Walk& a, const Walk& b);

/// True when the closed walk is a cycle: length >= 1, the start/end vertex
/// is the only repetition. Loops are cycles of length 1, parallel edge
/// pairs cycles of length 2.
bool is_cycle(const Walk& w);

std::string to_string(const Walk& w);

}  // namespace sgt

#endif

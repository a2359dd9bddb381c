#ifndef SGT_GIRTH_HPP
#define SGT_GIRTH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// A walk-girth entry: a positive length or unbounded.
struct GirthValue {
    int value = -1;  // negative encodes unbounded

    static GirthValue unbounded() { return GirthValue{-1}; }
    static GirthValue finite(int v) { return GirthValue{v}; }

    bool is_unbounded() const { return value < 0; }
    std::string str() const { return is_unbounded() ? "inf" : std::to_string(value); }

    friend bool operator==(GirthValue a, GirthValue b) {
        return a.is_unbounded() ? b.is_unbounded() : (!b.is_unbounded() && a.value == b.value);
    }
    /// Strict order with unbounded as +infinity.
    friend bool operator<(GirthValue a, GirthValue b) {
        if (a.is_unbounded()) return false;
        if (b.is_unbounded()) return true;
        return a.value < b.value;
    }
    friend bool operator>=(GirthValue a, GirthValue b) { return !(a < b); }
};

/// The four walk-girths with a witness walk per finite entry, indexed by
/// WalkType::index().
struct GirthProfile {
    std::array<GirthValue, 4> g;
    std::array<std::optional<Walk>, 4> witness;

    GirthValue of(WalkType t) const { return g[static_cast<std::size_t>(t.index())]; }
    bool values_equal(const GirthProfile& o) const { return g == o.g; }
};

/// Per-source signed distance layers: layers[k][0] and layers[k][1] list the
/// vertices at distance k from the source reachable by a shortest path of
/// positive resp. negative sign (a vertex may appear in both).
struct SignedLayers {
    std::vector<std::array<std::vector<int>, 2>> layers;

    int radius() const { return static_cast<int>(layers.size()) - 1; }
    const std::vector<int>& at(int k, Sign s) const {
        return layers[static_cast<std::size_t>(k)][s == Sign::plus ? 0 : 1];
    }
};

SignedLayers signed_layers(const SignedGraph& g, int v);

struct WalkGirthResult {
    GirthValue value;
    std::optional<Walk> witness;
};

/// Shortest nontrivial closed walk of the given type, with witness.
WalkGirthResult walk_girth(const SignedGraph& g, WalkType ij);

GirthProfile girth_profile(const SignedGraph& g);

/// Necessary condition for source -> target: fails with the first type ij
/// (index order) whose girth is smaller in the source than in the target.
struct NoHomFilterResult {
    bool pass = true;
    WalkType failed_type;
};

NoHomFilterResult no_hom_filter(const SignedGraph& source, const SignedGraph& target);

enum class Realization { none, cycles_only, walks_only, both };

const char* to_string(Realization r);

/// For each finite walk-girth, whether the minimum-length witnesses include
/// a cycle, only non-cyclic closed walks, or both.
struct RealizationReport {
    std::array<Realization, 4> per_type;
};

RealizationReport realization_analysis(const SignedGraph& g);

}  // namespace sgt

#endif

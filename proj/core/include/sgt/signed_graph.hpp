#ifndef SGT_SIGNED_GRAPH_HPP
#define SGT_SIGNED_GRAPH_HPP

#include <string>
#include <vector>

#include "sgt/sign.hpp"

namespace sgt {

/// One edge record. Loops (u == v) and parallel edges (same endpoints,
/// distinct ids) are first-class; the id is the index into the edge list.
struct Edge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::plus;

    bool is_loop() const { return u == v; }
};

/// A set of vertices, used both as a switching and as a bipartition side.
/// Membership is tracked against a fixed universe 0..n-1.
class SwitchSet {
public:
    SwitchSet() = default;
    explicit SwitchSet(int universe) : in_(static_cast<std::size_t>(universe), false) {}

    static SwitchSet of(int universe, std::initializer_list<int> ids);

    int universe_size() const { return static_cast<int>(in_.size()); }
    bool contains(int v) const { return in_[static_cast<std::size_t>(v)]; }
    void insert(int v) { in_[static_cast<std::size_t>(v)] = true; }
    void erase(int v) { in_[static_cast<std::size_t>(v)] = false; }
    bool empty() const;
    int size() const;
    std::vector<int> members() const;
    SwitchSet complemented() const;

    /// True when u and v lie on opposite sides of the cut [X, V\X].
    bool crosses(int u, int v) const { return contains(u) != contains(v); }

    bool operator==(const SwitchSet&) const = default;

private:
    std::vector<bool> in_;
};

/// A signed multigraph: vertices 0..n-1, an ordered list of edge records,
/// and an optional vertex label table. Values are treated as immutable once
/// built; every operation on them is a pure function.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(int n);

    int add_vertex();
    /// Appends an edge and returns its id. Endpoints must already exist.
    int add_edge(int u, int v, Sign sign);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge ids incident to v, in insertion order. A loop appears once.
    const std::vector<int>& incident(int v) const { return inc_[static_cast<std::size_t>(v)]; }

    /// Degree with loops counted twice.
    int degree(int v) const;

    /// The endpoint of e other than v; for a loop at v this is v again.
    int other_end(int e, int v) const;

    void set_label(int v, std::string label);
    /// Returns nullptr when v carries no label.
    const std::string* label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

    /// True when the other graph has the same vertex count and the same
    /// endpoint multiset for every edge id (signs may differ).
    bool same_underlying(const SignedGraph& other) const;

    /// Exact equality of structure and signs, edge-for-edge.
    bool same_signed(const SignedGraph& other) const;

    void check_vertex(int v) const;
    void check_edge(int e) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::string> labels_;  // empty, or one entry per vertex
};

/// The same graph with every edge sign negated.
SignedGraph negated(const SignedGraph& g);

/// Switches the set X: negates exactly the signs of the edge cut [X, V\X].
/// Loops and edges inside X or inside V\X are untouched.
SignedGraph switched(const SignedGraph& g, const SwitchSet& x);

/// Edge ids that are negative in g.
std::vector<int> negative_edge_ids(const SignedGraph& g);

}  // namespace sgt

#endif

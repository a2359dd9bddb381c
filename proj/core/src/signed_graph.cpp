#include "sgt/signed_graph.hpp"

#include <algorithm>

#include "sgt/error.hpp"

namespace sgt {

SwitchSet SwitchSet::of(int universe, std::initializer_list<int> ids) {
    SwitchSet s(universe);
    for (int v : ids) {
        if (v < 0 || v >= universe)
            throw ValidationError("switch set member " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

bool SwitchSet::empty() const {
    return std::none_of(in_.begin(), in_.end(), [](bool b) { return b; });
}

int SwitchSet::size() const {
    return static_cast<int>(std::count(in_.begin(), in_.end(), true));
}

std::vector<int> SwitchSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < universe_size(); ++v)
        if (in_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

SwitchSet SwitchSet::complemented() const {
    SwitchSet s(universe_size());
    for (int v = 0; v < universe_size(); ++v)
        if (!contains(v)) s.insert(v);
    return s;
}

SignedGraph::SignedGraph(int n) : n_(n), inc_(static_cast<std::size_t>(n)) {
    if (n < 0) throw ValidationError("negative vertex count");
}

int SignedGraph::add_vertex() {
    inc_.emplace_back();
    if (!labels_.empty()) labels_.emplace_back();
    return n_++;
}

int SignedGraph::add_edge(int u, int v, Sign sign) {
    check_vertex(u);
    check_vertex(v);
    int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{u, v, sign});
    inc_[static_cast<std::size_t>(u)].push_back(id);
    if (v != u) inc_[static_cast<std::size_t>(v)].push_back(id);
    return id;
}

int SignedGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int e : inc_[static_cast<std::size_t>(v)]) d += edge(e).is_loop() ? 2 : 1;
    return d;
}

int SignedGraph::other_end(int e, int v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw ValidationError("edge " + std::to_string(e) + " is not incident to vertex " +
                          std::to_string(v));
}

void SignedGraph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

const std::string* SignedGraph::label(int v) const {
    check_vertex(v);
    if (labels_.empty() || labels_[static_cast<std::size_t>(v)].empty()) return nullptr;
    return &labels_[static_cast<std::size_t>(v)];
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        bool same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
        if (!same) return false;
    }
    return true;
}

bool SignedGraph::same_signed(const SignedGraph& other) const {
    if (!same_underlying(other)) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].sign != other.edges_[i].sign) return false;
    return true;
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ValidationError("vertex id " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
}

void SignedGraph::check_edge(int e) const {
    if (e < 0 || e >= edge_count())
        throw ValidationError("edge id " + std::to_string(e) + " out of range [0," +
                              std::to_string(edge_count()) + ")");
}

SignedGraph negated(const SignedGraph& g) {
    SignedGraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, negated(e.sign));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (const std::string* l = g.label(v)) out.set_label(v, *l);
    return out;
}

SignedGraph switched(const SignedGraph& g, const SwitchSet& x) {
    if (x.universe_size() != g.vertex_count())
        throw ValidationError("switch set universe does not match graph order");
    SignedGraph out(g.vertex_count());
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v, x.crosses(e.u, e.v) ? negated(e.sign) : e.sign);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (const std::string* l = g.label(v)) out.set_label(v, *l);
    return out;
}

std::vector<int> negative_edge_ids(const SignedGraph& g) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (is_negative(g.edge(e).sign)) out.push_back(e);
    return out;
}

}  // namespace sgt

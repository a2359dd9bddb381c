#include "sgt/equivalence.hpp"

#include <stdexcept>

#include "sgt/error.hpp"

namespace sgt {

namespace {

/// Sign of the forest path from each vertex's root, per component.
std::vector<Sign> forest_potentials(const SignedGraph& g, const SpanningForest& f) {
    int n = g.vertex_count();
    std::vector<Sign> h(static_cast<std::size_t>(n), Sign::plus);
    std::vector<bool> known(static_cast<std::size_t>(n), false);
    for (int r : f.roots) known[static_cast<std::size_t>(r)] = true;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (known[static_cast<std::size_t>(v)]) continue;
        stack.clear();
        int a = v;
        while (!known[static_cast<std::size_t>(a)]) {
            stack.push_back(a);
            a = f.parent_vertex[static_cast<std::size_t>(a)];
        }
        Sign s = h[static_cast<std::size_t>(a)];
        for (std::size_t i = stack.size(); i-- > 0;) {
            int w = stack[i];
            s *= g.edge(f.parent_edge[static_cast<std::size_t>(w)]).sign;
            h[static_cast<std::size_t>(w)] = s;
            known[static_cast<std::size_t>(w)] = true;
        }
    }
    return h;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
    SpanningForest f = spanning_forest(g);
    std::vector<Sign> h = forest_potentials(g, f);

    BalanceResult res;
    res.switch_set = SwitchSet(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_negative(h[static_cast<std::size_t>(v)])) res.switch_set.insert(v);

    // after switching, forest edges are positive; any remaining negative
    // off-forest edge closes a negative fundamental cycle
    for (int e = 0; e < g.edge_count(); ++e) {
        if (f.contains_edge(e)) continue;
        const Edge& ed = g.edge(e);
        Sign after = ed.sign * h[static_cast<std::size_t>(ed.u)] * h[static_cast<std::size_t>(ed.v)];
        if (is_negative(after)) {
            res.balanced = false;
            res.switch_set = SwitchSet(g.vertex_count());
            res.negative_cycle = fundamental_cycle(g, f, e);
            return res;
        }
    }
    res.balanced = true;
    return res;
}

BalanceResult is_antibalanced(const SignedGraph& g) { return is_balanced(negated(g)); }

EquivalenceResult switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (!g1.same_underlying(g2))
        throw ValidationError("switching equivalence requires the same underlying graph");

    SignedGraph product(g1.vertex_count());
    for (int e = 0; e < g1.edge_count(); ++e) {
        const Edge& a = g1.edge(e);
        product.add_edge(a.u, a.v, a.sign * g2.edge(e).sign);
    }

    BalanceResult br = is_balanced(product);
    EquivalenceResult res;
    if (!br.balanced) {
        res.equivalent = false;
        res.distinguishing_cycle = br.negative_cycle;
        return res;
    }
    res.equivalent = true;
    res.switch_set = br.switch_set;
    if (!switched(g1, res.switch_set).same_signed(g2))
        throw std::logic_error("switching witness failed to reproduce the second signature");
    return res;
}

SignedGraph canonical_signature(const SignedGraph& g, const SpanningForest& f) {
    std::vector<Sign> h = forest_potentials(g, f);
    SwitchSet x(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_negative(h[static_cast<std::size_t>(v)])) x.insert(v);
    return switched(g, x);
}

SignedGraph canonical_signature(const SignedGraph& g) {
    return canonical_signature(g, spanning_forest(g));
}

std::uint64_t count_switching_classes(const SignedGraph& g) {
    SpanningForest f = spanning_forest(g);
    int exponent = g.edge_count() - g.vertex_count() + static_cast<int>(f.roots.size());
    if (exponent >= 64)
        throw BudgetError("switching class count 2^" + std::to_string(exponent) +
                          " does not fit in 64 bits");
    return std::uint64_t{1} << exponent;
}

BipartiteResult bipartition(const SignedGraph& g) {
    SpanningForest f = spanning_forest(g);
    BipartiteResult res;
    res.side = SwitchSet(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f.depth[static_cast<std::size_t>(v)] % 2 == 1) res.side.insert(v);

    for (int e = 0; e < g.edge_count(); ++e) {
        if (f.contains_edge(e)) continue;
        const Edge& ed = g.edge(e);
        int du = f.depth[static_cast<std::size_t>(ed.u)];
        int dv = f.depth[static_cast<std::size_t>(ed.v)];
        if ((du + dv) % 2 == 0) {
            res.bipartite = false;
            res.side = SwitchSet(g.vertex_count());
            res.odd_cycle = fundamental_cycle(g, f, e);
            return res;
        }
    }
    res.bipartite = true;
    return res;
}

SpecialClass classify(const SignedGraph& g) {
    SpecialClass c;
    c.balanced = is_balanced(g).balanced;
    c.antibalanced = is_antibalanced(g).balanced;
    c.signed_bipartite = bipartition(g).bipartite;
    return c;
}

}  // namespace sgt

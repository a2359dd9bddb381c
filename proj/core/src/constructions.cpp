#include "sgt/constructions.hpp"

#include <stdexcept>

#include "sgt/error.hpp"

namespace sgt {

Dsg dsg(const SignedGraph& g) {
    int n = g.vertex_count();
    Dsg d;
    d.source_vertices = n;
    d.graph = SignedGraph(2 * n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const int copies[2] = {0, n};  // plus side offset, minus side offset
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                Sign s = ed.sign;
                if (a != b) s = negated(s);
                d.graph.add_edge(ed.u + copies[a], ed.v + copies[b], s);
                d.edge_source.push_back(e);
            }
        }
    }
    return d;
}

Edc edc(const SignedGraph& g) {
    int n = g.vertex_count();
    Edc r;
    r.fibers.source_vertices = n;
    r.graph = SignedGraph(2 * n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.sign == Sign::plus) {
            r.graph.add_edge(ed.u, ed.v, Sign::plus);
            r.graph.add_edge(n + ed.u, n + ed.v, Sign::plus);
        } else {
            r.graph.add_edge(ed.u, n + ed.v, Sign::plus);
            r.graph.add_edge(n + ed.u, ed.v, Sign::plus);
        }
        r.edge_source.push_back(e);
        r.edge_source.push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        r.graph.add_edge(v, n + v, Sign::minus);
        r.edge_source.push_back(-1);
    }
    return r;
}

bool edc_invariance_check(const SignedGraph& g, const SwitchSet& x) {
    Edc a = edc(g);
    Edc b = edc(switched(g, x));
    int n = g.vertex_count();

    // swapping the fiber of every switched vertex is the isomorphism
    std::vector<int> vmap(static_cast<std::size_t>(2 * n));
    for (int v = 0; v < n; ++v) {
        if (x.contains(v)) {
            vmap[static_cast<std::size_t>(v)] = n + v;
            vmap[static_cast<std::size_t>(n + v)] = v;
        } else {
            vmap[static_cast<std::size_t>(v)] = v;
            vmap[static_cast<std::size_t>(n + v)] = n + v;
        }
    }

    // match edges one-to-one under the vertex map, sign-exactly
    std::vector<bool> taken(static_cast<std::size_t>(b.graph.edge_count()), false);
    for (int e = 0; e < a.graph.edge_count(); ++e) {
        const Edge& ed = a.graph.edge(e);
        int iu = vmap[static_cast<std::size_t>(ed.u)];
        int iv = vmap[static_cast<std::size_t>(ed.v)];
        bool matched = false;
        for (int f = 0; f < b.graph.edge_count(); ++f) {
            if (taken[static_cast<std::size_t>(f)]) continue;
            const Edge& fd = b.graph.edge(f);
            bool same = (fd.u == iu && fd.v == iv) || (fd.u == iv && fd.v == iu);
            if (same && fd.sign == ed.sign) {
                taken[static_cast<std::size_t>(f)] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

EdcTransferResult edc_hom_transfer(const SignedGraph& src, const SignedGraph& tgt,
                                   const SearchOptions& options) {
    EdcTransferResult r;
    r.direct = find_hom(src, tgt, options);

    Edc es = edc(src);
    Edc et = edc(tgt);
    SearchOptions o = options;
    o.allow_switching = false;  // color-preserving; fibers follow automatically
    r.via_edc = find_hom(es.graph, et.graph, o);
    return r;
}

SignedGraph spc(int k) {
    if (k < 1) throw ValidationError("signed projective cubes need dimension k >= 1");
    if (k > 20) throw BudgetError("spc dimension too large");
    int n = 1 << k;
    SignedGraph g(n);
    for (int x = 0; x < n; ++x) {
        for (int bit = 0; bit < k; ++bit) {
            int y = x ^ (1 << bit);
            if (x < y) g.add_edge(x, y, Sign::plus);
        }
        int anti = x ^ (n - 1);
        if (x < anti) g.add_edge(x, anti, Sign::minus);
    }
    return g;
}

SignedGraph spc_inductive(int k) {
    if (k < 1) throw ValidationError("signed projective cubes need dimension k >= 1");
    SignedGraph g(2);
    g.add_edge(0, 1, Sign::plus);
    g.add_edge(0, 1, Sign::minus);
    for (int i = 2; i <= k; ++i) g = edc(g).graph;
    return g;
}

bool spc_coherence_check(int k, const SearchOptions& options) {
    return sign_iso(spc(k), spc_inductive(k), options).found();
}

SpecialClass spc_class_check(int k) { return classify(spc(k)); }

SignedGraph s_of(const SignedGraph& g) {
    for (const Edge& e : g.edges())
        if (e.is_loop())
            throw ValidationError("S(G) is defined for loopless graphs");
    int n = g.vertex_count();
    SignedGraph out(n + 2 * g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int p = n + 2 * e;      // subdivision vertex on the first strand
        int q = n + 2 * e + 1;  // subdivision vertex on the second strand
        out.add_edge(ed.u, p, Sign::plus);
        out.add_edge(p, ed.v, Sign::plus);
        out.add_edge(ed.u, q, Sign::plus);
        out.add_edge(q, ed.v, Sign::minus);
    }
    return out;
}

}  // namespace sgt

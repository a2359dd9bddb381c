#include "sgt/packing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <stdexcept>

#include "sgt/constructions.hpp"
#include "sgt/equivalence.hpp"
#include "sgt/error.hpp"
#include "sgt/spanning.hpp"
#include "sgt/walksys.hpp"

namespace sgt {

namespace {

/// The subgraph induced by the negative edges, on the full vertex set, with
/// the map back to original edge ids.
struct NegativeSubgraph {
    SignedGraph graph;
    std::vector<int> edge_ids;
};

NegativeSubgraph negative_subgraph(const SignedGraph& g) {
    NegativeSubgraph s;
    s.graph = SignedGraph(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (is_negative(ed.sign)) {
            s.graph.add_edge(ed.u, ed.v, ed.sign);
            s.edge_ids.push_back(e);
        }
    }
    return s;
}

Walk translate_walk(const Walk& w, const std::vector<int>& edge_ids) {
    Walk out = w;
    for (int& e : out.edges) e = edge_ids[static_cast<std::size_t>(e)];
    return out;
}

std::vector<int> negative_set_of_switch(const SignedGraph& g, const SwitchSet& x) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Sign s = x.crosses(ed.u, ed.v) ? negated(ed.sign) : ed.sign;
        if (is_negative(s)) out.push_back(e);
    }
    return out;
}

}  // namespace

DisjointSwitchResult disjoint_switch(const SignedGraph& g) {
    NegativeSubgraph neg = negative_subgraph(g);
    BipartiteResult bip = bipartition(neg.graph);

    DisjointSwitchResult res;
    if (!bip.bipartite) {
        res.possible = false;
        res.odd_negative_cycle = translate_walk(*bip.odd_cycle, neg.edge_ids);
        return res;
    }
    res.possible = true;
    res.switch_set = bip.side;

    // every negative edge lies in the cut, so the new negative set is disjoint
    std::vector<int> before = negative_edge_ids(g);
    std::vector<int> after = negative_set_of_switch(g, res.switch_set);
    std::vector<int> common;
    std::set_intersection(before.begin(), before.end(), after.begin(), after.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::logic_error("disjoint_switch produced a non-disjoint negative set");
    return res;
}

ContractNegativeResult contract_negative(const SignedGraph& g, int bound) {
    NegativeSubgraph neg = negative_subgraph(g);
    BipartiteResult bip = bipartition(neg.graph);

    ContractNegativeResult res;
    if (!bip.bipartite) {
        res.ok = false;
        res.odd_negative_cycle = translate_walk(*bip.odd_cycle, neg.edge_ids);
        return res;
    }

    // components of the negative subgraph become single vertices
    SpanningForest nf = spanning_forest(neg.graph);
    res.vertex_image.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        res.vertex_image[static_cast<std::size_t>(v)] = nf.component[static_cast<std::size_t>(v)];
    int nbar = static_cast<int>(nf.roots.size());

    SignedGraph contracted_underlying(nbar);
    res.edge_image.assign(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<int> back_to_g;  // contracted edge -> g edge id
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (is_negative(ed.sign)) continue;
        int id = contracted_underlying.add_edge(res.vertex_image[static_cast<std::size_t>(ed.u)],
                                                res.vertex_image[static_cast<std::size_t>(ed.v)],
                                                Sign::plus);
        res.edge_image[static_cast<std::size_t>(e)] = id;
        back_to_g.push_back(e);
    }

    // membership of a contracted walk = sign of a lift of it in g; all lifts
    // agree because the negative subgraph is bipartite (its cycles are even,
    // hence positive), so connecting through forest paths is canonical
    auto lift_sign = [&](const Walk& wbar) -> Sign {
        Sign total = Sign::plus;
        int entry = -1;   // g-vertex where the lift currently stands
        int first = -1;   // g-vertex where the lift started
        for (std::size_t i = 0; i < wbar.edges.size(); ++i) {
            const Edge& ge = g.edge(back_to_g[static_cast<std::size_t>(wbar.edges[i])]);
            int tail = ge.u;
            int head = ge.v;
            // orient the edge along the contracted walk
            if (res.vertex_image[static_cast<std::size_t>(tail)] !=
                wbar.verts[i]) std::swap(tail, head);
            if (entry == -1) {
                first = tail;
            } else {
                Walk conn = forest_path(neg.graph, nf, entry, tail);
                total *= sign_of_walk(neg.graph, conn);
            }
            total *= ge.sign;
            entry = head;
        }
        if (entry != -1 && wbar.is_closed()) {
            Walk conn = forest_path(neg.graph, nf, entry, first);
            total *= sign_of_walk(neg.graph, conn);
        }
        return total;
    };

    // the sweep inside signature_from_oracle is a bounded self-check; its
    // depth adapts to the contraction's density so dense parallel classes
    // cannot blow up the enumeration (the exact postcondition below is
    // checked unconditionally either way)
    int sweep_bound = bound;
    if (sweep_bound < 0) {
        int max_deg = 2;
        for (int v = 0; v < contracted_underlying.vertex_count(); ++v)
            max_deg = std::max(max_deg, contracted_underlying.degree(v));
        sweep_bound = std::min(2 * contracted_underlying.edge_count(), 10);
        double budget = 2e6;
        while (sweep_bound > 2 &&
               static_cast<double>(contracted_underlying.vertex_count()) *
                       std::pow(static_cast<double>(max_deg), sweep_bound) >
                   budget)
            --sweep_bound;
    }
    WalkOracle transported(
        [&lift_sign](const Walk& w) { return is_negative(lift_sign(w)); }, sweep_bound);
    OracleSignatureResult sig = signature_from_oracle(contracted_underlying, transported);
    if (!sig.ok())
        throw std::logic_error("transported walk system rejected by signature reconstruction");
    res.contracted = std::move(*sig.signature);

    // lift eta back: contracted edges stay positive, the rest copy eta
    res.lifted = SignedGraph(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int im = res.edge_image[static_cast<std::size_t>(e)];
        Sign s = im < 0 ? Sign::plus : res.contracted.edge(im).sign;
        res.lifted.add_edge(ed.u, ed.v, s);
    }

    EquivalenceResult eq = switching_equivalent(g, res.lifted);
    if (!eq.equivalent)
        throw std::logic_error("lifted signature is not switching equivalent to the original");
    res.ok = true;
    return res;
}

SignaturePacking pack_signatures(const SignedGraph& g, const PackOptions& options) {
    int n = g.vertex_count();
    if (n > options.max_vertices)
        throw BudgetError("pack_signatures enumerates 2^(n-1) switchings; capped at " +
                          std::to_string(options.max_vertices) + " vertices");

    // candidate switchings, canonical up to complement (vertex 0 pinned out),
    // deduplicated by negative edge set
    struct Candidate {
        SwitchSet x;
        std::vector<int> negatives;
        std::vector<std::uint64_t> mask;
    };
    int words = (g.edge_count() + 63) / 64;
    std::vector<Candidate> cands;
    std::vector<std::vector<int>> seen;
    std::uint64_t total = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        SwitchSet x(n);
        for (int v = 1; v < n; ++v)
            if ((bits >> (v - 1)) & 1) x.insert(v);
        std::vector<int> negs = negative_set_of_switch(g, x);
        if (std::find(seen.begin(), seen.end(), negs) != seen.end()) continue;
        seen.push_back(negs);
        Candidate c;
        c.x = std::move(x);
        c.mask.assign(static_cast<std::size_t>(words), 0);
        for (int e : negs)
            c.mask[static_cast<std::size_t>(e / 64)] |= std::uint64_t{1} << (e % 64);
        c.negatives = std::move(negs);
        cands.push_back(std::move(c));
    }

    std::vector<std::size_t> best, chosen;
    std::vector<std::uint64_t> used(static_cast<std::size_t>(words), 0);
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (chosen.size() > best.size()) best = chosen;
        if (i == cands.size() || exhausted) return;
        if (chosen.size() + (cands.size() - i) <= best.size()) return;  // bound
        if (++nodes > options.budget) {
            exhausted = true;
            return;
        }
        // include candidate i when its negatives are unused
        bool fits = true;
        for (int w = 0; w < words; ++w)
            if (cands[i].mask[static_cast<std::size_t>(w)] & used[static_cast<std::size_t>(w)]) {
                fits = false;
                break;
            }
        if (fits) {
            for (int w = 0; w < words; ++w)
                used[static_cast<std::size_t>(w)] |= cands[i].mask[static_cast<std::size_t>(w)];
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
            for (int w = 0; w < words; ++w)
                used[static_cast<std::size_t>(w)] &= ~cands[i].mask[static_cast<std::size_t>(w)];
        }
        rec(i + 1);
    };
    rec(0);

    SignaturePacking out;
    out.exact = !exhausted;
    for (std::size_t i : best) {
        out.switch_sets.push_back(cands[i].x);
        out.negative_sets.push_back(cands[i].negatives);
    }
    return out;
}

PackVsSpcResult pack_vs_spc(const SignedGraph& g, int k, const SearchOptions& options) {
    if (k < 1) throw ValidationError("pack_vs_spc requires k >= 1");
    PackVsSpcResult res;

    // side A: lexicographically-first partition of the edges into k+1
    // classes (restricted growth, so class order carries no symmetry), each
    // class the negative set of an equivalent signature
    int m = g.edge_count();
    std::vector<int> cls(static_cast<std::size_t>(m), 0);
    auto classes_valid = [&]() -> bool {
        for (int c = 0; c <= k; ++c) {
            SignedGraph sigma(g.vertex_count());
            for (int e = 0; e < m; ++e) {
                const Edge& ed = g.edge(e);
                sigma.add_edge(ed.u, ed.v,
                               cls[static_cast<std::size_t>(e)] == c ? Sign::minus : Sign::plus);
            }
            if (!switching_equivalent(g, sigma).equivalent) return false;
        }
        return true;
    };

    bool found = false;
    std::function<void(int, int)> rec = [&](int i, int maxc) {
        if (found) return;
        if (i == m) {
            if (classes_valid()) {
                found = true;
                std::vector<std::vector<int>> parts(static_cast<std::size_t>(k) + 1);
                for (int e = 0; e < m; ++e)
                    parts[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])].push_back(e);
                res.partition = std::move(parts);
            }
            return;
        }
        int cap = std::min(maxc + 1, k);
        for (int c = 0; c <= cap; ++c) {
            cls[static_cast<std::size_t>(i)] = c;
            rec(i + 1, std::max(maxc, c));
            if (found) return;
        }
    };
    rec(0, -1);
    res.partition_exists = found;

    // side B
    res.hom = find_hom(g, spc(k), options);
    return res;
}

}  // namespace sgt

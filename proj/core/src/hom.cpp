#include "sgt/hom.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgt/equivalence.hpp"
#include "sgt/error.hpp"
#include "sgt/girth.hpp"
#include "sgt/spanning.hpp"

namespace sgt {

namespace {

int sign_index(Sign s) { return s == Sign::plus ? 0 : 1; }

/// Per ordered vertex pair and sign: first edge id and multiplicity.
struct PairIndex {
    int n = 0;
    std::vector<std::array<int, 2>> first;
    std::vector<std::array<int, 2>> count;

    explicit PairIndex(const SignedGraph& g) : n(g.vertex_count()) {
        first.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {-1, -1});
        count.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {0, 0});
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            record(ed.u, ed.v, ed.sign, e);
            if (!ed.is_loop()) record(ed.v, ed.u, ed.sign, e);
        }
    }

    std::size_t at(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(b);
    }
    void record(int a, int b, Sign s, int e) {
        auto& f = first[at(a, b)][sign_index(s)];
        if (f == -1) f = e;
        count[at(a, b)][sign_index(s)] += 1;
    }
    int first_edge(int a, int b, Sign s) const { return first[at(a, b)][sign_index(s)]; }
    int edges_between(int a, int b, Sign s) const { return count[at(a, b)][sign_index(s)]; }
};

/// Backtracking engine over (target vertex, switch bit) assignments with
/// forward checking. Candidate index 2t+b keeps targets ascending and the
/// unswitched bit first.
struct Searcher {
    const SignedGraph& src;
    const SignedGraph& tgt;
    const SearchOptions& opts;
    bool iso;
    PairIndex sidx;
    PairIndex tidx;
    int nc;  // candidate universe = 2 * |V(tgt)|

    std::vector<int> order;       // source vertices, descending degree then id
    std::vector<int> level_of;    // source vertex -> position in order
    std::vector<int> assigned;    // source vertex -> candidate or -1
    std::vector<bool> used_tgt;   // iso: target vertex occupied
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    Searcher(const SignedGraph& s, const SignedGraph& t, const SearchOptions& o, bool iso_mode)
        : src(s), tgt(t), opts(o), iso(iso_mode), sidx(s), tidx(t), nc(2 * t.vertex_count()) {
        order.resize(static_cast<std::size_t>(src.vertex_count()));
        for (int v = 0; v < src.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = src.degree(a), db = src.degree(b);
            if (da != db) return da > db;
            return a < b;
        });
        level_of.assign(static_cast<std::size_t>(src.vertex_count()), 0);
        for (std::size_t i = 0; i < order.size(); ++i)
            level_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        assigned.assign(static_cast<std::size_t>(src.vertex_count()), -1);
        used_tgt.assign(static_cast<std::size_t>(tgt.vertex_count()), false);
    }

    /// Constraint between source vertices u (assigned candidate cu) and w
    /// (candidate cw): every source edge must have a target edge of the
    /// required sign; an isomorphism needs exact multiplicities both ways.
    bool pair_ok(int u, int cu, int w, int cw) const {
        int tu = cu / 2, bu = cu % 2;
        int tw = cw / 2, bw = cw % 2;
        bool flip = bu != bw;
        for (int s = 0; s < 2; ++s) {
            Sign ssign = s == 0 ? Sign::plus : Sign::minus;
            int nsrc = sidx.edges_between(u, w, ssign);
            Sign req = flip ? negated(ssign) : ssign;
            int ntgt = tidx.edges_between(tu, tw, req);
            if (iso ? (ntgt != nsrc) : (nsrc > 0 && ntgt == 0)) return false;
        }
        return true;
    }

    /// Self constraint (loops) for candidate c of vertex u.
    bool self_ok(int u, int c) const {
        int t = c / 2;
        for (int s = 0; s < 2; ++s) {
            Sign ssign = s == 0 ? Sign::plus : Sign::minus;
            int nsrc = sidx.edges_between(u, u, ssign);
            int ntgt = tidx.edges_between(t, t, ssign);
            if (iso ? (ntgt != nsrc) : (nsrc > 0 && ntgt == 0)) return false;
        }
        if (iso && tgt.degree(t) != src.degree(u)) return false;
        return true;
    }

    bool search(std::vector<std::vector<char>>& cand, std::size_t depth,
                std::optional<Homomorphism>& out) {
        if (depth == order.size()) {
            out = extract();
            return true;
        }
        int u = order[depth];
        for (int c = 0; c < nc; ++c) {
            if (!cand[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]) continue;
            if (!opts.allow_switching && c % 2 == 1) continue;
            if (iso && used_tgt[static_cast<std::size_t>(c / 2)]) continue;
            if (++nodes > opts.budget) {
                out_of_budget = true;
                return false;
            }

            assigned[static_cast<std::size_t>(u)] = c;
            if (iso) used_tgt[static_cast<std::size_t>(c / 2)] = true;

            std::vector<std::vector<char>> next = cand;
            bool dead = false;
            for (std::size_t i = depth + 1; i < order.size() && !dead; ++i) {
                int w = order[i];
                // in hom mode only adjacency constrains; an isomorphism also
                // forbids images of non-adjacent pairs being adjacent
                if (!iso && sidx.edges_between(u, w, Sign::plus) == 0 &&
                    sidx.edges_between(u, w, Sign::minus) == 0)
                    continue;
                auto& cw = next[static_cast<std::size_t>(w)];
                bool any = false;
                for (int c2 = 0; c2 < nc; ++c2) {
                    if (!cw[static_cast<std::size_t>(c2)]) continue;
                    if (!pair_ok(u, c, w, c2))
                        cw[static_cast<std::size_t>(c2)] = 0;
                    else
                        any = true;
                }
                if (!any) dead = true;
            }
            if (!dead && search(next, depth + 1, out)) return true;

            assigned[static_cast<std::size_t>(u)] = -1;
            if (iso) used_tgt[static_cast<std::size_t>(c / 2)] = false;
            if (out_of_budget) return false;
        }
        return false;
    }

    Homomorphism extract() const {
        Homomorphism h;
        h.switch_set = SwitchSet(src.vertex_count());
        h.vertex_map.resize(static_cast<std::size_t>(src.vertex_count()));
        for (int v = 0; v < src.vertex_count(); ++v) {
            int c = assigned[static_cast<std::size_t>(v)];
            h.vertex_map[static_cast<std::size_t>(v)] = c / 2;
            if (c % 2 == 1) h.switch_set.insert(v);
        }
        h.edge_map.resize(static_cast<std::size_t>(src.edge_count()));
        if (iso) {
            // match parallel classes positionally, in id order on both sides
            std::vector<int> taken(static_cast<std::size_t>(tgt.edge_count()), 0);
            for (int e = 0; e < src.edge_count(); ++e) {
                const Edge& ed = src.edge(e);
                Sign req = required_sign(ed);
                int tu = h.vertex_map[static_cast<std::size_t>(ed.u)];
                int tv = h.vertex_map[static_cast<std::size_t>(ed.v)];
                int pick = -1;
                for (int f = 0; f < tgt.edge_count(); ++f) {
                    if (taken[static_cast<std::size_t>(f)]) continue;
                    const Edge& fd = tgt.edge(f);
                    bool same = (fd.u == tu && fd.v == tv) || (fd.u == tv && fd.v == tu);
                    if (same && fd.sign == req) {
                        pick = f;
                        break;
                    }
                }
                if (pick < 0) throw std::logic_error("isomorphism edge matching failed");
                taken[static_cast<std::size_t>(pick)] = 1;
                h.edge_map[static_cast<std::size_t>(e)] = pick;
            }
        } else {
            for (int e = 0; e < src.edge_count(); ++e) {
                const Edge& ed = src.edge(e);
                int tu = h.vertex_map[static_cast<std::size_t>(ed.u)];
                int tv = h.vertex_map[static_cast<std::size_t>(ed.v)];
                int f = tidx.first_edge(tu, tv, required_sign(ed));
                if (f < 0) throw std::logic_error("edge image vanished after search");
                h.edge_map[static_cast<std::size_t>(e)] = f;
            }
        }
        return h;
    }

    Sign required_sign(const Edge& ed) const {
        int bu = assigned[static_cast<std::size_t>(ed.u)] % 2;
        int bv = assigned[static_cast<std::size_t>(ed.v)] % 2;
        return bu != bv ? negated(ed.sign) : ed.sign;
    }

    HomSearchResult run() {
        HomSearchResult res;
        std::vector<std::vector<char>> cand(
            static_cast<std::size_t>(src.vertex_count()),
            std::vector<char>(static_cast<std::size_t>(nc), 1));
        for (int v = 0; v < src.vertex_count(); ++v)
            for (int c = 0; c < nc; ++c)
                if (!self_ok(v, c)) cand[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = 0;

        std::optional<Homomorphism> out;
        bool ok = search(cand, 0, out);
        res.nodes = nodes;
        if (ok) {
            res.status = SearchStatus::found;
            res.hom = std::move(out);
        } else {
            res.status = out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::none;
        }
        return res;
    }
};

std::vector<int> sorted_degrees(const SignedGraph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

VerifyReport verify_hom(const SignedGraph& src, const SignedGraph& tgt, const Homomorphism& h) {
    if (static_cast<int>(h.vertex_map.size()) != src.vertex_count())
        throw ValidationError("vertex map is not total");
    if (static_cast<int>(h.edge_map.size()) != src.edge_count())
        throw ValidationError("edge map is not total");
    if (h.switch_set.universe_size() != src.vertex_count())
        throw ValidationError("switch set universe mismatch");
    for (int v : h.vertex_map) tgt.check_vertex(v);
    for (int e : h.edge_map) tgt.check_edge(e);

    // incidence preservation
    for (int e = 0; e < src.edge_count(); ++e) {
        const Edge& ed = src.edge(e);
        const Edge& fd = tgt.edge(h.edge_map[static_cast<std::size_t>(e)]);
        int iu = h.vertex_map[static_cast<std::size_t>(ed.u)];
        int iv = h.vertex_map[static_cast<std::size_t>(ed.v)];
        bool ok = (fd.u == iu && fd.v == iv) || (fd.u == iv && fd.v == iu);
        if (!ok)
            return VerifyReport{false, "incidence broken at edge " + std::to_string(e)};
    }

    // post-switch edge signs
    bool signs_ok = true;
    std::string sign_reason;
    for (int e = 0; e < src.edge_count(); ++e) {
        const Edge& ed = src.edge(e);
        Sign after = h.switch_set.crosses(ed.u, ed.v) ? negated(ed.sign) : ed.sign;
        if (after != tgt.edge(h.edge_map[static_cast<std::size_t>(e)]).sign) {
            signs_ok = false;
            sign_reason = "sign not preserved at edge " + std::to_string(e);
            break;
        }
    }

    // closed-walk criterion on fundamental cycles of the pullback
    bool walks_ok = true;
    SpanningForest f = spanning_forest(src);
    for (int e = 0; e < src.edge_count() && walks_ok; ++e) {
        if (f.contains_edge(e)) continue;
        Walk c = fundamental_cycle(src, f, e);
        Sign source_sign = sign_of_walk(src, c);
        Sign image_sign = Sign::plus;
        for (int ce : c.edges)
            image_sign *= tgt.edge(h.edge_map[static_cast<std::size_t>(ce)]).sign;
        if (source_sign != image_sign) walks_ok = false;
    }

    if (signs_ok && !walks_ok)
        throw std::logic_error("edge-sign criterion passed but a closed walk changes sign");
    if (signs_ok) return VerifyReport{true, ""};
    return VerifyReport{false, sign_reason};
}

HomSearchResult find_hom(const SignedGraph& src, const SignedGraph& tgt,
                         const SearchOptions& options) {
    if (options.use_girth_filter) {
        NoHomFilterResult f = no_hom_filter(src, tgt);
        if (!f.pass) return HomSearchResult{SearchStatus::none, std::nullopt, 0};
    }
    Searcher s(src, tgt, options, false);
    HomSearchResult res = s.run();
    if (res.found()) {
        VerifyReport rep = verify_hom(src, tgt, *res.hom);
        if (!rep.valid) throw std::logic_error("search produced an invalid homomorphism: " + rep.reason);
    }
    return res;
}

namespace {

/// Inverse of a bijective homomorphism; the inverse switch set is the image
/// of the forward one.
Homomorphism invert_iso(const Homomorphism& h) {
    Homomorphism inv;
    inv.vertex_map.assign(h.vertex_map.size(), -1);
    inv.edge_map.assign(h.edge_map.size(), -1);
    inv.switch_set = SwitchSet(static_cast<int>(h.vertex_map.size()));
    for (std::size_t v = 0; v < h.vertex_map.size(); ++v) {
        inv.vertex_map[static_cast<std::size_t>(h.vertex_map[v])] = static_cast<int>(v);
        if (h.switch_set.contains(static_cast<int>(v)))
            inv.switch_set.insert(h.vertex_map[v]);
    }
    for (std::size_t e = 0; e < h.edge_map.size(); ++e)
        inv.edge_map[static_cast<std::size_t>(h.edge_map[e])] = static_cast<int>(e);
    return inv;
}

HomSearchResult iso_search(const SignedGraph& g1, const SignedGraph& g2,
                           const SearchOptions& options, bool color_preserving) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return HomSearchResult{SearchStatus::none, std::nullopt, 0};
    if (sorted_degrees(g1) != sorted_degrees(g2))
        return HomSearchResult{SearchStatus::none, std::nullopt, 0};
    if (options.use_girth_filter && !girth_profile(g1).values_equal(girth_profile(g2)))
        return HomSearchResult{SearchStatus::none, std::nullopt, 0};

    SearchOptions o = options;
    o.allow_switching = !color_preserving;
    Searcher s(g1, g2, o, true);
    HomSearchResult res = s.run();
    if (res.found()) {
        VerifyReport rep = verify_hom(g1, g2, *res.hom);
        if (!rep.valid) throw std::logic_error("search produced an invalid isomorphism: " + rep.reason);
        VerifyReport inv = verify_hom(g2, g1, invert_iso(*res.hom));
        if (!inv.valid) throw std::logic_error("isomorphism inverse fails to verify: " + inv.reason);
    }
    return res;
}

}  // namespace

HomSearchResult switching_iso(const SignedGraph& g1, const SignedGraph& g2,
                              const SearchOptions& options) {
    return iso_search(g1, g2, options, false);
}

HomSearchResult sign_iso(const SignedGraph& g1, const SignedGraph& g2,
                         const SearchOptions& options) {
    return iso_search(g1, g2, options, true);
}

Homomorphism compose_hom(const SignedGraph& g1, const SignedGraph& g2, const SignedGraph& g3,
                         const Homomorphism& h12, const Homomorphism& h23) {
    if (static_cast<int>(h12.vertex_map.size()) != g1.vertex_count() ||
        static_cast<int>(h23.vertex_map.size()) != g2.vertex_count())
        throw ValidationError("composition maps do not match the given graphs");
    Homomorphism h;
    h.vertex_map.resize(static_cast<std::size_t>(g1.vertex_count()));
    for (int v = 0; v < g1.vertex_count(); ++v)
        h.vertex_map[static_cast<std::size_t>(v)] =
            h23.vertex_map[static_cast<std::size_t>(h12.vertex_map[static_cast<std::size_t>(v)])];
    h.edge_map.resize(static_cast<std::size_t>(g1.edge_count()));
    for (int e = 0; e < g1.edge_count(); ++e)
        h.edge_map[static_cast<std::size_t>(e)] =
            h23.edge_map[static_cast<std::size_t>(h12.edge_map[static_cast<std::size_t>(e)])];

    // the pullback signature recovers the composite switch set exactly
    SignedGraph pullback(g1.vertex_count());
    for (int e = 0; e < g1.edge_count(); ++e) {
        const Edge& ed = g1.edge(e);
        pullback.add_edge(ed.u, ed.v, g3.edge(h.edge_map[static_cast<std::size_t>(e)]).sign);
    }
    EquivalenceResult eq = switching_equivalent(g1, pullback);
    if (!eq.equivalent) throw std::logic_error("composite map does not preserve closed walk signs");
    h.switch_set = eq.switch_set;
    return h;
}

namespace {

struct Subgraph {
    SignedGraph graph;
    std::vector<int> vertex_ids;  // sub -> original
    std::vector<int> edge_ids;
};

Subgraph make_subgraph(const SignedGraph& g, const std::vector<bool>& keep_vertex,
                       const std::vector<bool>& keep_edge) {
    Subgraph s;
    std::vector<int> vindex(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!keep_vertex[static_cast<std::size_t>(v)]) continue;
        vindex[static_cast<std::size_t>(v)] = s.graph.add_vertex();
        s.vertex_ids.push_back(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!keep_edge[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = g.edge(e);
        if (vindex[static_cast<std::size_t>(ed.u)] < 0 || vindex[static_cast<std::size_t>(ed.v)] < 0)
            throw std::logic_error("subgraph keeps an edge without its endpoints");
        s.graph.add_edge(vindex[static_cast<std::size_t>(ed.u)],
                         vindex[static_cast<std::size_t>(ed.v)], ed.sign);
        s.edge_ids.push_back(e);
    }
    return s;
}

/// Searches for a retraction of g onto a maximal proper subgraph (one edge,
/// or one isolated vertex, removed); expressed back in g's own ids.
std::optional<Homomorphism> find_retraction(const SignedGraph& g, const SearchOptions& options,
                                            std::uint64_t& budget_left, bool& exhausted) {
    std::vector<bool> all_v(static_cast<std::size_t>(g.vertex_count()), true);
    std::vector<bool> all_e(static_cast<std::size_t>(g.edge_count()), true);

    auto attempt = [&](const Subgraph& sub) -> std::optional<Homomorphism> {
        SearchOptions o = options;
        o.budget = budget_left;
        HomSearchResult r = find_hom(g, sub.graph, o);
        budget_left = budget_left > r.nodes ? budget_left - r.nodes : 0;
        if (r.status == SearchStatus::budget_exceeded) {
            exhausted = true;
            return std::nullopt;
        }
        if (!r.found()) return std::nullopt;
        Homomorphism h = *r.hom;
        for (int& v : h.vertex_map) v = sub.vertex_ids[static_cast<std::size_t>(v)];
        for (int& e : h.edge_map) e = sub.edge_ids[static_cast<std::size_t>(e)];
        return h;
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        auto keep_e = all_e;
        keep_e[static_cast<std::size_t>(e)] = false;
        if (auto h = attempt(make_subgraph(g, all_v, keep_e))) return h;
        if (exhausted) return std::nullopt;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.incident(v).empty()) continue;  // only isolated vertices can drop alone
        auto keep_v = all_v;
        keep_v[static_cast<std::size_t>(v)] = false;
        if (auto h = attempt(make_subgraph(g, keep_v, all_e))) return h;
        if (exhausted) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

CoreCheckResult is_core(const SignedGraph& g, const SearchOptions& options) {
    CoreCheckResult res;
    std::uint64_t budget_left = options.budget;
    bool exhausted = false;
    std::optional<Homomorphism> h = find_retraction(g, options, budget_left, exhausted);
    if (exhausted) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    res.status = SearchStatus::found;
    res.core = !h.has_value();
    res.retraction = std::move(h);
    return res;
}

CoreComputation compute_core(const SignedGraph& g, const SearchOptions& options) {
    CoreComputation out;
    SignedGraph current = g;
    std::vector<int> cur_vertex_ids(static_cast<std::size_t>(g.vertex_count()));
    std::vector<int> cur_edge_ids(static_cast<std::size_t>(g.edge_count()));
    for (int v = 0; v < g.vertex_count(); ++v) cur_vertex_ids[static_cast<std::size_t>(v)] = v;
    for (int e = 0; e < g.edge_count(); ++e) cur_edge_ids[static_cast<std::size_t>(e)] = e;
    // g -> current, in current's ids
    std::vector<int> vmap(cur_vertex_ids.size());
    std::vector<int> emap(cur_edge_ids.size());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < emap.size(); ++i) emap[i] = static_cast<int>(i);

    std::uint64_t budget_left = options.budget;
    while (true) {
        bool exhausted = false;
        std::optional<Homomorphism> h = find_retraction(current, options, budget_left, exhausted);
        if (exhausted) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
        if (!h) break;

        // restrict to the image subgraph and recompose the running maps
        std::vector<bool> keep_v(static_cast<std::size_t>(current.vertex_count()), false);
        std::vector<bool> keep_e(static_cast<std::size_t>(current.edge_count()), false);
        for (int v : h->vertex_map) keep_v[static_cast<std::size_t>(v)] = true;
        for (int e : h->edge_map) keep_e[static_cast<std::size_t>(e)] = true;
        Subgraph sub = make_subgraph(current, keep_v, keep_e);

        std::vector<int> vindex(static_cast<std::size_t>(current.vertex_count()), -1);
        for (std::size_t i = 0; i < sub.vertex_ids.size(); ++i)
            vindex[static_cast<std::size_t>(sub.vertex_ids[i])] = static_cast<int>(i);
        std::vector<int> eindex(static_cast<std::size_t>(current.edge_count()), -1);
        for (std::size_t i = 0; i < sub.edge_ids.size(); ++i)
            eindex[static_cast<std::size_t>(sub.edge_ids[i])] = static_cast<int>(i);

        for (int& v : vmap) v = vindex[static_cast<std::size_t>(h->vertex_map[static_cast<std::size_t>(v)])];
        for (int& e : emap) e = eindex[static_cast<std::size_t>(h->edge_map[static_cast<std::size_t>(e)])];
        for (std::size_t i = 0; i < sub.vertex_ids.size(); ++i)
            sub.vertex_ids[i] = cur_vertex_ids[static_cast<std::size_t>(sub.vertex_ids[i])];
        for (std::size_t i = 0; i < sub.edge_ids.size(); ++i)
            sub.edge_ids[i] = cur_edge_ids[static_cast<std::size_t>(sub.edge_ids[i])];
        cur_vertex_ids = sub.vertex_ids;
        cur_edge_ids = sub.edge_ids;
        current = sub.graph;
    }

    out.status = SearchStatus::found;
    out.core = current;
    out.core_vertex_ids = cur_vertex_ids;
    out.core_edge_ids = cur_edge_ids;
    out.retraction.vertex_map = vmap;
    out.retraction.edge_map = emap;
    // recover the switch set from the pullback signature
    SignedGraph pullback(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        pullback.add_edge(ed.u, ed.v, current.edge(emap[static_cast<std::size_t>(e)]).sign);
    }
    EquivalenceResult eq = switching_equivalent(g, pullback);
    if (!eq.equivalent) throw std::logic_error("core retraction does not preserve walk signs");
    out.retraction.switch_set = eq.switch_set;
    return out;
}

}  // namespace sgt

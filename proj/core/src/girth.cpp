#include "sgt/girth.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "sgt/error.hpp"
#include "sgt/walk_enum.hpp"

namespace sgt {

namespace {

constexpr int kPlus = 0;
constexpr int kMinus = 1;

inline int sign_index(Sign s) { return s == Sign::plus ? kPlus : kMinus; }

/// Per-source shortest-path layers over (vertex, path sign) states, built
/// inductively: a vertex joins a signed layer only at its own distance, and
/// its sign flags are final once that layer closes.
struct SourceLayers {
    std::vector<int> dist;                     // -1 when unreached
    std::array<std::vector<bool>, 2> reached;  // [sign][vertex]
    std::vector<std::vector<int>> frontier;    // vertices per distance
};

SourceLayers build_layers(const SignedGraph& g, int src) {
    int n = g.vertex_count();
    SourceLayers L;
    L.dist.assign(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < 2; ++s) L.reached[s].assign(static_cast<std::size_t>(n), false);
    L.dist[static_cast<std::size_t>(src)] = 0;
    L.reached[kPlus][static_cast<std::size_t>(src)] = true;
    L.frontier.push_back({src});

    int k = 0;
    while (true) {
        const std::vector<int>& cur = L.frontier[static_cast<std::size_t>(k)];
        std::vector<int> next;
        for (int u : cur) {
            for (int e : g.incident(u)) {
                int w = g.other_end(e, u);
                int dw = L.dist[static_cast<std::size_t>(w)];
                if (dw != -1 && dw != k + 1) continue;
                for (int s = 0; s < 2; ++s) {
                    if (!L.reached[s][static_cast<std::size_t>(u)]) continue;
                    int ns = s ^ sign_index(g.edge(e).sign);
                    if (dw == -1) {
                        dw = k + 1;
                        L.dist[static_cast<std::size_t>(w)] = dw;
                        next.push_back(w);
                    }
                    L.reached[ns][static_cast<std::size_t>(w)] = true;
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        L.frontier.push_back(std::move(next));
        ++k;
    }
    return L;
}

struct PerTypeBest {
    GirthValue value = GirthValue::unbounded();
    std::optional<Walk> witness;

    void offer(int length, const std::function<Walk()>& make) {
        if (GirthValue::finite(length) < value) {
            value = GirthValue::finite(length);
            witness = make();
        }
    }
};

/// Exact-length walk reachability from one source over (vertex, sign)
/// states, with one parent pointer per state and layer. Walk layers, not
/// shortest-path layers: a minimum-length closed walk of a given type need
/// not split into shortest paths (the non-cyclic realizations of Figure-1
/// kind are found only by the unpruned layers).
struct WalkLayers {
    int n;
    // membership and parents per layer k, state index = 2v + s
    std::vector<std::vector<bool>> in;
    std::vector<std::vector<int>> parent_v, parent_s, parent_e;

    WalkLayers(const SignedGraph& g, int src, int max_k) : n(g.vertex_count()) {
        in.reserve(static_cast<std::size_t>(max_k) + 1);
        in.emplace_back(static_cast<std::size_t>(2 * n), false);
        parent_v.emplace_back(static_cast<std::size_t>(2 * n), -1);
        parent_s.emplace_back(static_cast<std::size_t>(2 * n), -1);
        parent_e.emplace_back(static_cast<std::size_t>(2 * n), -1);
        in[0][static_cast<std::size_t>(2 * src + kPlus)] = true;
        for (int k = 1; k <= max_k; ++k) {
            const std::vector<bool>& prev = in.back();
            std::vector<bool> cur(static_cast<std::size_t>(2 * n), false);
            std::vector<int> pv(static_cast<std::size_t>(2 * n), -1);
            std::vector<int> ps(static_cast<std::size_t>(2 * n), -1);
            std::vector<int> pe(static_cast<std::size_t>(2 * n), -1);
            bool any = false;
            for (int u = 0; u < n; ++u) {
                for (int s = 0; s < 2; ++s) {
                    if (!prev[static_cast<std::size_t>(2 * u + s)]) continue;
                    for (int e : g.incident(u)) {
                        int w = g.other_end(e, u);
                        int ns = s ^ sign_index(g.edge(e).sign);
                        std::size_t idx = static_cast<std::size_t>(2 * w + ns);
                        if (!cur[idx]) {
                            cur[idx] = true;
                            pv[idx] = u;
                            ps[idx] = s;
                            pe[idx] = e;
                            any = true;
                        }
                    }
                }
            }
            if (!any) break;
            in.push_back(std::move(cur));
            parent_v.push_back(std::move(pv));
            parent_s.push_back(std::move(ps));
            parent_e.push_back(std::move(pe));
        }
    }

    int layers() const { return static_cast<int>(in.size()); }
    bool at(int k, int v, int s) const {
        return in[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * v + s)];
    }

    /// The recorded walk of length exactly k from the source to (v, s).
    Walk walk_to(int k, int v, int s) const {
        Walk back = Walk::trivial(v);
        int cv = v, cs = s;
        for (int l = k; l > 0; --l) {
            std::size_t idx = static_cast<std::size_t>(2 * cv + cs);
            back.edges.push_back(parent_e[static_cast<std::size_t>(l)][idx]);
            back.verts.push_back(parent_v[static_cast<std::size_t>(l)][idx]);
            int pvv = parent_v[static_cast<std::size_t>(l)][idx];
            int pss = parent_s[static_cast<std::size_t>(l)][idx];
            cv = pvv;
            cs = pss;
        }
        return inverse(back);
    }
};

/// One source's contribution to the three nonzero walk types, by the case
/// rules over exact-length walk layers.
///
/// The cutoff k <= |V| is enough because a finite walk-girth never exceeds
/// 2|V|: a minimum witness is either a cycle (length <= n) or a cycle C1
/// spliced with a shorter closed walk, which unfolds to C1 + P + C2 with C2
/// a cycle and P a connecting walk traversed twice; minimality forces the
/// three parts to be internally disjoint, so |C1| + |C2| + |P| <= n + 1 and
/// the length |C1| + |C2| + 2|P| is at most 2n (two loops joined by a
/// spanning path attain it). Even events fire at 2k <= 2n and odd ones at
/// 2k+1 < 2n, both within k <= n.
void scan_source(const SignedGraph& g, int src, std::array<PerTypeBest, 4>& best) {
    int n = g.vertex_count();
    WalkLayers L(g, src, n);

    bool found10 = false, found01 = false, found11 = false;
    for (int k = 0; k < L.layers() && !(found10 && found01 && found11); ++k) {
        // ij = 10: both signs reach the same vertex by length-k walks
        if (!found10 && k >= 1) {
            for (int v = 0; v < n && !found10; ++v) {
                if (L.at(k, v, kPlus) && L.at(k, v, kMinus)) {
                    found10 = true;
                    best[kType10.index()].offer(2 * k, [&] {
                        return concat(L.walk_to(k, v, kPlus),
                                      inverse(L.walk_to(k, v, kMinus)));
                    });
                }
            }
        }
        // ij = 01 / 11: an edge joining two length-k states closes a walk of
        // length 2k+1 whose sign is the product of the state signs and the
        // edge sign
        if (found01 && found11) continue;
        for (int e = 0; e < g.edge_count() && !(found01 && found11); ++e) {
            const Edge& ed = g.edge(e);
            for (int sa = 0; sa < 2; ++sa) {
                if (!L.at(k, ed.u, sa)) continue;
                for (int sb = 0; sb < 2; ++sb) {
                    if (!L.at(k, ed.v, sb)) continue;
                    if (ed.is_loop() && sa > sb) continue;  // unordered for loops
                    int product = sa ^ sb ^ sign_index(ed.sign);
                    bool& got = product == kMinus ? found11 : found01;
                    if (got) continue;
                    got = true;
                    int idx = (product == kMinus ? kType11 : kType01).index();
                    best[static_cast<std::size_t>(idx)].offer(2 * k + 1, [&] {
                        Walk mid{{ed.u, ed.v}, {e}};
                        return concat(concat(L.walk_to(k, ed.u, sa), mid),
                                      inverse(L.walk_to(k, ed.v, sb)));
                    });
                }
            }
        }
    }
}

std::array<PerTypeBest, 4> profile_search(const SignedGraph& g) {
    std::array<PerTypeBest, 4> best;
    // ij = 00 is 2 as soon as there is any edge: traverse it twice
    if (g.edge_count() > 0) {
        const Edge& e0 = g.edge(0);
        best[kType00.index()].offer(2, [&] {
            return Walk{{e0.u, e0.v, e0.u}, {0, 0}};
        });
    }
    for (int v = 0; v < g.vertex_count(); ++v) scan_source(g, v, best);
    return best;
}

/// Exact-length reachability from x over (vertex, sign) states.
struct ClosedWalkDp {
    // layer[l][v][s] after construction up to max_len
    std::vector<std::array<std::vector<bool>, 2>> layer;

    ClosedWalkDp(const SignedGraph& g, int x, int max_len) {
        int n = g.vertex_count();
        layer.resize(static_cast<std::size_t>(max_len) + 1);
        for (auto& l : layer) {
            l[0].assign(static_cast<std::size_t>(n), false);
            l[1].assign(static_cast<std::size_t>(n), false);
        }
        layer[0][kPlus][static_cast<std::size_t>(x)] = true;
        for (int l = 1; l <= max_len; ++l) {
            for (int v = 0; v < n; ++v) {
                for (int s = 0; s < 2; ++s) {
                    if (!layer[static_cast<std::size_t>(l - 1)][s][static_cast<std::size_t>(v)])
                        continue;
                    for (int e : g.incident(v)) {
                        int w = g.other_end(e, v);
                        int ns = s ^ sign_index(g.edge(e).sign);
                        layer[static_cast<std::size_t>(l)][ns][static_cast<std::size_t>(w)] = true;
                    }
                }
            }
        }
    }

    bool closed_walk_exists(int x, int len, Sign s) const {
        if (len >= static_cast<int>(layer.size())) throw std::logic_error("dp length overflow");
        return layer[static_cast<std::size_t>(len)][sign_index(s)][static_cast<std::size_t>(x)];
    }
};

}  // namespace

SignedLayers signed_layers(const SignedGraph& g, int v) {
    g.check_vertex(v);
    SourceLayers L = build_layers(g, v);
    SignedLayers out;
    out.layers.resize(L.frontier.size());
    for (std::size_t k = 0; k < L.frontier.size(); ++k) {
        for (int u : L.frontier[k]) {
            if (L.reached[kPlus][static_cast<std::size_t>(u)]) out.layers[k][0].push_back(u);
            if (L.reached[kMinus][static_cast<std::size_t>(u)]) out.layers[k][1].push_back(u);
        }
    }
    return out;
}

WalkGirthResult walk_girth(const SignedGraph& g, WalkType ij) {
    std::array<PerTypeBest, 4> best = profile_search(g);
    PerTypeBest& b = best[static_cast<std::size_t>(ij.index())];
    return WalkGirthResult{b.value, std::move(b.witness)};
}

GirthProfile girth_profile(const SignedGraph& g) {
    std::array<PerTypeBest, 4> best = profile_search(g);
    GirthProfile p;
    for (int i = 0; i < 4; ++i) {
        p.g[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(i)].value;
        p.witness[static_cast<std::size_t>(i)] = std::move(best[static_cast<std::size_t>(i)].witness);
    }
    return p;
}

NoHomFilterResult no_hom_filter(const SignedGraph& source, const SignedGraph& target) {
    GirthProfile ps = girth_profile(source);
    GirthProfile pt = girth_profile(target);
    for (int i = 0; i < 4; ++i) {
        if (ps.g[static_cast<std::size_t>(i)] < pt.g[static_cast<std::size_t>(i)])
            return NoHomFilterResult{false, WalkType::from_index(i)};
    }
    return NoHomFilterResult{true, kType00};
}

const char* to_string(Realization r) {
    switch (r) {
        case Realization::none: return "none";
        case Realization::cycles_only: return "cycles-only";
        case Realization::walks_only: return "walks-only";
        case Realization::both: return "both";
    }
    return "?";
}

RealizationReport realization_analysis(const SignedGraph& g) {
    GirthProfile p = girth_profile(g);
    RealizationReport rep;
    rep.per_type.fill(Realization::none);

    int max_finite = 0;
    for (int i = 0; i < 4; ++i)
        if (!p.g[static_cast<std::size_t>(i)].is_unbounded())
            max_finite = std::max(max_finite, p.g[static_cast<std::size_t>(i)].value);
    if (max_finite == 0) return rep;

    std::vector<Walk> cycles = all_cycles(g, max_finite);
    std::vector<std::unique_ptr<ClosedWalkDp>> dp(static_cast<std::size_t>(g.vertex_count()));
    auto dp_for = [&](int x) -> ClosedWalkDp& {
        auto& slot = dp[static_cast<std::size_t>(x)];
        if (!slot) slot = std::make_unique<ClosedWalkDp>(g, x, max_finite);
        return *slot;
    };

    for (int i = 0; i < 4; ++i) {
        GirthValue gv = p.g[static_cast<std::size_t>(i)];
        if (gv.is_unbounded()) continue;
        WalkType ij = WalkType::from_index(i);
        int L = gv.value;

        bool cycle_witness = false;
        for (const Walk& c : cycles)
            if (c.length() == L && type_of_walk(g, c) == ij) {
                cycle_witness = true;
                break;
            }

        bool walk_witness = false;
        if (ij == kType00) {
            walk_witness = g.edge_count() > 0;  // any edge traversed twice
        } else {
            // a non-cyclic minimum witness splices a cycle C of another
            // nonzero type t with a closed walk of type ij+t through a
            // vertex of C
            for (const Walk& c : cycles) {
                if (c.length() >= L) continue;
                WalkType t = type_of_walk(g, c);
                if (t == kType00 || t == ij) continue;
                WalkType need = ij + t;
                int rem = L - c.length();
                if (rem % 2 != (need.odd ? 1 : 0)) continue;
                Sign s = need.negative ? Sign::minus : Sign::plus;
                for (std::size_t vi = 0; vi + 1 < c.verts.size() && !walk_witness; ++vi) {
                    int x = c.verts[vi];
                    if (dp_for(x).closed_walk_exists(x, rem, s)) walk_witness = true;
                }
                if (walk_witness) break;
            }
        }

        if (!cycle_witness && !walk_witness)
            throw std::logic_error("finite walk-girth with no witness of either kind");
        rep.per_type[static_cast<std::size_t>(i)] =
            cycle_witness ? (walk_witness ? Realization::both : Realization::cycles_only)
                          : Realization::walks_only;
    }
    return rep;
}

}  // namespace sgt

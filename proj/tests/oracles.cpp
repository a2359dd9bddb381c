#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "sgt/walk_enum.hpp"

namespace sgt::testing {

SignedGraph make_cycle(const std::vector<Sign>& signs) {
    int n = static_cast<int>(signs.size());
    SignedGraph g(n);
    if (n == 1) {
        g.add_edge(0, 0, signs[0]);
        return g;
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, signs[static_cast<std::size_t>(i)]);
    return g;
}

SignedGraph make_complete(int n, Sign s) {
    SignedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, s);
    return g;
}

SignedGraph make_path(int n) {
    SignedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, Sign::plus);
    return g;
}

SignedGraph two_triangle_graph() {
    SignedGraph g(5);
    g.add_edge(0, 1, Sign::plus);
    g.add_edge(1, 2, Sign::plus);
    g.add_edge(2, 0, Sign::plus);
    g.add_edge(0, 3, Sign::plus);
    g.add_edge(3, 4, Sign::minus);
    g.add_edge(4, 0, Sign::plus);
    return g;
}

SignedGraph single_vertex_negative_loop() {
    SignedGraph g(1);
    g.add_edge(0, 0, Sign::minus);
    return g;
}

bool is_connected(const SignedGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int e : g.incident(u)) {
            int w = g.other_end(e, u);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.vertex_count();
}

void for_each_multigraph(int n, int e, const std::function<void(const SignedGraph&)>& visit) {
    std::vector<std::pair<int, int>> types;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) types.emplace_back(u, v);

    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            SignedGraph g(n);
            for (int t : chosen)
                g.add_edge(types[static_cast<std::size_t>(t)].first,
                           types[static_cast<std::size_t>(t)].second, Sign::plus);
            visit(g);
            return;
        }
        for (int t = start; t < static_cast<int>(types.size()); ++t) {
            chosen.push_back(t);
            rec(t, left - 1);
            chosen.pop_back();
        }
    };
    rec(0, e);
}

void for_each_signature(const SignedGraph& underlying,
                        const std::function<void(const SignedGraph&)>& visit) {
    int m = underlying.edge_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        SignedGraph g(underlying.vertex_count());
        for (int e = 0; e < m; ++e) {
            const Edge& ed = underlying.edge(e);
            g.add_edge(ed.u, ed.v, ((bits >> e) & 1) ? Sign::minus : Sign::plus);
        }
        visit(g);
    }
}

void for_each_simple_graph(int n, const std::function<void(const SignedGraph&)>& visit) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        SignedGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((bits >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second, Sign::plus);
        visit(g);
    }
}

std::array<GirthValue, 4> dp_girth(const SignedGraph& g, int max_len) {
    std::array<GirthValue, 4> best;
    best.fill(GirthValue::unbounded());
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<std::array<bool, 2>> cur(static_cast<std::size_t>(n), {false, false});
        cur[static_cast<std::size_t>(v)][0] = true;
        for (int l = 1; l <= max_len; ++l) {
            std::vector<std::array<bool, 2>> next(static_cast<std::size_t>(n), {false, false});
            for (int u = 0; u < n; ++u) {
                for (int s = 0; s < 2; ++s) {
                    if (!cur[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)]) continue;
                    for (int e : g.incident(u)) {
                        int w = g.other_end(e, u);
                        int ns = s ^ (is_negative(g.edge(e).sign) ? 1 : 0);
                        next[static_cast<std::size_t>(w)][static_cast<std::size_t>(ns)] = true;
                    }
                }
            }
            cur = next;
            for (int s = 0; s < 2; ++s) {
                if (!cur[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]) continue;
                int idx = s * 2 + (l % 2);
                if (GirthValue::finite(l) < best[static_cast<std::size_t>(idx)])
                    best[static_cast<std::size_t>(idx)] = GirthValue::finite(l);
            }
        }
    }
    return best;
}

std::array<GirthValue, 4> dfs_girth(const SignedGraph& g, int max_len) {
    std::array<GirthValue, 4> best;
    best.fill(GirthValue::unbounded());
    for_each_closed_walk(g, max_len, [&](const Walk& w) {
        WalkType t = type_of_walk(g, w);
        int idx = t.index();
        if (best[static_cast<std::size_t>(idx)].is_unbounded() ||
            w.length() < best[static_cast<std::size_t>(idx)].value)
            best[static_cast<std::size_t>(idx)] = GirthValue::finite(w.length());
        return true;
    });
    return best;
}

bool plain_graph_hom_exists(const SignedGraph& g, const SignedGraph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    if (ng == 0) return true;
    if (nh == 0) return false;

    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(nh),
                                       std::vector<bool>(static_cast<std::size_t>(nh), false));
    for (const Edge& e : h.edges()) {
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    std::vector<int> map(static_cast<std::size_t>(ng), 0);
    while (true) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (!adj[static_cast<std::size_t>(map[static_cast<std::size_t>(e.u)])]
                    [static_cast<std::size_t>(map[static_cast<std::size_t>(e.v)])]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        int i = 0;
        while (i < ng && map[static_cast<std::size_t>(i)] == nh - 1) {
            map[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == ng) return false;
        ++map[static_cast<std::size_t>(i)];
    }
}

int brute_chromatic_number(const SignedGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int e : g.incident(v)) {
                    int w = g.other_end(e, v);
                    if (w == v) return false;  // loop: uncolorable
                    if (color[static_cast<std::size_t>(w)] == c) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                color[static_cast<std::size_t>(v)] = c;
                if (rec(v + 1)) return true;
                color[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        };
        if (rec(0)) return k;
    }
    return n;
}

namespace {

std::vector<int> negative_ids_after_switch(const SignedGraph& g, std::uint64_t bits) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool flip = (((bits >> ed.u) & 1) != ((bits >> ed.v) & 1));
        Sign s = flip ? negated(ed.sign) : ed.sign;
        if (is_negative(s)) out.push_back(e);
    }
    return out;
}

}  // namespace

bool brute_disjoint_switch_exists(const SignedGraph& g) {
    std::vector<int> original = negative_edge_ids(g);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) {
        std::vector<int> after = negative_ids_after_switch(g, bits);
        std::vector<int> common;
        std::set_intersection(original.begin(), original.end(), after.begin(), after.end(),
                              std::back_inserter(common));
        if (common.empty()) return true;
    }
    return false;
}

std::uint64_t brute_count_switching_classes(const SignedGraph& g) {
    std::vector<Walk> cycles = all_cycles(g);
    std::set<std::vector<bool>> classes;
    for_each_signature(g, [&](const SignedGraph& sigma) {
        std::vector<bool> negset;
        negset.reserve(cycles.size());
        for (const Walk& c : cycles) negset.push_back(is_negative(sign_of_walk(sigma, c)));
        classes.insert(negset);
    });
    return classes.size();
}

int brute_no_positive_loop_image_order(const SignedGraph& g) {
    int n = g.vertex_count();
    int best = n;
    std::uint64_t switchings = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t bits = 0; bits < switchings; ++bits) {
        SwitchSet x(n);
        for (int v = 1; v < n; ++v)
            if ((bits >> (v - 1)) & 1) x.insert(v);
        SignedGraph sw = switched(g, x);

        // fewest blocks with no positive edge inside a block
        std::vector<int> block(static_cast<std::size_t>(n), -1);
        std::function<bool(int, int)> rec = [&](int v, int blocks) -> bool {
            if (blocks > best) return false;
            if (v == n) {
                best = std::min(best, blocks);
                return true;
            }
            bool any = false;
            for (int b = 0; b <= blocks && b < best; ++b) {
                bool ok = true;
                for (int e : g.incident(v)) {
                    int w = g.other_end(e, v);
                    int wb = w == v ? b : block[static_cast<std::size_t>(w)];
                    if (wb == b && sw.edge(e).sign == Sign::plus) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                block[static_cast<std::size_t>(v)] = b;
                if (rec(v + 1, std::max(blocks, b + 1))) any = true;
                block[static_cast<std::size_t>(v)] = -1;
            }
            return any;
        };
        rec(0, 0);
    }
    return best;
}

SignedGraph random_signed_multigraph(std::mt19937& rng, int n, int m, bool loops) {
    SignedGraph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < m; ++i) {
        int u = pick(rng);
        int v = pick(rng);
        if (!loops)
            while (v == u) v = pick(rng);
        g.add_edge(u, v, coin(rng) ? Sign::minus : Sign::plus);
    }
    return g;
}

SignedGraph random_balanced_graph(std::mt19937& rng, int n, double edge_prob) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    SignedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < edge_prob) g.add_edge(u, v, Sign::plus);
    SwitchSet x(n);
    for (int v = 0; v < n; ++v)
        if (coin(rng)) x.insert(v);
    return switched(g, x);
}

}  // namespace sgt::testing

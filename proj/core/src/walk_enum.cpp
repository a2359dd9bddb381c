#include "sgt/walk_enum.hpp"

#include "sgt/error.hpp"

namespace sgt {

namespace {

struct DfsBudget {
    std::uint64_t steps = 0;
    std::uint64_t cap;
    void tick() {
        if (++steps > cap) throw BudgetError("walk enumeration exceeded its cap");
    }
};

}  // namespace

std::vector<std::vector<Walk>> walks_between(const SignedGraph& g, int x, int y, int max_len,
                                             std::uint64_t cap) {
    g.check_vertex(x);
    g.check_vertex(y);
    std::vector<std::vector<Walk>> out(static_cast<std::size_t>(max_len) + 1);
    DfsBudget budget{0, cap};
    Walk cur = Walk::trivial(x);

    std::function<void()> rec = [&]() {
        budget.tick();
        if (cur.end() == y) out[static_cast<std::size_t>(cur.length())].push_back(cur);
        if (cur.length() == max_len) return;
        int at = cur.end();
        for (int e : g.incident(at)) {
            int w = g.other_end(e, at);
            cur.edges.push_back(e);
            cur.verts.push_back(w);
            rec();
            cur.edges.pop_back();
            cur.verts.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<std::vector<std::vector<Walk>>> walks_from(const SignedGraph& g, int x, int max_len,
                                                       std::uint64_t cap) {
    g.check_vertex(x);
    std::vector<std::vector<std::vector<Walk>>> out(
        static_cast<std::size_t>(g.vertex_count()),
        std::vector<std::vector<Walk>>(static_cast<std::size_t>(max_len) + 1));
    DfsBudget budget{0, cap};
    Walk cur = Walk::trivial(x);

    std::function<void()> rec = [&]() {
        budget.tick();
        out[static_cast<std::size_t>(cur.end())][static_cast<std::size_t>(cur.length())]
            .push_back(cur);
        if (cur.length() == max_len) return;
        int at = cur.end();
        for (int e : g.incident(at)) {
            int w = g.other_end(e, at);
            cur.edges.push_back(e);
            cur.verts.push_back(w);
            rec();
            cur.edges.pop_back();
            cur.verts.pop_back();
        }
    };
    rec();
    return out;
}

bool for_each_closed_walk(const SignedGraph& g, int max_len,
                          const std::function<bool(const Walk&)>& visit, std::uint64_t cap) {
    DfsBudget budget{0, cap};
    bool keep_going = true;
    Walk cur;

    std::function<void(int)> rec = [&](int start) {
        if (!keep_going) return;
        budget.tick();
        if (cur.length() >= 1 && cur.end() == start) {
            if (!visit(cur)) {
                keep_going = false;
                return;
            }
        }
        if (cur.length() == max_len) return;
        int at = cur.end();
        for (int e : g.incident(at)) {
            int w = g.other_end(e, at);
            cur.edges.push_back(e);
            cur.verts.push_back(w);
            rec(start);
            cur.edges.pop_back();
            cur.verts.pop_back();
            if (!keep_going) return;
        }
    };

    for (int v = 0; v < g.vertex_count() && keep_going; ++v) {
        cur = Walk::trivial(v);
        rec(v);
    }
    return keep_going;
}

bool for_each_walk(const SignedGraph& g, int max_len,
                   const std::function<bool(const Walk&)>& visit, std::uint64_t cap) {
    DfsBudget budget{0, cap};
    bool keep_going = true;
    Walk cur;

    std::function<void()> rec = [&]() {
        if (!keep_going) return;
        budget.tick();
        if (!visit(cur)) {
            keep_going = false;
            return;
        }
        if (cur.length() == max_len) return;
        int at = cur.end();
        for (int e : g.incident(at)) {
            int w = g.other_end(e, at);
            cur.edges.push_back(e);
            cur.verts.push_back(w);
            rec();
            cur.edges.pop_back();
            cur.verts.pop_back();
            if (!keep_going) return;
        }
    };

    for (int v = 0; v < g.vertex_count() && keep_going; ++v) {
        cur = Walk::trivial(v);
        rec();
    }
    return keep_going;
}

std::vector<Walk> all_cycles(const SignedGraph& g, int max_len, std::uint64_t cap) {
    int limit = max_len < 0 ? g.edge_count() : max_len;
    std::vector<Walk> out;
    DfsBudget budget{0, cap};
    std::vector<bool> used_v(static_cast<std::size_t>(g.vertex_count()), false);
    Walk cur;

    // cycles are rooted at their smallest vertex; for length >= 2 the two
    // traversal directions are deduplicated by requiring first < last edge id
    std::function<void(int)> rec = [&](int root) {
        budget.tick();
        int at = cur.end();
        for (int e : g.incident(at)) {
            int w = g.other_end(e, at);
            if (w == root && cur.length() >= 1) {
                if (cur.edges.front() < e) {
                    cur.edges.push_back(e);
                    cur.verts.push_back(w);
                    out.push_back(cur);
                    cur.edges.pop_back();
                    cur.verts.pop_back();
                }
                continue;
            }
            if (w <= root || used_v[static_cast<std::size_t>(w)]) continue;
            if (cur.length() + 1 >= limit) continue;  // no room to return
            used_v[static_cast<std::size_t>(w)] = true;
            cur.edges.push_back(e);
            cur.verts.push_back(w);
            rec(root);
            cur.edges.pop_back();
            cur.verts.pop_back();
            used_v[static_cast<std::size_t>(w)] = false;
        }
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        // loops at v are cycles of length 1
        for (int e : g.incident(v))
            if (g.edge(e).is_loop() && limit >= 1) out.push_back(Walk{{v, v}, {e}});
        if (limit < 2) continue;
        cur = Walk::trivial(v);
        rec(v);
    }
    return out;
}

}  // namespace sgt

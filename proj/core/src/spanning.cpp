#include "sgt/spanning.hpp"

#include <algorithm>
#include <queue>

#include "sgt/error.hpp"

namespace sgt {

SpanningForest spanning_forest(const SignedGraph& g) {
    int n = g.vertex_count();
    SpanningForest f;
    f.parent_vertex.assign(static_cast<std::size_t>(n), -1);
    f.parent_edge.assign(static_cast<std::size_t>(n), -1);
    f.depth.assign(static_cast<std::size_t>(n), 0);
    f.component.assign(static_cast<std::size_t>(n), -1);
    f.in_forest.assign(static_cast<std::size_t>(g.edge_count()), false);

    for (int r = 0; r < n; ++r) {
        if (f.component[static_cast<std::size_t>(r)] != -1) continue;
        int comp = static_cast<int>(f.roots.size());
        f.roots.push_back(r);
        f.component[static_cast<std::size_t>(r)] = comp;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e : g.incident(u)) {
                int w = g.other_end(e, u);
                if (f.component[static_cast<std::size_t>(w)] != -1) continue;
                f.component[static_cast<std::size_t>(w)] = comp;
                f.parent_vertex[static_cast<std::size_t>(w)] = u;
                f.parent_edge[static_cast<std::size_t>(w)] = e;
                f.depth[static_cast<std::size_t>(w)] = f.depth[static_cast<std::size_t>(u)] + 1;
                f.in_forest[static_cast<std::size_t>(e)] = true;
                q.push(w);
            }
        }
    }
    return f;
}

Walk forest_path(const SignedGraph& g, const SpanningForest& f, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!f.same_component(u, v))
        throw ValidationError("no forest path: vertices in different components");

    // climb both endpoints to their lowest common ancestor
    std::vector<int> up_v, up_e, down_v, down_e;
    int a = u, b = v;
    while (f.depth[static_cast<std::size_t>(a)] > f.depth[static_cast<std::size_t>(b)]) {
        up_v.push_back(a);
        up_e.push_back(f.parent_edge[static_cast<std::size_t>(a)]);
        a = f.parent_vertex[static_cast<std::size_t>(a)];
    }
    while (f.depth[static_cast<std::size_t>(b)] > f.depth[static_cast<std::size_t>(a)]) {
        down_v.push_back(b);
        down_e.push_back(f.parent_edge[static_cast<std::size_t>(b)]);
        b = f.parent_vertex[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        up_v.push_back(a);
        up_e.push_back(f.parent_edge[static_cast<std::size_t>(a)]);
        a = f.parent_vertex[static_cast<std::size_t>(a)];
        down_v.push_back(b);
        down_e.push_back(f.parent_edge[static_cast<std::size_t>(b)]);
        b = f.parent_vertex[static_cast<std::size_t>(b)];
    }

    Walk w;
    w.verts = std::move(up_v);
    w.verts.push_back(a);
    w.edges = std::move(up_e);
    for (std::size_t i = down_v.size(); i-- > 0;) {
        w.edges.push_back(down_e[i]);
        w.verts.push_back(down_v[i]);
    }
    return w;
}

Walk fundamental_cycle(const SignedGraph& g, const SpanningForest& f, int e) {
    g.check_edge(e);
    if (f.contains_edge(e))
        throw ValidationError("edge " + std::to_string(e) + " belongs to the forest");
    const Edge& ed = g.edge(e);
    if (!f.same_component(ed.u, ed.v))
        throw ValidationError("edge endpoints lie in different forest components");
    Walk w;
    w.verts = {ed.u, ed.v};
    w.edges = {e};
    if (ed.is_loop()) return w;
    return concat(w, forest_path(g, f, ed.v, ed.u));
}

}  // namespace sgt

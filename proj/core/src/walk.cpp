#include "sgt/walk.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sgt/error.hpp"

namespace sgt {

void validate_walk(const SignedGraph& g, const Walk& w) {
    if (w.verts.empty()) throw ValidationError("walk has no vertices");
    if (w.verts.size() != w.edges.size() + 1)
        throw ValidationError("walk has " + std::to_string(w.verts.size()) + " vertices but " +
                              std::to_string(w.edges.size()) + " edges");
    for (int v : w.verts) g.check_vertex(v);
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        g.check_edge(w.edges[i]);
        const Edge& e = g.edge(w.edges[i]);
        int a = w.verts[i];
        int b = w.verts[i + 1];
        bool ok = (e.u == a && e.v == b) || (e.u == b && e.v == a);
        if (!ok)
            throw ValidationError("walk invalid at index " + std::to_string(i) + ": edge " +
                                  std::to_string(w.edges[i]) + " does not join vertices " +
                                  std::to_string(a) + " and " + std::to_string(b));
    }
}

bool walk_is_valid(const SignedGraph& g, const Walk& w) {
    try {
        validate_walk(g, w);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

Sign sign_of_walk(const SignedGraph& g, const Walk& w) {
    validate_walk(g, w);
    Sign s = Sign::plus;
    for (int e : w.edges) s *= g.edge(e).sign;
    return s;
}

WalkType type_of_walk(const SignedGraph& g, const Walk& w) {
    if (!w.is_closed()) throw ValidationError("walk type is only defined for closed walks");
    Sign s = sign_of_walk(g, w);
    return WalkType{is_negative(s), w.length() % 2 == 1};
}

Walk inverse(const Walk& w) {
    Walk out = w;
    std::reverse(out.verts.begin(), out.verts.end());
    std::reverse(out.edges.begin(), out.edges.end());
    return out;
}

Walk rotated(const Walk& w, int i) {
    if (!w.is_closed()) throw ValidationError("only closed walks can be rotated");
    int k = w.length();
    if (i < 0 || i > k) throw ValidationError("rotation index out of range");
    if (i == 0 || i == k || k == 0) return w;
    Walk out;
    out.verts.reserve(w.verts.size());
    out.edges.reserve(w.edges.size());
    for (int j = i; j < k; ++j) {
        out.verts.push_back(w.verts[static_cast<std::size_t>(j)]);
        out.edges.push_back(w.edges[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < i; ++j) {
        out.verts.push_back(w.verts[static_cast<std::size_t>(j)]);
        out.edges.push_back(w.edges[static_cast<std::size_t>(j)]);
    }
    out.verts.push_back(w.verts[static_cast<std::size_t>(i)]);
    return out;
}

Walk concat(const Walk& a, const Walk& b) {
    if (a.end() != b.start())
        throw ValidationError("cannot concatenate: walk ends at " + std::to_string(a.end()) +
                              " but the next one starts at " + std::to_string(b.start()));
    Walk out = a;
    out.verts.insert(out.verts.end(), b.verts.begin() + 1, b.verts.end());
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
}

bool is_cycle(const Walk& w) {
    if (!w.is_closed() || w.length() < 1) return false;
    std::set<int> seen_v(w.verts.begin(), w.verts.end() - 1);
    if (seen_v.size() != w.verts.size() - 1) return false;
    std::set<int> seen_e(w.edges.begin(), w.edges.end());
    return seen_e.size() == w.edges.size();
}

std::string to_string(const Walk& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.verts.size(); ++i) {
        if (i > 0) os << " e" << (w.edges[i - 1] + 1) << ' ';
        os << w.verts[i];
    }
    return os.str();
}

}  // namespace sgt

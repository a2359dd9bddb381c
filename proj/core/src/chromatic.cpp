#include "sgt/chromatic.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "sgt/error.hpp"

namespace sgt {

bool satisfies(const GirthProfile& p, const GirthBound& l) {
    return p.of(kType01) >= l.l01 && p.of(kType10) >= l.l10 && p.of(kType11) >= l.l11;
}

bool satisfies(const SignedGraph& g, const GirthBound& l) {
    return satisfies(girth_profile(g), l);
}

namespace {

/// Restricted growth strings with exactly `blocks` classes, visited in
/// lexicographic order. Returns false when the visitor stops the scan.
bool for_each_partition(int n, int blocks, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    bool keep_going = true;

    std::function<void(int, int)> rec = [&](int i, int maxu) {
        if (!keep_going) return;
        if (i == n) {
            if (maxu + 1 == blocks) keep_going = f(rgs);
            return;
        }
        int cap = std::min(maxu + 1, blocks - 1);
        for (int b = 0; b <= cap; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(maxu, b));
            if (!keep_going) return;
        }
    };
    rec(0, -1);
    return keep_going;
}

/// The reduced quotient of a switched graph under a block assignment: at
/// most one edge per (endpoint pair, sign), loops included. Also returns
/// the source-edge -> quotient-edge map.
SignedGraph reduced_quotient(const SignedGraph& g, const std::vector<int>& block, int blocks,
                             std::vector<int>& edge_image) {
    SignedGraph q(blocks);
    std::map<std::tuple<int, int, Sign>, int> seen;
    edge_image.assign(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int a = block[static_cast<std::size_t>(ed.u)];
        int b = block[static_cast<std::size_t>(ed.v)];
        if (a > b) std::swap(a, b);
        auto key = std::make_tuple(a, b, ed.sign);
        auto it = seen.find(key);
        if (it == seen.end()) it = seen.emplace(key, q.add_edge(a, b, ed.sign)).first;
        edge_image[static_cast<std::size_t>(e)] = it->second;
    }
    return q;
}

}  // namespace

ChromaticResult l_chromatic(const SignedGraph& g, const GirthBound& l,
                            const ChromaticOptions& options) {
    if (!satisfies(g, l))
        throw ValidationError("graph does not satisfy the girth bounds L");
    int n = g.vertex_count();
    if (n > options.max_vertices)
        throw BudgetError("l_chromatic enumeration capped at " +
                          std::to_string(options.max_vertices) + " vertices");
    if (n == 0)
        throw ValidationError("L-chromatic number of the empty graph is undefined here");

    std::uint64_t switchings = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;

    for (int blocks = 1; blocks <= n; ++blocks) {
        for (std::uint64_t bits = 0; bits < switchings; ++bits) {
            SwitchSet x(n);
            for (int v = 1; v < n; ++v)
                if ((bits >> (v - 1)) & 1) x.insert(v);
            SignedGraph sw = switched(g, x);

            std::optional<ChromaticResult> found;
            for_each_partition(n, blocks, [&](const std::vector<int>& block) {
                std::vector<int> edge_image;
                SignedGraph q = reduced_quotient(sw, block, blocks, edge_image);
                if (!satisfies(q, l)) return true;  // keep scanning
                ChromaticResult res;
                res.order = blocks;
                res.hom.switch_set = x;
                res.hom.vertex_map = block;
                res.hom.edge_map = edge_image;
                res.witness = std::move(q);
                found = std::move(res);
                return false;
            });
            if (found) {
                VerifyReport rep = verify_hom(g, found->witness, found->hom);
                if (!rep.valid)
                    throw std::logic_error("quotient map failed verification: " + rep.reason);
                return *found;
            }
        }
    }
    throw std::logic_error("no quotient met the bounds, including the identity partition");
}

KlChromaticResult kl_chromatic(const std::vector<SignedGraph>& family, const GirthBound& k,
                               const GirthBound& l, const ChromaticOptions& options) {
    if (!(k.l01 >= l.l01 && k.l10 >= l.l10 && k.l11 >= l.l11))
        throw ValidationError("kl_chromatic requires K >= L componentwise");
    KlChromaticResult out;
    for (const SignedGraph& g : family) {
        if (!satisfies(g, k)) continue;  // only members meeting K count
        ChromaticResult r = l_chromatic(g, l, options);
        out.any_qualifies = true;
        out.value = std::max(out.value, r.order);
    }
    return out;
}

}  // namespace sgt

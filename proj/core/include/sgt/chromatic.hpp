#ifndef SGT_CHROMATIC_HPP
#define SGT_CHROMATIC_HPP

#include <optional>
#include <vector>

#include "sgt/girth.hpp"
#include "sgt/hom.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

/// Lower bounds L = (l01, l10, l11) on the three nonzero walk-girths;
/// each entry a positive integer or unbounded.
struct GirthBound {
    GirthValue l01 = GirthValue::finite(1);
    GirthValue l10 = GirthValue::finite(1);
    GirthValue l11 = GirthValue::finite(1);

    static GirthBound of(GirthValue a01, GirthValue a10, GirthValue a11) {
        return GirthBound{a01, a10, a11};
    }
};

bool satisfies(const GirthProfile& p, const GirthBound& l);
bool satisfies(const SignedGraph& g, const GirthBound& l);

struct ChromaticOptions {
    int max_vertices = 8;  // enumeration cap: 2^(n-1) switchings x partitions
};

struct ChromaticResult {
    int order = 0;
    SignedGraph witness;  // reduced homomorphic image meeting the bounds
    Homomorphism hom;     // g -> witness
};

/// L-chromatic number by exhaustive quotient enumeration: switchings with
/// vertex 0 pinned, then partitions by increasing block count in
/// restricted-growth order; quotients are reduced to at most one edge per
/// endpoint pair and sign. Requires satisfies(g, L).
ChromaticResult l_chromatic(const SignedGraph& g, const GirthBound& l,
                            const ChromaticOptions& options = {});

struct KlChromaticResult {
    bool any_qualifies = false;
    int value = 0;  // max of the member L-chromatic numbers
};

/// Maximum of the L-chromatic numbers over family members whose profile
/// meets K. Requires K >= L componentwise.
KlChromaticResult kl_chromatic(const std::vector<SignedGraph>& family, const GirthBound& k,
                               const GirthBound& l, const ChromaticOptions& options = {});

}  // namespace sgt

#endif

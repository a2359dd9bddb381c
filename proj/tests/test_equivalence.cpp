#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sgt/equivalence.hpp"
#include "sgt/error.hpp"
#include "sgt/walk_enum.hpp"

using namespace sgt;
using namespace sgt::testing;

TEST_CASE("spanning forests are breadth-first and deterministic") {
    SignedGraph single(1);
    SpanningForest f1 = spanning_forest(single);
    CHECK(f1.roots == std::vector<int>{0});

    SignedGraph k3 = make_complete(3, Sign::plus);
    SpanningForest f2 = spanning_forest(k3);
    CHECK(f2.roots.size() == 1);
    CHECK(std::count(f2.in_forest.begin(), f2.in_forest.end(), true) == 2);

    SignedGraph two_edges(4);
    two_edges.add_edge(0, 1, Sign::plus);
    two_edges.add_edge(2, 3, Sign::plus);
    SpanningForest f3 = spanning_forest(two_edges);
    CHECK(f3.roots == std::vector<int>{0, 2});
}

TEST_CASE("fundamental cycles") {
    SignedGraph g(3);
    int loop = g.add_edge(2, 2, Sign::minus);
    g.add_edge(0, 1, Sign::plus);
    g.add_edge(1, 2, Sign::plus);
    SpanningForest f = spanning_forest(g);

    Walk lw = fundamental_cycle(g, f, loop);
    CHECK(lw.length() == 1);
    CHECK(lw.verts == std::vector<int>{2, 2});

    SignedGraph k3 = make_complete(3, Sign::plus);  // edges 01, 02, 12
    SpanningForest fk = spanning_forest(k3);        // tree {01, 02}
    Walk tri = fundamental_cycle(k3, fk, 2);
    CHECK(tri.length() == 3);
    CHECK(tri.is_closed());
    CHECK(is_cycle(tri));
    CHECK_THROWS_AS(fundamental_cycle(k3, fk, 0), ValidationError);

    SignedGraph digon(2);
    digon.add_edge(0, 1, Sign::plus);
    digon.add_edge(0, 1, Sign::minus);
    SpanningForest fd = spanning_forest(digon);
    Walk d = fundamental_cycle(digon, fd, 1);
    CHECK(d.length() == 2);
    CHECK(is_cycle(d));
}

TEST_CASE("balance with certificates") {
    SignedGraph plus = make_complete(4, Sign::plus);
    BalanceResult r1 = is_balanced(plus);
    CHECK(r1.balanced);
    CHECK(r1.switch_set.empty());

    SignedGraph k3n = make_complete(3, Sign::minus);
    BalanceResult r2 = is_balanced(k3n);
    CHECK_FALSE(r2.balanced);
    REQUIRE(r2.negative_cycle.has_value());
    CHECK(is_cycle(*r2.negative_cycle));
    CHECK(sign_of_walk(k3n, *r2.negative_cycle) == Sign::minus);

    SignedGraph c4 = make_cycle({Sign::minus, Sign::plus, Sign::plus, Sign::plus});
    BalanceResult r3 = is_balanced(c4);
    CHECK_FALSE(r3.balanced);
    CHECK(r3.negative_cycle->length() == 4);

    // YES certificate soundness: switching makes everything positive
    SignedGraph mixed = switched(plus, SwitchSet::of(4, {1, 3}));
    BalanceResult r4 = is_balanced(mixed);
    REQUIRE(r4.balanced);
    SignedGraph fixed_up = switched(mixed, r4.switch_set);
    for (const Edge& e : fixed_up.edges()) CHECK(e.sign == Sign::plus);
}

TEST_CASE("antibalance") {
    CHECK(is_antibalanced(make_complete(3, Sign::minus)).balanced);
    CHECK_FALSE(is_antibalanced(make_complete(3, Sign::plus)).balanced);

    // a bipartite all-positive graph is antibalanced: switch one side
    SignedGraph c4 = make_cycle({Sign::plus, Sign::plus, Sign::plus, Sign::plus});
    BalanceResult r = is_antibalanced(c4);
    REQUIRE(r.balanced);
    SignedGraph all_minus = switched(c4, r.switch_set);
    for (const Edge& e : all_minus.edges()) CHECK(e.sign == Sign::minus);
}

TEST_CASE("switching equivalence with witness and certificate") {
    SignedGraph a = make_complete(3, Sign::plus);
    EquivalenceResult same = switching_equivalent(a, a);
    CHECK(same.equivalent);
    CHECK(same.switch_set.empty());

    // all-negative K3 vs exactly one negative edge 01: switch {2}
    SignedGraph k3n = make_complete(3, Sign::minus);
    SignedGraph oneneg(3);
    oneneg.add_edge(0, 1, Sign::minus);
    oneneg.add_edge(0, 2, Sign::plus);
    oneneg.add_edge(1, 2, Sign::plus);
    EquivalenceResult r = switching_equivalent(k3n, oneneg);
    REQUIRE(r.equivalent);
    CHECK(r.switch_set.members() == std::vector<int>{2});
    CHECK(switched(k3n, r.switch_set).same_signed(oneneg));

    EquivalenceResult no = switching_equivalent(a, k3n);
    CHECK_FALSE(no.equivalent);
    REQUIRE(no.distinguishing_cycle.has_value());
    CHECK(sign_of_walk(a, *no.distinguishing_cycle) !=
          sign_of_walk(k3n, *no.distinguishing_cycle));

    SignedGraph smaller = make_complete(2, Sign::plus);
    CHECK_THROWS_AS(switching_equivalent(a, smaller), ValidationError);
}

TEST_CASE("switching equivalence agrees with cycle-sign comparison") {
    // exhaustive on every multigraph with <= 3 vertices, <= 4 edges and all
    // signature pairs
    for (int n = 1; n <= 3; ++n) {
        for (int e = 0; e <= 4; ++e) {
            for_each_multigraph(n, e, [&](const SignedGraph& base) {
                std::vector<Walk> cycles = all_cycles(base);
                std::vector<SignedGraph> sigs;
                for_each_signature(base, [&](const SignedGraph& s) { sigs.push_back(s); });
                for (const SignedGraph& s1 : sigs) {
                    for (const SignedGraph& s2 : sigs) {
                        bool same_cycles = true;
                        for (const Walk& c : cycles)
                            if (sign_of_walk(s1, c) != sign_of_walk(s2, c)) {
                                same_cycles = false;
                                break;
                            }
                        CHECK(switching_equivalent(s1, s2).equivalent == same_cycles);
                    }
                }
            });
        }
    }
}

TEST_CASE("canonical signatures") {
    SignedGraph tree(4);
    tree.add_edge(0, 1, Sign::minus);
    tree.add_edge(1, 2, Sign::minus);
    tree.add_edge(1, 3, Sign::plus);
    SignedGraph canon = canonical_signature(tree);
    for (const Edge& e : canon.edges()) CHECK(e.sign == Sign::plus);

    SignedGraph k3n = make_complete(3, Sign::minus);
    SignedGraph ck = canonical_signature(k3n);
    int negatives = static_cast<int>(negative_edge_ids(ck).size());
    CHECK(negatives == 1);  // the triangle sign must stay negative
    CHECK(canonical_signature(ck).same_signed(ck));

    // equivalence iff identical canonical forms, same forest
    SignedGraph other = switched(k3n, SwitchSet::of(3, {1}));
    CHECK(canonical_signature(other).same_signed(ck));
}

TEST_CASE("switching class counts") {
    CHECK(count_switching_classes(make_complete(3, Sign::plus)) == 2);
    CHECK(count_switching_classes(make_path(5)) == 1);

    SignedGraph parallel(2);
    parallel.add_edge(0, 1, Sign::plus);
    parallel.add_edge(0, 1, Sign::plus);
    CHECK(count_switching_classes(parallel) == 2);
    CHECK(brute_count_switching_classes(parallel) == 2);

    // formula vs enumeration over a small corpus
    for (int n = 1; n <= 3; ++n)
        for (int e = 0; e <= 4; ++e)
            for_each_multigraph(n, e, [&](const SignedGraph& g) {
                CHECK(count_switching_classes(g) == brute_count_switching_classes(g));
            });
}

TEST_CASE("special class flags") {
    SpecialClass a = classify(make_complete(3, Sign::plus));
    CHECK(a.balanced);
    CHECK_FALSE(a.signed_bipartite);
    CHECK_FALSE(a.antibalanced);

    SpecialClass b = classify(make_cycle({Sign::minus, Sign::plus, Sign::plus, Sign::plus}));
    CHECK_FALSE(b.balanced);
    CHECK(b.signed_bipartite);
    CHECK_FALSE(b.antibalanced);

    SpecialClass c = classify(SignedGraph(3));
    CHECK(c.balanced);
    CHECK(c.signed_bipartite);
    CHECK(c.antibalanced);
}

TEST_CASE("bipartition certificates") {
    BipartiteResult odd = bipartition(make_complete(3, Sign::plus));
    CHECK_FALSE(odd.bipartite);
    REQUIRE(odd.odd_cycle.has_value());
    CHECK(odd.odd_cycle->length() % 2 == 1);
    CHECK(is_cycle(*odd.odd_cycle));

    SignedGraph loop(1);
    loop.add_edge(0, 0, Sign::plus);
    CHECK_FALSE(bipartition(loop).bipartite);
    CHECK(bipartition(loop).odd_cycle->length() == 1);

    BipartiteResult even = bipartition(make_cycle({Sign::plus, Sign::plus, Sign::plus, Sign::plus}));
    CHECK(even.bipartite);
}

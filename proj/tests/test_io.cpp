#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "sgt/error.hpp"
#include "sgt/io.hpp"

using namespace sgt;
using namespace sgt::testing;

TEST_CASE("graph files round-trip") {
    SignedGraph g(3);
    g.add_edge(0, 1, Sign::plus);
    g.add_edge(1, 2, Sign::minus);
    g.add_edge(2, 2, Sign::minus);
    g.set_label(0, "root");

    std::string text = graph_file_string(g);
    std::istringstream in(text);
    SignedGraph back = parse_graph_file(in);
    CHECK(back.same_signed(g));
    CHECK(*back.label(0) == "root");
    CHECK(graph_file_string(back) == text);  // normalized emit is stable
}

TEST_CASE("graph files accept comments and reject malformed input") {
    std::istringstream ok("# a triangle\nsg 3 3\ne 0 1 +\ne 1 2 + # inline note\ne 2 0 -\n");
    SignedGraph g = parse_graph_file(ok);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);

    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_graph_file(in);
            CHECK(false);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("sg 2\ne 0 1 +\n", 1);            // bad header
    expect_line("sg 2 1\ne 0 2 +\n", 2);          // endpoint out of range
    expect_line("sg 2 1\ne 0 1 *\n", 2);          // bad sign
    expect_line("sg 2 1\ne 0 1 +\ne 1 0 -\n", 3); // too many edges
    expect_line("sg 2 2\ne 0 1 +\n", 2);          // too few edges
}

TEST_CASE("walk files parse against the graph") {
    SignedGraph g = make_complete(3, Sign::minus);
    std::istringstream in("# triangle walk\n0 e1 1 e3 2 e2 0\n1 e1 0 e1 1\n");
    std::vector<Walk> walks = parse_walk_file(in, g);
    REQUIRE(walks.size() == 2);
    CHECK(walks[0].length() == 3);
    CHECK(walks[0].is_closed());

    std::istringstream bad("0 e9 1\n");
    CHECK_THROWS_AS(parse_walk_file(bad, g), ParseError);
}

TEST_CASE("switch set and walk fragments") {
    SwitchSet x = SwitchSet::of(4, {0, 2});
    CHECK(format_switch_set(x) == "0,2");
    CHECK(parse_switch_set("0,2", 4) == x);
    CHECK(format_switch_set(SwitchSet(4)) == "∅");
    CHECK(parse_switch_set("∅", 4).empty());

    Walk w{{0, 1, 2, 0}, {0, 2, 1}};
    CHECK(format_walk(w) == "0 e1 1 e3 2 e2 0");
    CHECK(parse_walk("0 e1 1 e3 2 e2 0") == w);
}

TEST_CASE("inline graphs and result documents") {
    SignedGraph g = make_complete(3, Sign::minus);
    SignedGraph back = parse_graph_inline(graph_inline(g));
    CHECK(back.same_signed(g));

    ResultDocument doc;
    doc.add("claim", "hom");
    doc.add("verdict", "yes");
    doc.add("X", "∅");
    doc.add_line("0 -> 1");
    doc.add_line("e1 -> e2");
    std::istringstream in(doc.text());
    ResultDocument parsed = ResultDocument::parse(in);
    CHECK(parsed.get("claim") == std::string("hom"));
    CHECK(parsed.vertex_arrows() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(parsed.edge_arrows() == std::vector<std::pair<int, int>>{{0, 1}});
}

#ifndef SGT_IO_HPP
#define SGT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/girth.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/walk.hpp"

namespace sgt {

/// Graph file format: a header `sg <n> <m>`, optional `v <id> <label>`
/// lines, then exactly m lines `e <u> <v> <+|->`. Edges are numbered 1..m
/// in file order wherever output refers to them; vertices are 0..n-1.
/// `#` starts a comment. Throws ParseError with the offending line number.
SignedGraph parse_graph_file(std::istream& in);
SignedGraph load_graph_file(const std::string& path);

/// Emits the normalized form: header, labeled vertices ascending, edges in
/// id order. parse(emit(g)) reproduces g; emit(parse(f)) is byte-identical
/// for normalized files.
void emit_graph_file(std::ostream& out, const SignedGraph& g);
std::string graph_file_string(const SignedGraph& g);

/// Walk list file: one walk per line as `v0 e<k> v1 e<k> v2 ...` with
/// 1-based edge references; `#` comments. Walks are validated against g.
std::vector<Walk> parse_walk_file(std::istream& in, const SignedGraph& g);
std::vector<Walk> load_walk_file(const std::string& path, const SignedGraph& g);

/// Witness fragments shared by the CLI and the golden tests.
std::string format_switch_set(const SwitchSet& x);
SwitchSet parse_switch_set(const std::string& s, int universe);

std::string format_walk(const Walk& w);
Walk parse_walk(const std::string& s);

/// Single-line graph embedding for result documents (fields joined by ';').
std::string graph_inline(const SignedGraph& g);
SignedGraph parse_graph_inline(const std::string& s);

/// A result document: ordered lines, `key=value` fields plus free map lines
/// (`u -> v`, `e1 -> e2`). Machine output starts with `claim=<subcommand>`.
struct ResultDocument {
    std::vector<std::string> lines;

    void add(const std::string& key, const std::string& value);
    void add_line(std::string raw);
    std::string text() const;

    static ResultDocument parse(std::istream& in);

    std::optional<std::string> get(const std::string& key) const;
    std::vector<std::string> get_all(const std::string& key) const;
    /// Lines of the form `a -> b`; edge lines use `e<k>` tokens (1-based).
    std::vector<std::pair<int, int>> vertex_arrows() const;
    std::vector<std::pair<int, int>> edge_arrows() const;  // 0-based after parsing
};

}  // namespace sgt

#endif

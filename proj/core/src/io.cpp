#include "sgt/io.hpp"

#include <fstream>
#include <sstream>

#include "sgt/error.hpp"

namespace sgt {

namespace {

std::string strip_comment(const std::string& line) {
    std::size_t pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    return s;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
}

}  // namespace

SignedGraph parse_graph_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    int edges_seen = 0;
    SignedGraph g;

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        std::vector<std::string> tok = split_ws(body);
        if (tok.empty()) continue;

        if (n < 0) {
            if (tok.size() != 3 || tok[0] != "sg")
                throw ParseError("expected header 'sg <n> <m>'", lineno);
            n = parse_int(tok[1], lineno);
            m = parse_int(tok[2], lineno);
            if (n < 0 || m < 0) throw ParseError("negative counts in header", lineno);
            g = SignedGraph(n);
            continue;
        }
        if (tok[0] == "v") {
            if (edges_seen > 0) throw ParseError("vertex lines must precede edge lines", lineno);
            if (tok.size() < 3) throw ParseError("expected 'v <id> <label>'", lineno);
            int id = parse_int(tok[1], lineno);
            if (id < 0 || id >= n) throw ParseError("vertex id out of range", lineno);
            std::string label = tok[2];
            for (std::size_t i = 3; i < tok.size(); ++i) label += " " + tok[i];
            g.set_label(id, label);
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError("expected 'e <u> <v> <+|->'", lineno);
            int u = parse_int(tok[1], lineno);
            int v = parse_int(tok[2], lineno);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("edge endpoint out of range", lineno);
            if (tok[3].size() != 1 || !sign_from_char(tok[3][0]))
                throw ParseError("edge sign must be '+' or '-'", lineno);
            if (edges_seen == m) throw ParseError("more than <m> edge lines", lineno);
            g.add_edge(u, v, *sign_from_char(tok[3][0]));
            ++edges_seen;
            continue;
        }
        throw ParseError("unrecognized line '" + tok[0] + "'", lineno);
    }
    if (n < 0) throw ParseError("missing 'sg <n> <m>' header", lineno == 0 ? 1 : lineno);
    if (edges_seen != m)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(edges_seen),
                         lineno == 0 ? 1 : lineno);
    return g;
}

SignedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph_file(in);
}

void emit_graph_file(std::ostream& out, const SignedGraph& g) {
    out << "sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        if (const std::string* l = g.label(v)) out << "v " << v << ' ' << *l << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
}

std::string graph_file_string(const SignedGraph& g) {
    std::ostringstream os;
    emit_graph_file(os, g);
    return os.str();
}

std::vector<Walk> parse_walk_file(std::istream& in, const SignedGraph& g) {
    std::vector<Walk> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (split_ws(body).empty()) continue;
        Walk w;
        try {
            w = parse_walk(body);
            validate_walk(g, w);
        } catch (const ValidationError& err) {
            throw ParseError(err.what(), lineno);
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Walk> load_walk_file(const std::string& path, const SignedGraph& g) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open walk file: " + path);
    return parse_walk_file(in, g);
}

std::string format_switch_set(const SwitchSet& x) {
    std::vector<int> ids = x.members();
    if (ids.empty()) return "∅";
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    return os.str();
}

SwitchSet parse_switch_set(const std::string& s, int universe) {
    SwitchSet x(universe);
    if (s == "∅" || s.empty()) return x;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int v = parse_int(tok, 0);
        if (v < 0 || v >= universe) throw ValidationError("switch set member out of range");
        x.insert(v);
    }
    return x;
}

std::string format_walk(const Walk& w) { return to_string(w); }

Walk parse_walk(const std::string& s) {
    std::vector<std::string> tok = split_ws(s);
    if (tok.empty()) throw ValidationError("empty walk text");
    Walk w;
    for (std::size_t i = 0; i < tok.size(); ++i) {
        if (i % 2 == 0) {
            w.verts.push_back(parse_int(tok[i], 0));
        } else {
            if (tok[i].size() < 2 || tok[i][0] != 'e')
                throw ValidationError("expected edge token 'e<k>', got '" + tok[i] + "'");
            int id = parse_int(tok[i].substr(1), 0);
            if (id < 1) throw ValidationError("edge references are 1-based");
            w.edges.push_back(id - 1);
        }
    }
    if (w.verts.size() != w.edges.size() + 1)
        throw ValidationError("walk text must end with a vertex");
    return w;
}

std::string graph_inline(const SignedGraph& g) {
    std::string s = graph_file_string(g);
    for (char& c : s)
        if (c == '\n') c = ';';
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

SignedGraph parse_graph_inline(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ';') c = '\n';
    std::istringstream is(t);
    return parse_graph_file(is);
}

void ResultDocument::add(const std::string& key, const std::string& value) {
    lines.push_back(key + "=" + value);
}

void ResultDocument::add_line(std::string raw) { lines.push_back(std::move(raw)); }

std::string ResultDocument::text() const {
    std::ostringstream os;
    for (const std::string& l : lines) os << l << '\n';
    return os.str();
}

ResultDocument ResultDocument::parse(std::istream& in) {
    ResultDocument doc;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        doc.lines.push_back(line);
    }
    return doc;
}

std::optional<std::string> ResultDocument::get(const std::string& key) const {
    std::string prefix = key + "=";
    for (const std::string& l : lines)
        if (l.rfind(prefix, 0) == 0) return l.substr(prefix.size());
    return std::nullopt;
}

std::vector<std::string> ResultDocument::get_all(const std::string& key) const {
    std::vector<std::string> out;
    std::string prefix = key + "=";
    for (const std::string& l : lines)
        if (l.rfind(prefix, 0) == 0) out.push_back(l.substr(prefix.size()));
    return out;
}

std::vector<std::pair<int, int>> ResultDocument::vertex_arrows() const {
    std::vector<std::pair<int, int>> out;
    for (const std::string& l : lines) {
        std::vector<std::string> tok = split_ws(l);
        if (tok.size() == 3 && tok[1] == "->" && !tok[0].empty() && tok[0][0] != 'e')
            out.emplace_back(parse_int(tok[0], 0), parse_int(tok[2], 0));
    }
    return out;
}

std::vector<std::pair<int, int>> ResultDocument::edge_arrows() const {
    std::vector<std::pair<int, int>> out;
    for (const std::string& l : lines) {
        std::vector<std::string> tok = split_ws(l);
        if (tok.size() == 3 && tok[1] == "->" && tok[0].size() > 1 && tok[0][0] == 'e' &&
            tok[2].size() > 1 && tok[2][0] == 'e')
            out.emplace_back(parse_int(tok[0].substr(1), 0) - 1,
                             parse_int(tok[2].substr(1), 0) - 1);
    }
    return out;
}

}  // namespace sgt

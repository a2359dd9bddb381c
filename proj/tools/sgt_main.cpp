#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgt/chromatic.hpp"
#include "sgt/constructions.hpp"
#include "sgt/equivalence.hpp"
#include "sgt/error.hpp"
#include "sgt/girth.hpp"
#include "sgt/hom.hpp"
#include "sgt/io.hpp"
#include "sgt/packing.hpp"
#include "sgt/walksys.hpp"
#include "verify_document.hpp"

namespace {

using namespace sgt;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
    std::string format = "text";
    std::string out;
    std::uint64_t budget = 10'000'000;
    int bound = -1;
    int cap = 8;
};

void attach_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--out", c.out, "Write the primary output to a file");
    cmd->add_option("--budget", c.budget, "Search node budget");
    cmd->add_option("--bound", c.bound, "Walk sweep length bound (default 2|E|)");
    cmd->add_option("--cap", c.cap, "Vertex cap for quotient enumeration");
}

/// Emits machine or text output, honoring --out.
void emit(const Common& c, const ResultDocument& machine, const std::string& text) {
    std::string payload = c.format == "machine" ? machine.text() : text;
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw Error("cannot open output file: " + c.out);
        f << payload;
    } else {
        std::cout << payload;
    }
}

/// Construction subcommands always place a parseable graph file in --out.
void emit_graph(const Common& c, const SignedGraph& g, const ResultDocument& machine) {
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw Error("cannot open output file: " + c.out);
        emit_graph_file(f, g);
        return;
    }
    if (c.format == "machine")
        std::cout << machine.text();
    else
        emit_graph_file(std::cout, g);
}

void add_hom_lines(ResultDocument& doc, const Homomorphism& h) {
    doc.add("X", format_switch_set(h.switch_set));
    for (std::size_t v = 0; v < h.vertex_map.size(); ++v)
        doc.add_line(std::to_string(v) + " -> " + std::to_string(h.vertex_map[v]));
    for (std::size_t e = 0; e < h.edge_map.size(); ++e)
        doc.add_line("e" + std::to_string(e + 1) + " -> e" + std::to_string(h.edge_map[e] + 1));
}

std::string format_id_list(const std::vector<int>& ids) {
    if (ids.empty()) return "∅";
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    return os.str();
}

GirthValue parse_bound_token(const std::string& tok) {
    if (tok == "inf") return GirthValue::unbounded();
    int v = std::stoi(tok);
    if (v < 1) throw ValidationError("girth bounds must be positive or 'inf'");
    return GirthValue::finite(v);
}

GirthBound parse_girth_bound(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) parts.push_back(tok);
    if (parts.size() != 3)
        throw ValidationError("expected three comma-separated bounds, e.g. 3,inf,inf");
    return GirthBound::of(parse_bound_token(parts[0]), parse_bound_token(parts[1]),
                          parse_bound_token(parts[2]));
}

int run_info(const Common& c, const std::string& file) {
    SignedGraph g = load_graph_file(file);
    ResultDocument doc;
    doc.add("claim", "info");
    doc.add("n", std::to_string(g.vertex_count()));
    doc.add("m", std::to_string(g.edge_count()));
    emit(c, doc, "n=" + std::to_string(g.vertex_count()) + " m=" +
                     std::to_string(g.edge_count()) + "\n");
    return kExitYes;
}

int run_balance(const Common& c, const std::string& file, bool anti) {
    SignedGraph g = load_graph_file(file);
    BalanceResult r = anti ? is_antibalanced(g) : is_balanced(g);
    ResultDocument doc;
    doc.add("claim", anti ? "antibalance" : "balance");
    doc.add("verdict", r.balanced ? "yes" : "no");
    std::string key = anti ? "antibalanced" : "balanced";
    std::string text;
    if (r.balanced) {
        doc.add("X", format_switch_set(r.switch_set));
        text = key + "=yes X=" + format_switch_set(r.switch_set) + "\n";
    } else {
        doc.add("cycle", format_walk(*r.negative_cycle));
        text = key + "=no cycle=" + format_walk(*r.negative_cycle) + "\n";
    }
    emit(c, doc, text);
    return r.balanced ? kExitYes : kExitNo;
}

int run_equivalent(const Common& c, const std::string& f1, const std::string& f2) {
    SignedGraph g1 = load_graph_file(f1);
    SignedGraph g2 = load_graph_file(f2);
    EquivalenceResult r = switching_equivalent(g1, g2);
    ResultDocument doc;
    doc.add("claim", "equivalent");
    doc.add("verdict", r.equivalent ? "yes" : "no");
    std::string text;
    if (r.equivalent) {
        doc.add("X", format_switch_set(r.switch_set));
        text = "equivalent=yes X=" + format_switch_set(r.switch_set) + "\n";
    } else {
        doc.add("cycle", format_walk(*r.distinguishing_cycle));
        text = "equivalent=no cycle=" + format_walk(*r.distinguishing_cycle) + "\n";
    }
    emit(c, doc, text);
    return r.equivalent ? kExitYes : kExitNo;
}

int run_canonical(const Common& c, const std::string& file) {
    SignedGraph g = load_graph_file(file);
    SignedGraph canon = canonical_signature(g);
    ResultDocument doc;
    doc.add("claim", "canonical");
    doc.add("graph", graph_inline(canon));
    emit_graph(c, canon, doc);
    return kExitYes;
}

int run_girth(const Common& c, const std::string& file, bool realization) {
    SignedGraph g = load_graph_file(file);
    GirthProfile p = girth_profile(g);
    ResultDocument doc;
    doc.add("claim", "girth");
    const char* keys[4] = {"g00", "g01", "g10", "g11"};
    std::ostringstream text;
    for (int i = 0; i < 4; ++i) {
        doc.add(keys[i], p.g[static_cast<std::size_t>(i)].str());
        if (i) text << ' ';
        text << keys[i] << '=' << p.g[static_cast<std::size_t>(i)].str();
    }
    for (int i = 0; i < 4; ++i)
        if (p.witness[static_cast<std::size_t>(i)])
            doc.add(std::string("w") + (keys[i] + 1),
                    format_walk(*p.witness[static_cast<std::size_t>(i)]));
    text << '\n';
    if (realization) {
        RealizationReport rep = realization_analysis(g);
        for (int i = 0; i < 4; ++i) {
            std::string key = std::string("r") + (keys[i] + 1);
            doc.add(key, to_string(rep.per_type[static_cast<std::size_t>(i)]));
            text << key << '=' << to_string(rep.per_type[static_cast<std::size_t>(i)])
                 << (i == 3 ? "\n" : " ");
        }
    }
    emit(c, doc, text.str());
    return kExitYes;
}

int run_classify(const Common& c, const std::string& file) {
    SignedGraph g = load_graph_file(file);
    SpecialClass cls = classify(g);
    std::string s;
    if (cls.balanced) s += "G01";
    if (cls.signed_bipartite) s += std::string(s.empty() ? "" : ",") + "G10";
    if (cls.antibalanced) s += std::string(s.empty() ? "" : ",") + "G11";
    ResultDocument doc;
    doc.add("claim", "classify");
    doc.add("classes", s);
    emit(c, doc, "classes=" + s + "\n");
    return kExitYes;
}

int map_search(const Common& c, const std::string& f1, const std::string& f2, bool iso) {
    SignedGraph g1 = load_graph_file(f1);
    SignedGraph g2 = load_graph_file(f2);
    SearchOptions o;
    o.budget = c.budget;
    HomSearchResult r = iso ? switching_iso(g1, g2, o) : find_hom(g1, g2, o);
    ResultDocument doc;
    doc.add("claim", iso ? "iso" : "hom");
    std::string verdict = r.found() ? "yes"
                          : r.status == SearchStatus::budget_exceeded ? "budget"
                                                                      : "no";
    doc.add("verdict", verdict);
    std::string key = iso ? "iso" : "hom";
    std::string text = key + "=" + verdict + "\n";
    if (r.found()) {
        ResultDocument witness;
        add_hom_lines(witness, *r.hom);
        for (const std::string& l : witness.lines) doc.add_line(l);
        text += witness.text();
    }
    emit(c, doc, text);
    if (r.found()) return kExitYes;
    return r.status == SearchStatus::budget_exceeded ? kExitBudget : kExitNo;
}

int run_core(const Common& c, const std::string& file) {
    SignedGraph g = load_graph_file(file);
    SearchOptions o;
    o.budget = c.budget;
    CoreComputation r = compute_core(g, o);
    if (r.status == SearchStatus::budget_exceeded) {
        ResultDocument doc;
        doc.add("claim", "core");
        doc.add("verdict", "budget");
        emit(c, doc, "core=budget\n");
        return kExitBudget;
    }
    ResultDocument doc;
    doc.add("claim", "core");
    doc.add("order", std::to_string(r.core.vertex_count()));
    doc.add("input-is-core", r.core.vertex_count() == g.vertex_count() &&
                                     r.core.edge_count() == g.edge_count()
                                 ? "yes"
                                 : "no");
    doc.add("vertices", format_id_list(r.core_vertex_ids));
    doc.add("edges", format_id_list(r.core_edge_ids));
    doc.add("X", format_switch_set(r.retraction.switch_set));
    for (std::size_t v = 0; v < r.retraction.vertex_map.size(); ++v)
        doc.add_line(std::to_string(v) + " -> " +
                     std::to_string(r.core_vertex_ids[static_cast<std::size_t>(
                         r.retraction.vertex_map[v])]));
    for (std::size_t e = 0; e < r.retraction.edge_map.size(); ++e)
        doc.add_line("e" + std::to_string(e + 1) + " -> e" +
                     std::to_string(r.core_edge_ids[static_cast<std::size_t>(
                                        r.retraction.edge_map[e])] +
                                    1));
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw Error("cannot open output file: " + c.out);
        emit_graph_file(f, r.core);
    }
    std::string text = "core-order=" + std::to_string(r.core.vertex_count()) + "\n";
    std::cout << (c.format == "machine" ? doc.text() : text);
    return kExitYes;
}

int run_construction(const Common& c, const std::string& name, const SignedGraph& result) {
    ResultDocument doc;
    doc.add("claim", name);
    doc.add("graph", graph_inline(result));
    emit_graph(c, result, doc);
    return kExitYes;
}

int run_chromatic(const Common& c, const std::vector<std::string>& files, const std::string& lstr,
                  const std::string& kstr) {
    GirthBound l = parse_girth_bound(lstr);
    ChromaticOptions opts;
    opts.max_vertices = c.cap;
    if (!kstr.empty() || files.size() > 1) {
        GirthBound k = kstr.empty() ? l : parse_girth_bound(kstr);
        std::vector<SignedGraph> family;
        for (const std::string& f : files) family.push_back(load_graph_file(f));
        KlChromaticResult r = kl_chromatic(family, k, l, opts);
        ResultDocument doc;
        doc.add("claim", "klchromatic");
        doc.add("qualifies", r.any_qualifies ? "yes" : "no");
        doc.add("value", r.any_qualifies ? std::to_string(r.value) : "none");
        emit(c, doc,
             "kl-chi=" + (r.any_qualifies ? std::to_string(r.value) : std::string("none")) + "\n");
        return kExitYes;
    }
    SignedGraph g = load_graph_file(files[0]);
    ChromaticResult r = l_chromatic(g, l, opts);
    ResultDocument doc;
    doc.add("claim", "chromatic");
    doc.add("l01", l.l01.str());
    doc.add("l10", l.l10.str());
    doc.add("l11", l.l11.str());
    doc.add("chi", std::to_string(r.order));
    doc.add("target", graph_inline(r.witness));
    add_hom_lines(doc, r.hom);
    emit(c, doc, "chi=" + std::to_string(r.order) + "\n");
    return kExitYes;
}

int run_pack(const Common& c, const std::string& file) {
    SignedGraph g = load_graph_file(file);
    PackOptions o;
    o.budget = c.budget;
    SignaturePacking p = pack_signatures(g, o);
    ResultDocument doc;
    doc.add("claim", "pack");
    doc.add("l", std::to_string(p.size()));
    doc.add("exact", p.exact ? "yes" : "no");
    std::ostringstream text;
    text << "l=" << p.size() << (p.exact ? "" : " (lower bound)") << '\n';
    for (int i = 0; i < p.size(); ++i) {
        doc.add("X" + std::to_string(i + 1),
                format_switch_set(p.switch_sets[static_cast<std::size_t>(i)]));
        std::ostringstream negs;
        const auto& ns = p.negative_sets[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < ns.size(); ++j)
            negs << (j ? "," : "") << 'e' << ns[j] + 1;
        doc.add("N" + std::to_string(i + 1), ns.empty() ? "∅" : negs.str());
        text << "X" << i + 1 << '='
             << format_switch_set(p.switch_sets[static_cast<std::size_t>(i)]) << '\n';
    }
    emit(c, doc, text.str());
    return p.exact ? kExitYes : kExitBudget;
}

int run_walkcheck(const Common& c, const std::string& gfile, const std::string& wfile) {
    SignedGraph g = load_graph_file(gfile);
    std::vector<Walk> walks = load_walk_file(wfile, g);
    for (const Walk& w : walks)
        if (!w.is_closed()) throw ValidationError("walk lists must contain closed walks");
    int bound = c.bound >= 0 ? c.bound : std::max(2, 2 * g.edge_count());
    WalkOracle o = explicit_walk_oracle(g, walks, bound);

    ResultDocument doc;
    doc.add("claim", "walkcheck");
    doc.add("bound", std::to_string(bound));

    Ex3Report rep = exclusive_3walk_check(g, o);
    if (!rep.pass) {
        doc.add("verdict", "fail");
        const Ex3Violation& v = *rep.violation;
        doc.add("kind", v.kind == Ex3Violation::Kind::rotation ? "rotation" : "triple");
        doc.add("w1", format_walk(v.w1));
        doc.add("w2", format_walk(v.w2));
        if (v.kind == Ex3Violation::Kind::triple) doc.add("w3", format_walk(v.w3));
        emit(c, doc, "walkcheck=fail kind=" + std::string(doc.get("kind")->c_str()) + "\n");
        return kExitNo;
    }
    OracleSignatureResult sig = signature_from_oracle(g, o);
    if (!sig.ok()) {
        doc.add("verdict", "fail");
        doc.add("kind", "reconstruction");
        doc.add("w1", format_walk(*sig.counterexample));
        emit(c, doc, "walkcheck=fail kind=reconstruction\n");
        return kExitNo;
    }
    doc.add("verdict", "pass");
    doc.add("signature", graph_inline(*sig.signature));
    emit(c, doc, "walkcheck=pass bound=" + std::to_string(bound) + "\n");
    return kExitYes;
}

int run_verify(const Common& c, const std::vector<std::string>& args) {
    if (args.empty()) throw ValidationError("verify needs input files and a result document");
    std::vector<std::string> inputs(args.begin(), args.end() - 1);
    std::ifstream docfile(args.back());
    if (!docfile) throw Error("cannot open result document: " + args.back());
    ResultDocument doc = ResultDocument::parse(docfile);
    tools::VerifyOutcome out = tools::verify_document(doc, inputs);
    ResultDocument res;
    res.add("claim", "verify");
    res.add("verdict", out.ok ? "ok" : "failed");
    if (!out.ok) res.add("reason", out.reason);
    emit(c, res, out.ok ? "verify=ok\n" : "verify=failed " + out.reason + "\n");
    return out.ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sgt - signed graph algorithms toolkit"};
    app.require_subcommand(1);

    Common c;
    std::vector<std::string> files;
    bool flag_anti = false;
    bool flag_realization = false;
    int spc_k = 1;
    std::string opt_l, opt_k;

    CLI::App* cmd_info = app.add_subcommand("info", "Vertex and edge counts");
    cmd_info->add_option("file", files, "graph file")->required();
    attach_common(cmd_info, c);

    CLI::App* cmd_balance = app.add_subcommand("balance", "Balance test with certificate");
    cmd_balance->add_option("file", files)->required();
    cmd_balance->add_flag("--anti", flag_anti, "Test antibalance instead");
    attach_common(cmd_balance, c);

    CLI::App* cmd_equiv = app.add_subcommand("equivalent", "Switching equivalence of two signatures");
    cmd_equiv->add_option("files", files)->expected(2);
    attach_common(cmd_equiv, c);

    CLI::App* cmd_canon = app.add_subcommand("canonical", "Canonical signature w.r.t. the BFS forest");
    cmd_canon->add_option("file", files)->required();
    attach_common(cmd_canon, c);

    CLI::App* cmd_girth = app.add_subcommand("girth", "The four walk-girths");
    cmd_girth->add_option("file", files)->required();
    cmd_girth->add_flag("--realization", flag_realization, "Classify witness realization");
    attach_common(cmd_girth, c);

    CLI::App* cmd_classify = app.add_subcommand("classify", "Special class membership");
    cmd_classify->add_option("file", files)->required();
    attach_common(cmd_classify, c);

    CLI::App* cmd_hom = app.add_subcommand("hom", "Homomorphism search");
    cmd_hom->add_option("files", files)->expected(2);
    attach_common(cmd_hom, c);

    CLI::App* cmd_iso = app.add_subcommand("iso", "Switching isomorphism search");
    cmd_iso->add_option("files", files)->expected(2);
    attach_common(cmd_iso, c);

    CLI::App* cmd_core = app.add_subcommand("core", "Compute the core");
    cmd_core->add_option("file", files)->required();
    attach_common(cmd_core, c);

    CLI::App* cmd_edc = app.add_subcommand("edc", "Extended double cover");
    cmd_edc->add_option("file", files)->required();
    attach_common(cmd_edc, c);

    CLI::App* cmd_dsg = app.add_subcommand("dsg", "Double switching graph");
    cmd_dsg->add_option("file", files)->required();
    attach_common(cmd_dsg, c);

    CLI::App* cmd_spc = app.add_subcommand("spc", "Signed projective cube");
    cmd_spc->add_option("k", spc_k, "dimension")->required();
    attach_common(cmd_spc, c);

    CLI::App* cmd_sgraph = app.add_subcommand("sgraph", "S(G) bipartite replacement");
    cmd_sgraph->add_option("file", files)->required();
    attach_common(cmd_sgraph, c);

    CLI::App* cmd_chrom = app.add_subcommand("chromatic", "L-chromatic number");
    cmd_chrom->add_option("files", files)->required();
    cmd_chrom->add_option("--L", opt_l, "bounds l01,l10,l11 (int or inf)")->required();
    cmd_chrom->add_option("--K", opt_k, "family bounds k01,k10,k11");
    attach_common(cmd_chrom, c);

    CLI::App* cmd_pack = app.add_subcommand("pack", "Maximum signature packing");
    cmd_pack->add_option("file", files)->required();
    attach_common(cmd_pack, c);

    CLI::App* cmd_walk = app.add_subcommand("walkcheck", "Exclusive 3-walk check of a walk list");
    cmd_walk->add_option("files", files)->expected(2);
    attach_common(cmd_walk, c);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Re-verify a result document");
    cmd_verify->add_option("files", files, "inputs..., then the document")->required();
    attach_common(cmd_verify, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cmd_info->parsed()) return run_info(c, files.at(0));
        if (cmd_balance->parsed()) return run_balance(c, files.at(0), flag_anti);
        if (cmd_equiv->parsed()) return run_equivalent(c, files.at(0), files.at(1));
        if (cmd_canon->parsed()) return run_canonical(c, files.at(0));
        if (cmd_girth->parsed()) return run_girth(c, files.at(0), flag_realization);
        if (cmd_classify->parsed()) return run_classify(c, files.at(0));
        if (cmd_hom->parsed()) return map_search(c, files.at(0), files.at(1), false);
        if (cmd_iso->parsed()) return map_search(c, files.at(0), files.at(1), true);
        if (cmd_core->parsed()) return run_core(c, files.at(0));
        if (cmd_edc->parsed())
            return run_construction(c, "edc", edc(load_graph_file(files.at(0))).graph);
        if (cmd_dsg->parsed())
            return run_construction(c, "dsg", dsg(load_graph_file(files.at(0))).graph);
        if (cmd_spc->parsed()) return run_construction(c, "spc", spc(spc_k));
        if (cmd_sgraph->parsed())
            return run_construction(c, "sgraph", s_of(load_graph_file(files.at(0))));
        if (cmd_chrom->parsed()) return run_chromatic(c, files, opt_l, opt_k);
        if (cmd_pack->parsed()) return run_pack(c, files.at(0));
        if (cmd_walk->parsed()) return run_walkcheck(c, files.at(0), files.at(1));
        if (cmd_verify->parsed()) return run_verify(c, files);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

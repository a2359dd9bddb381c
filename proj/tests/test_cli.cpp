#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sgt/io.hpp"
#include "sgt/signed_graph.hpp"

using namespace sgt;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SGT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmp_dir() {
    static std::string dir = [] {
        std::string d = "/tmp/sgt_cli_test_XXXXXX";
        REQUIRE(mkdtemp(d.data()) != nullptr);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = tmp_dir() + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kK3AllNeg = "sg 3 3\ne 0 1 -\ne 1 2 -\ne 2 0 -\n";
const std::string kK3OneNeg = "sg 3 3\ne 0 1 -\ne 1 2 +\ne 2 0 +\n";
const std::string kC5Plus = "sg 5 5\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 3 4 +\ne 4 0 +\n";
const std::string kK3Plus = "sg 3 3\ne 0 1 +\ne 1 2 +\ne 2 0 +\n";

}  // namespace

TEST_CASE("cli: girth output is byte-stable") {
    std::string f = write_file("k3n.sg", kK3AllNeg);
    RunResult r = run_cli("girth " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g00=2 g01=inf g10=inf g11=3\n");
}

TEST_CASE("cli: spc writes a graph that info reads back") {
    std::string out = tmp_dir() + "/spc2.sg";
    RunResult mk = run_cli("spc 2 --out " + out);
    CHECK(mk.exit_code == 0);
    RunResult info = run_cli("info " + out);
    CHECK(info.exit_code == 0);
    CHECK(info.out == "n=4 m=6\n");
}

TEST_CASE("cli: equivalent on identical files") {
    std::string a = write_file("a.sg", kK3OneNeg);
    std::string b = write_file("b.sg", kK3OneNeg);
    RunResult r = run_cli("equivalent " + a + " " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "equivalent=yes X=∅\n");
}

TEST_CASE("cli: equivalence witness and negative verdict exit codes") {
    std::string a = write_file("k3n2.sg", kK3AllNeg);
    std::string b = write_file("k3one.sg", kK3OneNeg);
    RunResult yes = run_cli("equivalent " + a + " " + b);
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "equivalent=yes X=2\n");

    std::string c = write_file("k3p.sg", kK3Plus);
    RunResult no = run_cli("equivalent " + a + " " + c);
    CHECK(no.exit_code == 1);
}

TEST_CASE("cli: parse errors exit with code 2") {
    std::string bad = write_file("bad.sg", "sg 2 1\ne 0 5 +\n");
    RunResult r = run_cli("info " + bad);
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: hom and iso verdicts") {
    std::string c5 = write_file("c5.sg", kC5Plus);
    std::string k3 = write_file("k3.sg", kK3Plus);
    CHECK(run_cli("hom " + c5 + " " + k3).exit_code == 0);
    CHECK(run_cli("hom " + k3 + " " + c5).exit_code == 1);
    CHECK(run_cli("iso " + k3 + " " + k3).exit_code == 0);
    std::string k3n = write_file("k3n3.sg", kK3AllNeg);
    CHECK(run_cli("iso " + k3 + " " + k3n).exit_code == 1);
}

TEST_CASE("cli: classify and balance text") {
    std::string k3n = write_file("k3n4.sg", kK3AllNeg);
    RunResult c = run_cli("classify " + k3n);
    CHECK(c.out == "classes=G11\n");
    RunResult b = run_cli("balance " + k3n);
    CHECK(b.exit_code == 1);
    CHECK(b.out.rfind("balanced=no cycle=", 0) == 0);
}

TEST_CASE("cli: chromatic anchor") {
    std::string c5 = write_file("c5b.sg", kC5Plus);
    RunResult r = run_cli("chromatic " + c5 + " --L 3,inf,inf");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "chi=3\n");
}

TEST_CASE("cli: pack on the positive 4-cycle") {
    std::string c4 = write_file("c4.sg", "sg 4 4\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 3 0 +\n");
    RunResult r = run_cli("pack " + c4);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("l=3\n", 0) == 0);
}

TEST_CASE("cli: every witness document re-verifies") {
    std::string k3n = write_file("k3n5.sg", kK3AllNeg);
    std::string k3one = write_file("k3one2.sg", kK3OneNeg);
    std::string c5 = write_file("c5c.sg", kC5Plus);
    std::string k3 = write_file("k3b.sg", kK3Plus);
    std::string c4 = write_file("c4b.sg", "sg 4 4\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 3 0 +\n");

    auto roundtrip = [&](const std::string& cmd, const std::string& inputs,
                         int expect_cmd_code = 0) {
        std::string doc = tmp_dir() + "/doc.txt";
        RunResult made = run_cli(cmd + " --format machine --out " + doc);
        CHECK(made.exit_code == expect_cmd_code);
        RunResult v = run_cli("verify " + inputs + " " + doc);
        CHECK(v.exit_code == 0);
        if (v.exit_code != 0) MESSAGE("verify failed for: ", cmd, " -> ", v.out);
    };

    roundtrip("balance " + k3n, k3n, 1);
    roundtrip("balance " + k3one, k3one, 1);
    roundtrip("equivalent " + k3n + " " + k3one, k3n + " " + k3one);
    roundtrip("girth " + k3n, k3n);
    roundtrip("classify " + k3n, k3n);
    roundtrip("hom " + c5 + " " + k3, c5 + " " + k3);
    roundtrip("iso " + k3n + " " + k3one, k3n + " " + k3one);
    roundtrip("chromatic " + c5 + " --L 3,inf,inf", c5);
    roundtrip("pack " + c4, c4);

    // core and walkcheck place their documents on stdout/machine
    std::string core_doc = tmp_dir() + "/core_doc.txt";
    RunResult core = run_cli("core " + c4 + " --format machine");
    CHECK(core.exit_code == 0);
    std::ofstream(core_doc) << core.out;
    CHECK(run_cli("verify " + c4 + " " + core_doc).exit_code == 0);

    // at bound 4 the triangle's closure is exactly the negative walks of a
    // signature with one negative triangle, so the list checks out
    std::string walks = write_file("tri.wlk", "0 e1 1 e2 2 e3 0\n");
    std::string wdoc = tmp_dir() + "/walk_doc.txt";
    RunResult wres = run_cli("walkcheck " + k3n + " " + walks + " --format machine --bound 4 --out " + wdoc);
    CHECK(wres.exit_code == 0);
    CHECK(run_cli("verify " + k3n + " " + walks + " " + wdoc).exit_code == 0);
}

TEST_CASE("cli: canonical emits a normalized parseable graph") {
    std::string k3n = write_file("k3n6.sg", kK3AllNeg);
    std::string out = tmp_dir() + "/canon.sg";
    CHECK(run_cli("canonical " + k3n + " --out " + out).exit_code == 0);
    SignedGraph canon = load_graph_file(out);
    CHECK(canon.vertex_count() == 3);
    RunResult again = run_cli("canonical " + out);
    std::ostringstream expect;
    emit_graph_file(expect, canon);
    CHECK(again.out == expect.str());  // canonical is idempotent
}

TEST_CASE("cli: walkcheck rejects a non-system") {
    std::string k3 = write_file("k3c.sg", kK3Plus);
    // the positive triangle listed as "negative" is not a walk system:
    // its double traversal would have to be negative as well
    std::string walks = write_file("badtri.wlk", "0 e1 1 e2 2 e3 0\n");
    RunResult r = run_cli("walkcheck " + k3 + " " + walks + " --bound 6");
    CHECK(r.exit_code == 1);
    CHECK(r.out.rfind("walkcheck=fail", 0) == 0);
}

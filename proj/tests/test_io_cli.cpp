#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hdts/cli.hpp"
#include "hdts/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace hdts;
namespace fs = std::filesystem;

TEST_CASE("canonical serialization of C1") {
  CHECK(serialize_tsys(cube({"x"})) ==
        "hdts 1\n"
        "state 0\n"
        "state 1\n"
        "action x.1 x\n"
        "trans 0 x.1 1\n");
}

TEST_CASE("round trips") {
  for (const auto& [name, x] : fixtures::fixed_corpus()) {
    CAPTURE(name);
    std::string s = serialize_tsys(x);
    Tsys y = parse_tsys(s);
    CHECK(y == x);
    CHECK(serialize_tsys(y) == s);
  }
}

TEST_CASE("serialization separates distinct systems") {
  auto c = fixtures::fixed_corpus();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!(c[i].x == c[j].x))
        CHECK(serialize_tsys(c[i].x) != serialize_tsys(c[j].x));
}

TEST_CASE("comments, blank lines and forward references") {
  std::vector<std::string> warnings;
  Tsys x = parse_tsys(
      "# a system\n"
      "hdts 1\n"
      "\n"
      "trans a u b   # uses names declared below\n"
      "state a\nstate b\naction u x\n"
      "trans a u b\n",
      &warnings);
  CHECK(x.num_transitions() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_tsys("hdts 1\nstate a\nstate b\ntrans a w b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_tsys("hdts 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tsys(""), ParseError);
  CHECK_THROWS_AS(parse_tsys("hdts 1\nstate a b\n"), ParseError);
  CHECK_THROWS_AS(parse_tsys("hdts 1\nstate a\ntrans a a\n"), ParseError);
  CHECK_THROWS_AS(parse_tsys("hdts 1\nstate a/b\n"), ParseError);
  CHECK_THROWS_AS(parse_tsys("hdts 1\naction u x\naction u y\n"), ParseError);
  CHECK_THROWS_AS(parse_tsys("hdts 1\nfoo\n"), ParseError);
}

TEST_CASE("map round trip and errors") {
  TsMap f = wbar2_map("x");
  std::string text = serialize_map(f, "w.hdts", "c.hdts");
  auto resolve = [&](const std::string& p) {
    return p == "w.hdts" ? f.domain() : f.codomain();
  };
  CHECK(parse_map(text, resolve) == f);
  CHECK(parse_map_header(text).to == "c.hdts");
  CHECK_THROWS_AS(parse_map(text + "state nope 00\n", resolve), UnresolvedReference);
  std::string partial = "hdts-map 1\nfrom w.hdts ; to c.hdts\nstate I 00\n";
  CHECK_THROWS_AS(parse_map(partial, resolve), ParseError);
  CHECK_THROWS_AS(parse_map("hdts-map 1\nfrom a to b\n", resolve), ParseError);
}

TEST_CASE("json report") {
  auto j = nlohmann::json::parse(report_json(intro_example(2), classify(intro_example(2))));
  CHECK(j["cubical"] == true);
  CHECK(j["regular"] == false);
  CHECK(j["unique_intermediate_state"]["pass"] == false);
  CHECK(j["unique_intermediate_state"]["witnesses"].size() >= 1);
}

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("hdts_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("cli gen and check") {
  Run r = run({"gen", "cube", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == serialize_tsys(cube({"x"})));
  Run c = run({"check", "-", "--report", "json"}, r.out);
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["regular"] == true);
  Run t = run({"check", "-"}, serialize_tsys(intro_example(2)));
  CHECK(t.out.find("class: cubical") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "nothing"}).code == 2);
  CHECK(run({"check", "-"}, "hdts 1\ntrans a u b\n").code == 3);
  CHECK(run({"reflect", "csa2", "-"}, serialize_tsys(pure_transition({"x", "y"}))).code == 4);
  CHECK(run({"gen", "theta", "x", "y", "-o", "/nonexistent/x.map"}).code == 4);
  CHECK(run({"--budget", "2", "iso", "-", "-"}, serialize_tsys(cube({"x", "x", "x"})))
            .code != 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli predicates and constructions on files") {
  TempDir d;
  CHECK(run({"gen", "wbar2_map", "x", "-o", d / "g.map"}).code == 0);
  CHECK(fs::exists(d / "g.dom.hdts"));
  CHECK(fs::exists(d / "g.cod.hdts"));
  Run w = run({"weq", d / "g.map", "--structure", "bl-rts"});
  CHECK(w.code == 0);
  CHECK(w.out == "true\n");
  Run w2 = run({"weq", d / "g.map", "--structure", "bl-cts"});
  CHECK(w2.code == 1);
  CHECK(w2.out == "false\n");

  CHECK(run({"gen", "cube", "x", "y", "-o", d / "c.hdts"}).code == 0);
  CHECK(run({"gen", "cube", "y", "x", "-o", d / "d.hdts"}).code == 0);
  CHECK(run({"iso", d / "c.hdts", d / "d.hdts"}).code == 0);
  CHECK(run({"fibrant", d / "c.hdts", "--structure", "bl-cts"}).code == 0);
  Run ld = run({"fibrant", d / "g.dom.hdts", "--structure", "ld", "--sufficient-only"});
  CHECK(ld.out == "true\n");
  CHECK(run({"gen", "zx", "x", "-o", d / "z.hdts"}).code == 0);
  Run unk = run({"fibrant", d / "z.hdts", "--structure", "ld"});
  CHECK(unk.out == "unknown\n");
  CHECK(unk.code == 1);

  CHECK(run({"reflect", "ls-rts", d / "g.dom.hdts", "-o", d / "r.hdts", "--unit",
             d / "u.map"}).code == 0);
  std::ifstream um(d / "u.map");
  std::string first, second;
  std::getline(um, first);
  std::getline(um, second);
  CHECK(second == "from g.dom.hdts ; to r.hdts");

  CHECK(run({"coreflect", "cub", d / "c.hdts", "-o", d / "k.hdts", "--counit",
             d / "k.map"}).code == 0);
  CHECK(run({"cyl", d / "c.hdts", "-o", d / "cy.hdts"}).code == 0);
  CHECK(run({"cocyl", d / "c.hdts", "-o", d / "co.hdts"}).code == 0);
  CHECK(run({"product", d / "c.hdts", d / "d.hdts", "-o", d / "pr.hdts"}).code == 0);

  CHECK(run({"gen", "p", "x", "-o", d / "p.map"}).code == 0);
  CHECK(run({"gen", "wbar3_attach", "x", "-o", d / "a.map"}).code == 0);
  // Both maps must share their domain file for the pushout.
  std::ifstream pa(d / "a.map");
  std::stringstream buf;
  buf << pa.rdbuf();
  std::string a = buf.str();
  a.replace(a.find("a.dom.hdts"), 10, "p.dom.hdts");
  std::ofstream(d / "a.map") << a;
  Run po = run({"pushout", d / "p.map", d / "a.map", "--mode", "rts"});
  CHECK(po.code == 0);
  CHECK(is_regular(parse_tsys(po.out)));

  Run rl = run({"rlp", d / "g.map", d / "p.map"});
  CHECK((rl.code == 0 || rl.code == 1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "artin/cli.hpp"
#include "artin/io.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::test;

namespace {

std::string data_file(const std::string& name) {
  return std::string(ARTIN_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graph parsing") {
  LabeledGraph g = parse_graph("convention no-2\nvertex a\nvertex b\nedge a b 3\n");
  CHECK(g == dihedral_graph(L(3)));

  LabeledGraph from_file = parse_graph(slurp(data_file("mixed7.cg")));
  CHECK(from_file == worked_example());

  // comments and blank lines
  LabeledGraph h = parse_graph("# hi\n\nconvention no-inf\nvertex a # trailing\n");
  CHECK(h.size() == 1);
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(parse_graph("vertex a\n"), ParseError);  // no convention
  CHECK_THROWS_AS(parse_graph("convention no-2\nvertex a\nedge a a 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("convention weird\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("convention no-2\nconvention no-2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("convention no-2\nvertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("hello world\n"), ParseError);

  try {
    parse_graph("convention no-2\nvertex a\nvertex b\nedge a b 1\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadLabel);
  }
  try {
    parse_graph("convention no-2\nvertex a\nedge a b 3\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
  try {
    parse_graph(
        "convention no-2\nvertex a\nvertex b\nedge a b 3\nedge b a 4\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateEdge);
  }
  try {
    parse_graph("convention full\nvertex a\nvertex b\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingLabel);
  }

  try {
    parse_graph("convention no-2\nvertex a\nvertex b\nedge a b zz\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("word parsing") {
  LabeledGraph g = worked_example();
  CHECK(parse_word("a b a^-1", g) == wd("a b a^-1"));
  CHECK(parse_word("b^3", g) == wd("b b b"));
  CHECK(parse_word("1", g).empty());
  CHECK(parse_word("a*b^2", g) == wd("a b b"));
  CHECK(parse_word("a * b^-2", g) == wd("a b^-1 b^-1"));
  CHECK_THROWS_AS(parse_word("a z", g), Error);
  CHECK_THROWS_AS(parse_word("a^x", g), ParseError);
  CHECK_THROWS_AS(parse_word("a 1", g), ParseError);
}

TEST_CASE("print and reparse round trip") {
  std::mt19937 rng(113);
  for (Convention conv :
       {Convention::NoInfinityEdge, Convention::NoTwoEdge, Convention::FullEdge}) {
    for (int trial = 0; trial < 60; ++trial) {
      LabeledGraph g = random_graph(rng, 5, {L(2), L(3), L(4), INF()});
      // rebuild under the target convention for a faithful declaration
      std::vector<Edge> edges;
      for (size_t i = 0; i < g.vertices().size(); ++i)
        for (size_t j = i + 1; j < g.vertices().size(); ++j)
          edges.push_back({g.vertices()[i], g.vertices()[j],
                           g.label(g.vertices()[i], g.vertices()[j])});
      std::vector<Edge> declared;
      for (const auto& e : edges) {
        if (conv == Convention::NoInfinityEdge && e.label.is_infinite()) continue;
        if (conv == Convention::NoTwoEdge && e.label == L(2)) continue;
        declared.push_back(e);
      }
      LabeledGraph built(conv, g.vertices(), declared);
      CHECK(parse_graph(print_graph(built)) == built);
    }
  }
}

TEST_CASE("word printing round trips") {
  LabeledGraph g = worked_example();
  std::mt19937 rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, g.vertices(), static_cast<int>(rng() % 9));
    CHECK(parse_word(print_word(w), g) == w);
  }
}

TEST_CASE("classify command") {
  auto res = run({"--graph", "tri-224.cg", "--json", "classify"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"admits_retractions\": true") != std::string::npos);
  CHECK(res.out == slurp(data_file("golden/classify-tri224.json")));

  // identical runs produce identical bytes
  auto res2 = run({"--graph", "tri-224.cg", "--json", "classify"});
  CHECK(res.out == res2.out);

  auto dot = run({"--graph", data_file("tri-224.cg"), "classify", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph coxeter") != std::string::npos);
}

TEST_CASE("retract command") {
  auto res = run({"--graph", data_file("i23.cg"), "retract", "--set", "b",
                  "--word", "a"});
  CHECK(res.code == 0);
  CHECK(res.out == "b\n");
}

TEST_CASE("nf command") {
  auto res = run({"nf", "--m", "4", "--word", "a b a b"});
  CHECK(res.code == 0);
  CHECK(res.out == "power 1\nfactors (none)\n");
  auto resj = run({"--json", "nf", "--m", "4", "--word", "a b a b"});
  CHECK(resj.out == slurp(data_file("golden/nf-abab.json")));
}

TEST_CASE("coherence command exit codes") {
  auto bad = run({"--graph", data_file("square-chord.cg"), "coherence"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("forbidden-square") != std::string::npos);
  CHECK(bad.out.find("witness: a b c d") != std::string::npos);

  auto good = run({"--graph", data_file("i23.cg"), "coherence"});
  CHECK(good.code == 0);
}

TEST_CASE("verify command exit codes") {
  auto good = run({"--graph", data_file("tri-224.cg"), "verify", "--set", "a,b"});
  CHECK(good.code == 0);
  auto json = run({"--graph", data_file("square-chord.cg"), "--json", "verify",
                   "--set", "a,b"});
  CHECK(json.code == 0);
}

TEST_CASE("search commands") {
  auto f2 = run({"search-f2", "--r", "3", "--s", "2", "--len", "4"});
  CHECK(f2.code == 0);
  CHECK(f2.out.find("no solution") != std::string::npos);

  auto single = run({"search-f2", "--r", "3", "--len", "2"});
  CHECK(single.code == 1);  // the control equation has solutions
  CHECK(single.out.find("solution: a") != std::string::npos);

  auto t234 = run({"search-234", "--len", "3"});
  CHECK(t234.code == 0);
  CHECK(t234.out.find("no solution") != std::string::npos);
}

TEST_CASE("csets and xperp and ribbons commands") {
  auto cs = run({"--graph", data_file("mixed7.cg"), "csets", "--x", "a,b,d,e",
                 "--y", "a,b,f,g"});
  CHECK(cs.code == 0);
  CHECK(cs.out == "O_xy = {}\nC_xy = {a b}\nO_yx = {}\nC_yx = {a b}\n");

  auto xp = run({"--graph", data_file("mixed7.cg"), "xperp", "--set", "a,b"});
  CHECK(xp.code == 0);
  CHECK(xp.out == "{c d e f g}\n");

  auto rb = run({"--graph", data_file("i23.cg"), "ribbons", "--x", "a", "--y", "b"});
  CHECK(rb.code == 0);
  CHECK(rb.out == "b a\n");

  auto rb2 = run({"--graph", data_file("tri-224.cg"), "ribbons", "--x", "a",
                  "--y", "b"});
  CHECK(rb2.code == 2);  // label 2 admits no ribbon
}

TEST_CASE("intersect and extend commands") {
  auto in = run({"--graph", data_file("i23.cg"), "intersect", "--x", "a", "--y",
                 "b", "--f", "1", "--g", "a"});
  CHECK(in.code == 0);
  CHECK(in.out == slurp(data_file("golden/intersect-i23.txt")));

  auto ex = run({"--graph", data_file("i23.cg"), "extend", "--base", "b",
                 "--conj", "1", "--word", "a"});
  CHECK(ex.code == 0);
  CHECK(ex.out == "b\n");
}

TEST_CASE("bad invocations exit with 2") {
  CHECK(run({"retract", "--set", "b", "--word", "a"}).code == 2);  // no graph
  CHECK(run({"--graph", "/nonexistent.cg", "classify"}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--graph", data_file("i23.cg"), "retract", "--set", "z", "--word",
             "a"})
            .code == 2);
}

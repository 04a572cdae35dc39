#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/finite_type.hpp"
#include "artin/retraction.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::test;

TEST_CASE("ordinary map follows the odd-edge rule") {
  LabeledGraph i23 = dihedral_graph(L(3));
  CHECK(*ordinary_map(i23, {"b"}).image("a") == "b");

  LabeledGraph even = dihedral_graph(L(4));
  CHECK_FALSE(ordinary_map(even, {"b"}).image("a").has_value());

  // labels a-b 4, a-c 4, b-c 3, X = {a}: nothing odd points into {a}
  LabeledGraph g = triangle(L(4), L(3), L(4));
  GeneratorMap m = ordinary_map(g, {"a"});
  CHECK_FALSE(m.image("b").has_value());
  CHECK_FALSE(m.image("c").has_value());
}

TEST_CASE("ambiguous odd targets are an error") {
  // c has odd edges to both a and b
  LabeledGraph g = triangle(L(2), L(3), L(3));
  CHECK_THROWS_AS(ordinary_map(g, {"a", "b"}), Error);
  try {
    ordinary_map(g, {"a", "b"});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousOddTarget);
  }
}

TEST_CASE("verify_retraction on dihedral relations") {
  // allowed FC families hold for every subset
  for (const LabeledGraph& g :
       {triangle(L(2), L(2), L(5)), triangle(L(4), INF(), L(6)),
        triangle(INF(), INF(), L(7))}) {
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      VertexSet x = g.subset_from_mask(mask);
      GeneratorMap m = ordinary_map(g, x);
      CHECK(verify_retraction(g, x, m).ok);
    }
  }

  // (inf, 4, 3) with X the infinite pair fails on the 4-edge
  LabeledGraph bad(Convention::FullEdge, {"a", "b", "c"},
                   {{"a", "b", INF()}, {"a", "c", L(4)}, {"b", "c", L(3)}});
  GeneratorMap m = ordinary_map(bad, {"a", "b"});
  VerifyResult res = verify_retraction(bad, {"a", "b"}, m);
  CHECK_FALSE(res.ok);
  REQUIRE(res.violated_edge.has_value());
  CHECK(*res.violated_edge == std::make_pair(std::string("a"), std::string("c")));

  // identity map on the whole set always verifies
  LabeledGraph any = triangle(L(3), L(4), INF());
  CHECK(verify_retraction(any, any.vertices(),
                          ordinary_map(any, any.vertices()))
            .ok);
}

TEST_CASE("fc admissibility classification") {
  auto ok = admits_retractions_fc(triangle(L(2), L(2), L(5)));
  CHECK(ok.admits);
  CHECK(ok.offending.empty());

  auto s234 = admits_retractions_fc(triangle(L(2), L(3), L(4)));
  CHECK_FALSE(s234.admits);
  REQUIRE(s234.offending.size() == 1);
  CHECK(s234.offending[0].reason == TriangleReason::Sph234);

  CHECK(admits_retractions_fc(triangle(L(4), L(6), INF())).admits);
  CHECK(admits_retractions_fc(triangle(L(2), INF(), INF())).admits);
  CHECK(admits_retractions_fc(triangle(INF(), INF(), INF())).admits);

  auto s233 = admits_retractions_fc(triangle(L(2), L(3), L(3)));
  CHECK(s233.offending[0].reason == TriangleReason::Sph233);
  auto s235 = admits_retractions_fc(triangle(L(2), L(3), L(5)));
  CHECK(s235.offending[0].reason == TriangleReason::Sph235);
  auto ioe = admits_retractions_fc(triangle(L(4), L(3), INF()));
  CHECK(ioe.offending[0].reason == TriangleReason::InfinityOddEven);
  auto ioo = admits_retractions_fc(triangle(L(3), L(5), INF()));
  CHECK(ioo.offending[0].reason == TriangleReason::InfinityOddOdd);

  CHECK_THROWS_AS(admits_retractions_fc(triangle(L(4), L(3), L(4))), Error);

  // the seven-vertex example graph is FC but its {c,d,e} triangle is the
  // forbidden (2,3,inf) configuration
  auto worked = admits_retractions_fc(worked_example());
  CHECK_FALSE(worked.admits);
  REQUIRE(worked.offending.size() == 1);
  CHECK(worked.offending[0].vertices == VertexSet{"c", "d", "e"});
  CHECK(worked.offending[0].reason == TriangleReason::InfinityOddEven);
}

TEST_CASE("exhaustive ordinary verification") {
  CHECK(admits_ordinary_all(triangle(L(4), L(3), L(4))));  // the (2m,2m,2n+1) family
  CHECK_FALSE(admits_ordinary_all(triangle(L(4), L(3), L(2))));  // the 2-3-4 triangle
  LabeledGraph z(Convention::NoTwoEdge, {"a"}, {});
  CHECK(admits_ordinary_all(z));
  CHECK_FALSE(admits_ordinary_all(worked_example()));  // its (2,3,inf) triangle
  CHECK_FALSE(admits_ordinary_all(triangle(L(2), L(3), L(3))));

  LabeledGraph big(Convention::NoTwoEdge,
                   {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
                    "m", "n", "o", "p", "q"},
                   {});
  CHECK_THROWS_AS(admits_ordinary_all(big), Error);
}

TEST_CASE("admitting graphs cannot have adjacent odd edges") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    LabeledGraph g = random_graph(rng, 4, {L(2), L(3), L(4), INF()});
    bool admits = true;
    try {
      admits = admits_ordinary_all(g);
    } catch (const Error&) {
      continue;
    }
    if (admits) CHECK(g.is_odd_odd_free());
  }
}

TEST_CASE("trichotomy on the odd dihedral") {
  LabeledGraph i23 = dihedral_graph(L(3));
  TrichotomyReport r = trichotomy(i23, {"a"}, {"b"}, "a");
  CHECK(r.outcome == TrichotomyCase::One);
  CHECK_FALSE(r.value_intersection.has_value());
  CHECK(*r.value_xy == "a");
  CHECK(*r.value_yx == "b");

  r = trichotomy(i23, {"a", "b"}, {"a"}, "a");
  CHECK(r.outcome == TrichotomyCase::TripleEqual);
  CHECK(*r.value_intersection == "a");

  LabeledGraph g = worked_example();
  r = trichotomy(g, {"a"}, {"c"}, "g");
  CHECK(r.outcome == TrichotomyCase::TripleEqual);
  CHECK_FALSE(r.value_intersection.has_value());

  CHECK_THROWS_AS(trichotomy(triangle(L(3), L(3), L(3)), {"a"}, {"b"}, "a"), Error);
}

TEST_CASE("trichotomy matches the odd-edge criterion on small graphs") {
  std::mt19937 rng(67);
  int tested = 0;
  for (int trial = 0; trial < 500 && tested < 60; ++trial) {
    LabeledGraph g = random_graph(rng, 4, {L(2), L(3), L(4), INF()});
    if (!g.is_odd_odd_free()) continue;
    bool admits = false;
    try {
      admits = admits_ordinary_all(g);
    } catch (const Error&) {
      continue;
    }
    if (!admits) continue;
    ++tested;
    const int n = g.size();
    for (std::uint64_t xm = 0; xm < (1ull << n); ++xm)
      for (std::uint64_t ym = 0; ym < (1ull << n); ++ym) {
        VertexSet x = g.subset_from_mask(xm), y = g.subset_from_mask(ym);
        for (int s = 0; s < n; ++s) {
          TrichotomyReport r = trichotomy(g, x, y, g.vertices()[s]);
          bool in_x = xm >> s & 1, in_y = ym >> s & 1;
          bool exceptional =
              (in_x && !in_y && (g.odd_adjacency(s) & (ym & ~xm))) ||
              (in_y && !in_x && (g.odd_adjacency(s) & (xm & ~ym)));
          CHECK((r.outcome == TrichotomyCase::One) == exceptional);
          if (r.outcome == TrichotomyCase::One)
            CHECK_FALSE(r.value_intersection.has_value());
          else
            CHECK((r.value_intersection == r.value_xy &&
                   r.value_intersection == r.value_yx));
        }
      }
  }
  CHECK(tested > 0);
}

TEST_CASE("retraction is the identity on its image") {
  LabeledGraph g = worked_example();
  std::mt19937 rng(71);
  for (std::uint64_t mask : {0x3ull, 0x15ull, 0x7full, 0x0ull}) {
    VertexSet x = g.subset_from_mask(mask);
    GeneratorMap rho = ordinary_map(g, x);
    for (const auto& v : x) CHECK(*rho.image(v) == v);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = random_word(rng, g.vertices(), static_cast<int>(rng() % 10));
      CHECK(rho.apply(rho.apply(w)) == rho.apply(w));
    }
  }
}

TEST_CASE("fc classification agrees with the verifier on small graphs") {
  std::mt19937 rng(73);
  int fc_seen = 0;
  for (int trial = 0; trial < 800 && fc_seen < 150; ++trial) {
    LabeledGraph g = random_graph(rng, 4, {L(2), L(3), L(4), INF()});
    if (!is_fc_type(g)) continue;
    ++fc_seen;
    CHECK(admits_retractions_fc(g).admits == admits_ordinary_all(g));
  }
  CHECK(fc_seen > 0);
}

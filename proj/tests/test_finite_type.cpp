#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/finite_type.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::test;

namespace {

LabeledGraph path_graph(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size()) + 1;
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(vertex_name(i));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({vs[i], vs[i + 1], L(labels[i])});
  return LabeledGraph(Convention::NoTwoEdge, vs, edges);
}

}  // namespace

TEST_CASE("cosine matrix entries") {
  LabeledGraph z(Convention::NoTwoEdge, {"a"}, {});
  auto b1 = cosine_matrix(z);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0][0].exact);
  CHECK(b1[0][0].value == 1);

  auto b2 = cosine_matrix(dihedral_graph(L(2)));
  CHECK(b2[0][1].exact);
  CHECK(b2[0][1].value == 0);
  CHECK(b2[1][0].value == 0);

  auto b3 = cosine_matrix(dihedral_graph(L(3)));
  QuadRat expected;
  expected.an = -1;
  expected.ad = 2;
  CHECK(b3[0][1].exact);
  CHECK(b3[0][1].q == expected);
  CHECK(b3[0][1].value == doctest::Approx(-0.5));

  auto b5 = cosine_matrix(dihedral_graph(L(5)));
  CHECK_FALSE(b5[0][1].exact);
  CHECK(b5[0][1].value == doctest::Approx(-0.80901699437L));

  auto binf = cosine_matrix(dihedral_graph(INF()));
  CHECK(binf[0][1].exact);
  CHECK(binf[0][1].value == -1);
}

TEST_CASE("spherical triangles") {
  CHECK(is_spherical(triangle(L(2), L(3), L(3))));
  CHECK_FALSE(is_spherical(triangle(L(3), L(3), L(3))));
  CHECK_FALSE(is_spherical(triangle(L(2), L(3), L(6))));
  CHECK(is_spherical(triangle(L(2), L(3), L(4))));
  CHECK(is_spherical(triangle(L(2), L(3), L(5))));
  CHECK(is_spherical(triangle(L(2), L(2), L(7))));
  CHECK_FALSE(is_spherical(triangle(L(2), L(4), L(4))));
  CHECK_FALSE(is_spherical(dihedral_graph(INF())));
}

TEST_CASE("classification of irreducible graphs") {
  CHECK(classify_irreducible(path_graph({3, 3})).str() == "A3");
  CHECK(classify_irreducible(dihedral_graph(L(7))).str() == "I2(7)");
  LabeledGraph z(Convention::NoTwoEdge, {"a"}, {});
  CHECK(classify_irreducible(z).str() == "Z");

  // canonicalization of the small dihedrals
  CHECK(classify_irreducible(dihedral_graph(L(3))).str() == "A2");
  CHECK(classify_irreducible(dihedral_graph(L(4))).str() == "B2");
  CHECK(classify_irreducible(dihedral_graph(L(5))).str() == "I2(5)");
  CHECK(classify_irreducible(dihedral_graph(L(6))).str() == "I2(6)");

  CHECK(classify_irreducible(path_graph({4, 3})).str() == "B3");
  CHECK(classify_irreducible(path_graph({3, 4})).str() == "B3");
  CHECK(classify_irreducible(path_graph({5, 3})).str() == "H3");
  CHECK(classify_irreducible(path_graph({5, 3, 3})).str() == "H4");
  CHECK(classify_irreducible(path_graph({3, 4, 3})).str() == "F4");
  CHECK(classify_irreducible(path_graph({3, 3, 3, 3})).str() == "A5");
  CHECK(classify_irreducible(path_graph({3, 3, 3, 4})).str() == "B5");

  // D and E shapes: a path with one extra leaf
  auto star = [](const std::vector<std::pair<std::string, std::string>>& edges,
                 std::vector<std::string> vs) {
    std::vector<Edge> es;
    for (const auto& [u, v] : edges) es.push_back({u, v, L(3)});
    return LabeledGraph(Convention::NoTwoEdge, std::move(vs), es);
  };
  CHECK(classify_irreducible(star({{"c", "a"}, {"c", "b"}, {"c", "d"}},
                                  {"a", "b", "c", "d"}))
            .str() == "D4");
  CHECK(classify_irreducible(
            star({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"c", "f"}},
                 {"a", "b", "c", "d", "e", "f"}))
            .str() == "E6");
  CHECK(classify_irreducible(
            star({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"},
                  {"c", "g"}},
                 {"a", "b", "c", "d", "e", "f", "g"}))
            .str() == "E7");
  // affine and indefinite shapes
  CHECK_FALSE(classify_irreducible(triangle(L(3), L(3), L(3))).spherical());
  CHECK_FALSE(classify_irreducible(path_graph({3, 6})).spherical());
  CHECK_FALSE(classify_irreducible(path_graph({4, 3, 4})).spherical());
  CHECK_FALSE(classify_irreducible(path_graph({5, 3, 3, 3})).spherical());

  CHECK_THROWS_AS(classify_irreducible(path_graph({3, 2, 3})), Error);
}

TEST_CASE("fc type") {
  CHECK(is_fc_type(worked_example()));
  CHECK_FALSE(is_fc_type(triangle(L(4), L(3), L(4))));
  CHECK(is_fc_type(triangle(L(2), L(2), L(9))));
  CHECK(is_fc_type(triangle(L(2), L(3), L(5))));
  CHECK(is_fc_type(chorded_square(3)));

  // a square of 3-labels is affine on the clique when completed
  LabeledGraph k4_of_3(Convention::NoTwoEdge, {"a", "b", "c", "d"},
                       {{"a", "b", L(3)},
                        {"b", "c", L(3)},
                        {"c", "d", L(3)},
                        {"a", "d", L(3)},
                        {"a", "c", L(2)},
                        {"b", "d", L(2)}});
  CHECK_FALSE(is_fc_type(k4_of_3));  // the 4-clique is the affine A~3 diagram
}

TEST_CASE("fc type invariant under renaming") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    LabeledGraph g = random_graph(rng, 5, {L(2), L(3), L(4), INF()});
    std::vector<std::string> renamed;
    for (const auto& v : g.vertices()) renamed.push_back("x" + v);
    std::vector<Edge> edges;
    const auto& names = g.vertices();
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        edges.push_back({"x" + names[i], "x" + names[j],
                         g.label(names[i], names[j])});
    LabeledGraph h(Convention::FullEdge, renamed, edges);
    CHECK(is_fc_type(g) == is_fc_type(h));
  }
}

TEST_CASE("classification agrees with positive definiteness") {
  std::vector<Label> palette = {L(2), L(3), L(4), L(5), L(6), L(7), L(8), INF()};

  // exhaustive on triangles over the palette
  for (const auto& l1 : palette)
    for (const auto& l2 : palette)
      for (const auto& l3 : palette) {
        LabeledGraph g = triangle(l1, l2, l3);
        bool cls = true;
        for (const auto& comp : g.irreducible_components())
          cls = cls && classify_irreducible(g.induced(comp)).spherical();
        auto def = detail::cosine_positive_definite(g);
        if (def != detail::Definiteness::Inconclusive)
          CHECK(cls == (def == detail::Definiteness::Positive));
        CHECK(is_spherical(g) == cls);  // is_spherical cross-checks internally
      }

  // randomized sample on larger graphs
  std::mt19937 rng(19);
  for (int trial = 0; trial < 12000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    LabeledGraph g = random_graph(rng, n, palette);
    CHECK_NOTHROW(is_spherical(g));  // throws on internal disagreement
  }
}

TEST_CASE("spherical is hereditary") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    LabeledGraph g = random_graph(rng, 5, {L(2), L(3), L(4)});
    if (!is_spherical(g)) continue;
    for (std::uint64_t mask = 0; mask < 32; ++mask)
      CHECK(is_spherical(g.induced(g.subset_from_mask(mask))));
  }
}

TEST_CASE("nonspherical exactly when classification fails") {
  std::mt19937 rng(29);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 100; ++trial) {
    LabeledGraph g = random_graph(rng, 4, {L(2), L(3), L(4), L(6), INF()});
    if (g.irreducible_components().size() != 1) continue;
    ++seen;
    CHECK((classify_irreducible(g).str() == "non-spherical") == !is_spherical(g));
  }
}

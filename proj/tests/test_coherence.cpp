#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/coherence.hpp"
#include "artin/finite_type.hpp"
#include "artin/retraction.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::test;

TEST_CASE("the chorded square is not coherent") {
  for (int m : {3, 4, 5}) {
    CoherenceReport r = coherence_general(chorded_square(m));
    CHECK_FALSE(r.coherent);
    CHECK(r.failure == CoherenceReport::Failure::ForbiddenSquare);
    CHECK(r.witness == VertexSet{"a", "b", "c", "d"});
  }
}

TEST_CASE("free and right-angled basics are coherent") {
  CHECK(coherence_general(dihedral_graph(INF())).coherent);
  LabeledGraph k4(Convention::NoTwoEdge, {"a", "b", "c", "d"}, {});
  CHECK(coherence_general(k4).coherent);
  LabeledGraph empty;
  CHECK(coherence_general(empty).coherent);
}

TEST_CASE("two far-apart big labels on a 4-clique are incoherent") {
  // A = I2(4) x I2(4): complete on four vertices, two opposite 4-edges
  LabeledGraph g(Convention::NoTwoEdge, {"a", "b", "c", "d"},
                 {{"a", "b", L(4)}, {"c", "d", L(4)}});
  CoherenceReport general = coherence_general(g);
  CHECK_FALSE(general.coherent);
  CHECK(general.failure == CoherenceReport::Failure::BadCompleteSubgraph);

  CoherenceReport fc = coherence_fc(g);
  CHECK_FALSE(fc.coherent);  // the label-2 rest is a 4-cycle
  CHECK(fc.via == CoherenceVia::FCTheorem);
}

TEST_CASE("coherence via the fc theorem") {
  // an even tree plus a far-away odd edge
  LabeledGraph g(Convention::NoInfinityEdge, {"p", "q", "r", "s", "t"},
                 {{"p", "q", L(2)}, {"q", "r", L(2)}, {"s", "t", L(3)}});
  CHECK(is_fc_type(g));
  CHECK(admits_retractions_fc(g).admits);
  CHECK(coherence_fc(g).coherent);
  CHECK(coherence_general(g).coherent);

  LabeledGraph empty;
  CHECK(coherence_fc(empty).coherent);

  CHECK_THROWS_AS(coherence_fc(triangle(L(2), L(3), L(3))), Error);  // no retractions
  CHECK_THROWS_AS(coherence_fc(triangle(L(4), L(3), L(4))), Error);  // not FC
}

TEST_CASE("droms criterion") {
  LabeledGraph cycle(Convention::NoInfinityEdge, {"a", "b", "c", "d"},
                     {{"a", "b", L(2)},
                      {"b", "c", L(2)},
                      {"c", "d", L(2)},
                      {"a", "d", L(2)}});
  CHECK_FALSE(droms_raag(cycle));

  LabeledGraph path(Convention::NoInfinityEdge, {"a", "b", "c"},
                    {{"a", "b", L(2)}, {"b", "c", L(2)}});
  CHECK(droms_raag(path));

  LabeledGraph free3(Convention::NoTwoEdge, {"a", "b", "c"},
                     {{"a", "b", INF()}, {"b", "c", INF()}, {"a", "c", INF()}});
  CHECK(droms_raag(free3));

  CHECK_THROWS_AS(droms_raag(dihedral_graph(L(3))), Error);
}

TEST_CASE("droms agrees with the general lemma on random raags") {
  std::mt19937 rng(103);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 250; ++trial) {
      LabeledGraph g = random_graph(rng, n, {L(2), INF()});
      CHECK(droms_raag(g) == coherence_general(g).coherent);
    }
}

TEST_CASE("general lemma agrees with the fc theorem on admitting graphs") {
  std::mt19937 rng(107);
  int tested = 0;
  for (int trial = 0; trial < 2500 && tested < 300; ++trial) {
    LabeledGraph g = random_graph(rng, 4 + static_cast<int>(rng() % 2),
                                  {L(2), L(2), L(3), L(4), INF(), INF()});
    if (!is_fc_type(g)) continue;
    if (!admits_retractions_fc(g).admits) continue;
    ++tested;
    CHECK(coherence_fc(g).coherent == coherence_general(g).coherent);
  }
  CHECK(tested > 100);
}

#include "artin/coherence.hpp"

#include <array>

#include "artin/finite_type.hpp"
#include "artin/retraction.hpp"

namespace artin {

std::string coherence_failure_name(CoherenceReport::Failure f) {
  switch (f) {
    case CoherenceReport::Failure::None: return "none";
    case CoherenceReport::Failure::NotChordal: return "not-chordal";
    case CoherenceReport::Failure::BadCompleteSubgraph: return "bad-complete-subgraph";
    case CoherenceReport::Failure::ForbiddenSquare: return "forbidden-square";
  }
  return "?";
}

namespace {

bool complete_on(const LabeledGraph& g, const std::vector<int>& vs) {
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (g.label_at(vs[a], vs[b]).is_infinite()) return false;
  return true;
}

int count_non2(const LabeledGraph& g, const std::vector<int>& vs) {
  int c = 0;
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (g.label_at(vs[a], vs[b]) != Label::finite(2)) ++c;
  return c;
}

// the square of 2-edges i-j-k-l-i with one diagonal finite above 2 and the
// other infinite, in some ordering of the four vertices
bool forbidden_square(const LabeledGraph& g, const std::array<int, 4>& q) {
  static const std::array<std::array<int, 4>, 3> cycles{{
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
  const Label two = Label::finite(2);
  for (const auto& c : cycles) {
    bool ring = true;
    for (int i = 0; i < 4 && ring; ++i)
      ring = g.label_at(q[c[i]], q[c[(i + 1) % 4]]) == two;
    if (!ring) continue;
    Label d1 = g.label_at(q[c[0]], q[c[2]]);
    Label d2 = g.label_at(q[c[1]], q[c[3]]);
    if (d1.is_finite() && d1 != two && d2.is_infinite()) return true;
    if (d2.is_finite() && d2 != two && d1.is_infinite()) return true;
  }
  return false;
}

}  // namespace

CoherenceReport coherence_general(const LabeledGraph& g) {
  CoherenceReport r;
  r.via = CoherenceVia::GeneralLemma;
  const int n = g.size();

  if (!g.is_chordal()) {
    r.failure = CoherenceReport::Failure::NotChordal;
    return r;
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::vector<int> t{i, j, k};
        if (complete_on(g, t) && count_non2(g, t) > 1) {
          r.failure = CoherenceReport::Failure::BadCompleteSubgraph;
          r.witness = {g.vertices()[i], g.vertices()[j], g.vertices()[k]};
          return r;
        }
        for (int l = k + 1; l < n; ++l) {
          std::vector<int> q{i, j, k, l};
          if (complete_on(g, q) && count_non2(g, q) > 1) {
            r.failure = CoherenceReport::Failure::BadCompleteSubgraph;
            r.witness = {g.vertices()[i], g.vertices()[j], g.vertices()[k],
                         g.vertices()[l]};
            return r;
          }
        }
      }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (forbidden_square(g, {i, j, k, l})) {
            r.failure = CoherenceReport::Failure::ForbiddenSquare;
            r.witness = {g.vertices()[i], g.vertices()[j], g.vertices()[k],
                         g.vertices()[l]};
            return r;
          }

  r.coherent = true;
  return r;
}

CoherenceReport coherence_fc(const LabeledGraph& g) {
  bool in_scope = is_fc_type(g) && admits_retractions_fc(g).admits;
  if (!in_scope)
    throw Error(ErrorKind::NotInScope,
                "coherence by chordality needs an FC-type graph admitting retractions");
  CoherenceReport r;
  r.via = CoherenceVia::FCTheorem;
  if (!g.is_chordal()) {
    r.failure = CoherenceReport::Failure::NotChordal;
    return r;
  }
  if (!g.restrict_le2().is_chordal()) {
    r.failure = CoherenceReport::Failure::NotChordal;
    return r;
  }
  r.coherent = true;
  return r;
}

bool droms_raag(const LabeledGraph& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      Label l = g.label_at(i, j);
      if (l.is_finite() && l.value() != 2)
        throw Error(ErrorKind::NotRAAG, "labels other than 2 and infinity");
    }
  return g.is_chordal();
}

}  // namespace artin

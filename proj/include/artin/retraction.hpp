#ifndef ARTIN_RETRACTION_HPP
#define ARTIN_RETRACTION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

enum class TriangleReason {
  InfinityOddEven,
  InfinityOddOdd,
  Sph233,
  Sph234,
  Sph235,
  NotFC,
};

std::string triangle_reason_name(TriangleReason r);

struct OffendingTriangle {
  VertexSet vertices;
  std::array<Label, 3> labels;  // sorted, infinity last
  TriangleReason reason;
};

struct AdmissibilityReport {
  bool admits = false;
  std::vector<OffendingTriangle> offending;
};

// The odd-edge rule: fix X pointwise, send v outside X to its odd neighbour
// in X when there is one, to the identity otherwise.
GeneratorMap ordinary_map(const LabeledGraph& g, const VertexSet& x);

struct VerifyResult {
  bool ok = false;
  std::optional<std::pair<std::string, std::string>> violated_edge;
  explicit operator bool() const { return ok; }
};

// Checks that the map preserves every finite-labelled defining relation;
// relations with two distinct nontrivial images are decided inside the
// two-generator standard parabolic via its dihedral normal form.
VerifyResult verify_retraction(const LabeledGraph& g, const VertexSet& x,
                               const GeneratorMap& m);

// Classification of FC-type graphs by their triangles: admitted families are
// (2,2,k), (even,even,inf) and (k,inf,inf).
AdmissibilityReport admits_retractions_fc(const LabeledGraph& g);

// Exhaustive check of the ordinary map over every subset of the generators.
bool admits_ordinary_all(const LabeledGraph& g, int max_vertices = 16);

enum class TrichotomyCase { One, TripleEqual };

struct TrichotomyReport {
  std::string s;
  TrichotomyCase outcome = TrichotomyCase::TripleEqual;
  // identity images are empty optionals
  std::optional<std::string> value_intersection, value_xy, value_yx;
};

TrichotomyReport trichotomy(const LabeledGraph& g, const VertexSet& x,
                            const VertexSet& y, const std::string& s);

namespace detail {
// index-level ordinary images over a subset mask; -1 is the identity,
// std::nullopt flags an ambiguous odd target
std::optional<std::vector<int>> ordinary_images(const LabeledGraph& g,
                                                std::uint64_t xmask);
std::optional<std::pair<int, int>> verify_images(const LabeledGraph& g,
                                                 const std::vector<int>& images);
}  // namespace detail

}  // namespace artin

#endif

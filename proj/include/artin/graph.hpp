#ifndef ARTIN_GRAPH_HPP
#define ARTIN_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "artin/error.hpp"

namespace artin {

// Edge label of a Coxeter graph: an integer >= 2 or infinity.
class Label {
 public:
  Label() : m_(2) {}
  static Label finite(int m) {
    if (m < 2) throw Error(ErrorKind::BadLabel, "label must be >= 2, got " + std::to_string(m));
    return Label(m);
  }
  static Label infinity() { return Label(0); }

  bool is_finite() const { return m_ != 0; }
  bool is_infinite() const { return m_ == 0; }
  int value() const {
    if (m_ == 0) throw Error(ErrorKind::InfiniteLabel, "label is infinite");
    return m_;
  }
  bool is_odd() const { return m_ != 0 && m_ % 2 == 1; }
  bool is_even() const { return m_ != 0 && m_ % 2 == 0; }

  bool operator==(const Label& o) const { return m_ == o.m_; }
  bool operator!=(const Label& o) const { return m_ != o.m_; }
  // finite labels ascending, infinity last
  bool operator<(const Label& o) const {
    if (m_ == 0) return false;
    if (o.m_ == 0) return true;
    return m_ < o.m_;
  }

  std::string str() const { return m_ == 0 ? "inf" : std::to_string(m_); }

 private:
  explicit Label(int m) : m_(m) {}
  int m_;  // 0 encodes infinity
};

// Which labels an input omits: absent pairs materialize as infinity
// (NoInfinityEdge), as 2 (NoTwoEdge), or are rejected (FullEdge).
enum class Convention { NoInfinityEdge, NoTwoEdge, FullEdge };

std::string convention_name(Convention c);

// Vertex subsets are handled as sorted name lists throughout the public API.
using VertexSet = std::vector<std::string>;

struct Edge {
  std::string u, v;
  Label label;
};

struct TriangleEntry {
  VertexSet vertices;           // the 3-subset, sorted
  std::array<Label, 3> labels;  // sorted ascending, infinity last
};

// A finite simple graph with a total symmetric label map on vertex pairs.
// Input conventions only govern which pairs must be declared; after
// construction every pair carries an explicit label.
class LabeledGraph {
 public:
  LabeledGraph();
  LabeledGraph(Convention conv, std::vector<std::string> vertices,
               const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  bool has_vertex(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws UnknownVertex

  Label label(const std::string& u, const std::string& v) const;
  Label label_at(int i, int j) const;  // index variant, i != j
  Convention declared_convention() const { return convention_; }

  LabeledGraph induced(const VertexSet& sub) const;
  // link = finite-label neighbours, star = link + the vertex itself
  std::pair<VertexSet, VertexSet> link_star(const std::string& s) const;
  // components of the graph whose edges are the pairs with label != 2
  std::vector<VertexSet> irreducible_components() const;
  // components of the graph whose edges are the pairs with odd finite label
  std::vector<VertexSet> odd_classes() const;
  // keep label-2 pairs, everything else becomes infinity
  LabeledGraph restrict_le2() const;
  // on the finite-label view; every induced cycle of length >= 4 has a chord
  bool is_chordal() const;
  // no vertex meets two odd-labelled edges
  bool is_odd_odd_free() const;
  std::vector<TriangleEntry> triangle_labels() const;

  // Sorted-name helpers used across the library.
  VertexSet normalize_subset(const std::vector<std::string>& sub) const;
  std::uint64_t subset_mask(const VertexSet& sub) const;
  VertexSet subset_from_mask(std::uint64_t mask) const;

  // adjacency mask of v in the finite-label view
  std::uint64_t finite_adjacency(int v) const;
  std::uint64_t odd_adjacency(int v) const;
  std::uint64_t non2_adjacency(int v) const;

  bool operator==(const LabeledGraph& o) const {
    return names_ == o.names_ && labels_ == o.labels_;
  }
  bool operator!=(const LabeledGraph& o) const { return !(*this == o); }

 private:
  int pair_index(int i, int j) const;
  std::vector<VertexSet> components_of(const std::vector<std::uint64_t>& adj) const;

  Convention convention_;
  std::vector<std::string> names_;  // sorted, unique
  std::vector<Label> labels_;       // upper triangle, n*(n-1)/2 entries
  std::vector<std::uint64_t> finite_adj_, odd_adj_, non2_adj_;
};

}  // namespace artin

#endif

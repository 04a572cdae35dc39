#include "artin/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace artin {

std::string convention_name(Convention c) {
  switch (c) {
    case Convention::NoInfinityEdge: return "no-inf";
    case Convention::NoTwoEdge: return "no-2";
    case Convention::FullEdge: return "full";
  }
  return "?";
}

LabeledGraph::LabeledGraph() : convention_(Convention::NoInfinityEdge) {}

LabeledGraph::LabeledGraph(Convention conv, std::vector<std::string> vertices,
                           const std::vector<Edge>& edges)
    : convention_(conv), names_(std::move(vertices)) {
  for (const auto& n : names_)
    if (n.empty()) throw Error(ErrorKind::BadArgument, "empty vertex name");
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw Error(ErrorKind::BadArgument, "duplicate vertex declaration");
  if (names_.size() > 64)
    throw Error(ErrorKind::TooLarge, "graphs are limited to 64 vertices");

  const int n = size();
  labels_.assign(static_cast<size_t>(n) * (n - 1) / 2, Label());
  std::vector<char> seen(labels_.size(), 0);
  for (const auto& e : edges) {
    int i = index_of(e.u);
    int j = index_of(e.v);
    if (i == j)
      throw Error(ErrorKind::SelfPair, "self-labelled pair " + e.u);
    int p = pair_index(i, j);
    if (seen[p])
      throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + e.u + " " + e.v);
    seen[p] = 1;
    labels_[p] = e.label;
  }
  Label fill = conv == Convention::NoTwoEdge ? Label::finite(2) : Label::infinity();
  for (size_t p = 0; p < labels_.size(); ++p) {
    if (!seen[p]) {
      if (conv == Convention::FullEdge)
        throw Error(ErrorKind::MissingLabel,
                    "full-edge convention requires every pair to be labelled");
      labels_[p] = fill;
    }
  }

  finite_adj_.assign(n, 0);
  odd_adj_.assign(n, 0);
  non2_adj_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = labels_[pair_index(i, j)];
      if (l.is_finite()) {
        finite_adj_[i] |= 1ull << j;
        finite_adj_[j] |= 1ull << i;
      }
      if (l.is_odd()) {
        odd_adj_[i] |= 1ull << j;
        odd_adj_[j] |= 1ull << i;
      }
      if (l != Label::finite(2)) {
        non2_adj_[i] |= 1ull << j;
        non2_adj_[j] |= 1ull << i;
      }
    }
}

int LabeledGraph::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // index into the upper triangle, column-major so pairs of a prefix come first
  return j * (j - 1) / 2 + i;
}

bool LabeledGraph::has_vertex(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

int LabeledGraph::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw Error(ErrorKind::UnknownVertex, "unknown vertex " + name);
  return static_cast<int>(it - names_.begin());
}

Label LabeledGraph::label(const std::string& u, const std::string& v) const {
  int i = index_of(u);
  int j = index_of(v);
  if (i == j) throw Error(ErrorKind::SelfPair, "label of a self pair " + u);
  return labels_[pair_index(i, j)];
}

Label LabeledGraph::label_at(int i, int j) const {
  if (i == j) throw Error(ErrorKind::SelfPair, "label of a self pair");
  return labels_[pair_index(i, j)];
}

VertexSet LabeledGraph::normalize_subset(const std::vector<std::string>& sub) const {
  VertexSet out = sub;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& v : out) index_of(v);
  return out;
}

std::uint64_t LabeledGraph::subset_mask(const VertexSet& sub) const {
  std::uint64_t m = 0;
  for (const auto& v : sub) m |= 1ull << index_of(v);
  return m;
}

VertexSet LabeledGraph::subset_from_mask(std::uint64_t mask) const {
  VertexSet out;
  for (int i = 0; i < size(); ++i)
    if (mask >> i & 1) out.push_back(names_[i]);
  return out;
}

std::uint64_t LabeledGraph::finite_adjacency(int v) const { return finite_adj_[v]; }
std::uint64_t LabeledGraph::odd_adjacency(int v) const { return odd_adj_[v]; }
std::uint64_t LabeledGraph::non2_adjacency(int v) const { return non2_adj_[v]; }

LabeledGraph LabeledGraph::induced(const VertexSet& sub) const {
  VertexSet verts = normalize_subset(sub);
  std::vector<Edge> edges;
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      edges.push_back({verts[a], verts[b], label(verts[a], verts[b])});
  return LabeledGraph(Convention::FullEdge, verts, edges);
}

std::pair<VertexSet, VertexSet> LabeledGraph::link_star(const std::string& s) const {
  int v = index_of(s);
  VertexSet link = subset_from_mask(finite_adj_[v]);
  VertexSet star = subset_from_mask(finite_adj_[v] | (1ull << v));
  return {link, star};
}

std::vector<VertexSet> LabeledGraph::components_of(
    const std::vector<std::uint64_t>& adj) const {
  const int n = size();
  std::vector<VertexSet> out;
  std::uint64_t visited = 0;
  for (int i = 0; i < n; ++i) {
    if (visited >> i & 1) continue;
    std::uint64_t comp = 1ull << i;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (int j = 0; j < n; ++j)
        if (frontier >> j & 1) next |= adj[j];
      frontier = next & ~comp;
      comp |= frontier;
    }
    visited |= comp;
    out.push_back(subset_from_mask(comp));
  }
  return out;
}

std::vector<VertexSet> LabeledGraph::irreducible_components() const {
  return components_of(non2_adj_);
}

std::vector<VertexSet> LabeledGraph::odd_classes() const {
  return components_of(odd_adj_);
}

LabeledGraph LabeledGraph::restrict_le2() const {
  std::vector<Edge> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      Label l = labels_[pair_index(i, j)];
      edges.push_back({names_[i], names_[j],
                       l == Label::finite(2) ? l : Label::infinity()});
    }
  return LabeledGraph(Convention::FullEdge, names_, edges);
}

// Lexicographic BFS followed by the standard perfect-elimination check
// (Golumbic, Algorithmic Graph Theory, ch. 4), on the finite-label view.
bool LabeledGraph::is_chordal() const {
  const int n = size();
  if (n <= 3) return true;

  std::vector<int> order;               // visit order of LexBFS
  std::vector<std::uint64_t> lex(n, 0);  // accumulated lexicographic label
  std::vector<char> numbered(n, 0);
  for (int step = n - 1; step >= 0; --step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[v]) continue;
      if (best == -1 || lex[v] > lex[best]) best = v;
    }
    numbered[best] = 1;
    order.push_back(best);
    for (int v = 0; v < n; ++v)
      if (!numbered[v] && (finite_adj_[best] >> v & 1)) lex[v] |= 1ull << step;
  }

  // reverse of the LexBFS order is the elimination candidate
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = n - 1 - i;
  for (int v = 0; v < n; ++v) {
    std::uint64_t later = 0;
    for (int u = 0; u < n; ++u)
      if ((finite_adj_[v] >> u & 1) && pos[u] > pos[v]) later |= 1ull << u;
    if (!later) continue;
    int parent = -1;
    for (int u = 0; u < n; ++u)
      if ((later >> u & 1) && (parent == -1 || pos[u] < pos[parent])) parent = u;
    std::uint64_t rest = later & ~(1ull << parent);
    if (rest & ~finite_adj_[parent]) return false;
  }
  return true;
}

bool LabeledGraph::is_odd_odd_free() const {
  for (int v = 0; v < size(); ++v)
    if (std::popcount(odd_adj_[v]) >= 2) return false;
  return true;
}

std::vector<TriangleEntry> LabeledGraph::triangle_labels() const {
  std::vector<TriangleEntry> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        TriangleEntry t;
        t.vertices = {names_[i], names_[j], names_[k]};
        t.labels = {label_at(i, j), label_at(i, k), label_at(j, k)};
        std::sort(t.labels.begin(), t.labels.end());
        out.push_back(std::move(t));
      }
  return out;
}

}  // namespace artin

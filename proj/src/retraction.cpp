#include "artin/retraction.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "artin/dihedral.hpp"
#include "artin/finite_type.hpp"

namespace artin {

std::string triangle_reason_name(TriangleReason r) {
  switch (r) {
    case TriangleReason::InfinityOddEven: return "infinity-odd-even";
    case TriangleReason::InfinityOddOdd: return "infinity-odd-odd";
    case TriangleReason::Sph233: return "spherical-233";
    case TriangleReason::Sph234: return "spherical-234";
    case TriangleReason::Sph235: return "spherical-235";
    case TriangleReason::NotFC: return "not-fc";
  }
  return "?";
}

namespace detail {

std::optional<std::vector<int>> ordinary_images(const LabeledGraph& g,
                                                std::uint64_t xmask) {
  const int n = g.size();
  std::vector<int> img(n, -1);
  for (int v = 0; v < n; ++v) {
    if (xmask >> v & 1) {
      img[v] = v;
      continue;
    }
    std::uint64_t odd = g.odd_adjacency(v) & xmask;
    if (!odd) continue;
    if (std::popcount(odd) > 1) return std::nullopt;
    img[v] = std::countr_zero(odd);
  }
  return img;
}

namespace {

// does the braid relation of length l between two distinct generators hold
// after the substitution, decided in the dihedral group with label k
bool relation_holds_distinct(int l, const Label& k) {
  if (k.is_infinite()) return false;  // free reduction separates the two sides
  static std::map<std::pair<int, int>, bool> cache;
  static std::mutex mu;
  std::pair<int, int> key{l, k.value()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  bool eq = dihedral_equal(k.value(), alternating("a", "b", l, Side::Left),
                           alternating("b", "a", l, Side::Left));
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = eq;
  return eq;
}

}  // namespace

std::optional<std::pair<int, int>> verify_images(const LabeledGraph& g,
                                                 const std::vector<int>& images) {
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = g.label_at(i, j);
      if (l.is_infinite()) continue;
      int p = images[i], q = images[j];
      if (p == q) continue;                       // x^l = x^l, or 1 = 1
      if (p == -1 || q == -1) {                   // power arithmetic on one letter
        if (l.value() % 2 != 0) return std::make_pair(i, j);
        continue;
      }
      if (!relation_holds_distinct(l.value(), g.label_at(p, q)))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace detail

GeneratorMap ordinary_map(const LabeledGraph& g, const VertexSet& x) {
  VertexSet target = g.normalize_subset(x);
  std::uint64_t xmask = g.subset_mask(target);
  auto img = detail::ordinary_images(g, xmask);
  if (!img) {
    int v = 0;
    while (std::popcount(g.odd_adjacency(v) & xmask) <= 1) ++v;
    throw Error(ErrorKind::AmbiguousOddTarget,
                "generator " + g.vertices()[v] +
                    " has several odd edges into the target set");
  }
  std::map<std::string, std::optional<std::string>> images;
  for (int v = 0; v < g.size(); ++v)
    images[g.vertices()[v]] =
        (*img)[v] == -1 ? std::nullopt
                        : std::optional<std::string>(g.vertices()[(*img)[v]]);
  return GeneratorMap(g, target, std::move(images));
}

VerifyResult verify_retraction(const LabeledGraph& g, const VertexSet& x,
                               const GeneratorMap& m) {
  VertexSet target = g.normalize_subset(x);
  if (m.graph() != g || m.target() != target)
    throw Error(ErrorKind::BadArgument, "map does not target the given subset");
  std::vector<int> images(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    const auto& img = m.image(g.vertices()[v]);
    if (img) images[v] = g.index_of(*img);
  }
  auto violated = detail::verify_images(g, images);
  VerifyResult out;
  out.ok = !violated.has_value();
  if (violated)
    out.violated_edge = std::make_pair(g.vertices()[violated->first],
                                       g.vertices()[violated->second]);
  return out;
}

AdmissibilityReport admits_retractions_fc(const LabeledGraph& g) {
  if (!is_fc_type(g))
    throw Error(ErrorKind::NotFCType, "graph is not of FC type");
  AdmissibilityReport report;
  for (const auto& t : g.triangle_labels()) {
    const Label &l0 = t.labels[0], &l1 = t.labels[1], &l2 = t.labels[2];
    std::optional<TriangleReason> reason;
    if (l2.is_infinite()) {
      if (l1.is_finite()) {  // exactly one infinite label
        if (l0.is_odd() && l1.is_odd()) reason = TriangleReason::InfinityOddOdd;
        else if (l0.is_odd() || l1.is_odd()) reason = TriangleReason::InfinityOddEven;
      }
    } else {
      if (l0.value() == 2 && l1.value() == 2) {
        // (2,2,k) is allowed
      } else if (l0.value() == 2 && l1.value() == 3 && l2.value() == 3)
        reason = TriangleReason::Sph233;
      else if (l0.value() == 2 && l1.value() == 3 && l2.value() == 4)
        reason = TriangleReason::Sph234;
      else if (l0.value() == 2 && l1.value() == 3 && l2.value() == 5)
        reason = TriangleReason::Sph235;
      else
        reason = TriangleReason::NotFC;  // unreachable for FC inputs
    }
    if (reason) report.offending.push_back({t.vertices, t.labels, *reason});
  }
  report.admits = report.offending.empty();
  return report;
}

bool admits_ordinary_all(const LabeledGraph& g, int max_vertices) {
  const int n = g.size();
  if (n > max_vertices || n > 62)
    throw Error(ErrorKind::TooLarge,
                "subset enumeration over " + std::to_string(n) + " vertices");
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto img = detail::ordinary_images(g, mask);
    if (!img) return false;
    if (detail::verify_images(g, *img)) return false;
  }
  return true;
}

TrichotomyReport trichotomy(const LabeledGraph& g, const VertexSet& x,
                            const VertexSet& y, const std::string& s) {
  if (!g.is_odd_odd_free())
    throw Error(ErrorKind::NotOddOddFree, "graph has two adjacent odd edges");
  int sv = g.index_of(s);
  std::uint64_t xm = g.subset_mask(g.normalize_subset(x));
  std::uint64_t ym = g.subset_mask(g.normalize_subset(y));
  auto ix = *detail::ordinary_images(g, xm);   // unambiguous: odd-odd-free
  auto iy = *detail::ordinary_images(g, ym);
  auto ixy = *detail::ordinary_images(g, xm & ym);

  auto compose = [&](const std::vector<int>& outer, int v) {
    return v == -1 ? -1 : outer[v];
  };
  int vi = ixy[sv];
  int vxy = compose(ix, iy[sv]);
  int vyx = compose(iy, ix[sv]);

  TrichotomyReport r;
  r.s = s;
  auto name = [&](int v) -> std::optional<std::string> {
    if (v == -1) return std::nullopt;
    return g.vertices()[v];
  };
  r.value_intersection = name(vi);
  r.value_xy = name(vxy);
  r.value_yx = name(vyx);
  r.outcome = (vi == vxy && vi == vyx) ? TrichotomyCase::TripleEqual
                                       : TrichotomyCase::One;
  return r;
}

}  // namespace artin

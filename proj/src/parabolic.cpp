#include "artin/parabolic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "artin/retraction.hpp"

namespace artin {

namespace {

void require_word_in_graph(const LabeledGraph& g, const Word& w) {
  for (const auto& l : w)
    if (!g.has_vertex(l.gen))
      throw Error(ErrorKind::UnknownGenerator, "letter " + l.gen + " outside the graph");
}

void require_ordinary_admissible(const LabeledGraph& g) {
  if (!g.is_odd_odd_free())
    throw Error(ErrorKind::NotOddOddFree, "graph has two adjacent odd edges");
  if (!admits_ordinary_all(g))
    throw Error(ErrorKind::NotAdmissible, "graph does not admit ordinary retractions");
}

}  // namespace

OCSets oc_sets(const LabeledGraph& g, const VertexSet& x, const VertexSet& y) {
  std::uint64_t xm = g.subset_mask(g.normalize_subset(x));
  std::uint64_t ym = g.subset_mask(g.normalize_subset(y));
  std::uint64_t o_xy = 0, o_yx = 0;
  for (int v = 0; v < g.size(); ++v) {
    if ((xm & ~ym) >> v & 1 && (g.odd_adjacency(v) & (ym & ~xm))) o_xy |= 1ull << v;
    if ((ym & ~xm) >> v & 1 && (g.odd_adjacency(v) & (xm & ~ym))) o_yx |= 1ull << v;
  }
  OCSets out;
  out.o_xy = g.subset_from_mask(o_xy);
  out.c_xy = g.subset_from_mask((xm & ym) | o_xy);
  out.o_yx = g.subset_from_mask(o_yx);
  out.c_yx = g.subset_from_mask((xm & ym) | o_yx);
  return out;
}

IntersectionRewrite intersect_rewrite(const LabeledGraph& g, const Word& f,
                                      const Word& gw, const VertexSet& x,
                                      const VertexSet& y) {
  require_word_in_graph(g, f);
  require_word_in_graph(g, gw);
  require_ordinary_admissible(g);
  VertexSet xs = g.normalize_subset(x), ys = g.normalize_subset(y);
  GeneratorMap rho_x = ordinary_map(g, xs);
  GeneratorMap rho_y = ordinary_map(g, ys);

  Word h = reduce_free(f.inverse() * gw);
  Word xw = rho_x.apply(h);
  Word k = reduce_free(h.inverse() * xw);
  Word yw = rho_y.apply(k);

  OCSets oc = oc_sets(g, xs, ys);
  IntersectionRewrite out;
  out.left = {reduce_free(f * xw), oc.c_xy};
  out.right = {reduce_free(gw * yw), oc.c_yx};
  out.x = xw;
  out.y = yw;
  return out;
}

Word extended_retraction(const LabeledGraph& g, const ParabolicDescriptor& p,
                         const Word& w) {
  require_word_in_graph(g, p.conjugator);
  require_word_in_graph(g, w);
  try {
    require_ordinary_admissible(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotOddOddFree)
      throw Error(ErrorKind::NotAdmissible, e.what());
    throw;
  }
  GeneratorMap rho = ordinary_map(g, g.normalize_subset(p.base));
  const Word& f = p.conjugator;
  return reduce_free(f * rho.apply(reduce_free(f.inverse() * w * f)) * f.inverse());
}

VertexSet x_perp(const LabeledGraph& g, const VertexSet& x) {
  VertexSet xs = g.normalize_subset(x);
  std::uint64_t xm = g.subset_mask(xs);
  std::uint64_t out = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (xm >> v & 1) continue;
    bool commutes = true;
    for (int u = 0; u < g.size() && commutes; ++u)
      if (xm >> u & 1)
        commutes = g.label_at(u, v) == Label::finite(2);
    if (commutes) out |= 1ull << v;
  }
  return g.subset_from_mask(out);
}

Word elementary_ribbon(const LabeledGraph& g, const std::string& x,
                       const std::string& y) {
  Label l = g.label(x, y);
  if (l.is_infinite())
    throw Error(ErrorKind::InfiniteLabel, "no ribbon across an infinite label");
  if (l.value() == 2)
    throw Error(ErrorKind::LabelTooSmall, "no ribbon across a label-2 edge");
  return alternating(y, x, l.value() - 1, Side::Left);
}

namespace {

struct RibbonStep {
  Word word;
  std::uint64_t target;
};

// Elementary ribbons available from the subset `xm`: x must be a cyclic
// irreducible component of A_X and {x,y} the dihedral component of y in
// A_{X u {y}}, with a finite label > 2. Each comes in the two alternating
// spellings together with their inverses.
std::vector<RibbonStep> elementary_steps(const LabeledGraph& g, std::uint64_t xm) {
  std::vector<RibbonStep> out;
  const int n = g.size();
  for (int x = 0; x < n; ++x) {
    if (!(xm >> x & 1)) continue;
    if (g.non2_adjacency(x) & xm) continue;  // not a cyclic component
    for (int y = 0; y < n; ++y) {
      if (xm >> y & 1) continue;
      Label l = g.label_at(x, y);
      if (l.is_infinite() || l.value() <= 2) continue;
      // the component of y inside X u {y} must be exactly {x, y}
      if (g.non2_adjacency(y) & (xm & ~(1ull << x))) continue;
      int m = l.value();
      std::uint64_t target = m % 2 == 1 ? (xm & ~(1ull << x)) | (1ull << y) : xm;
      const std::string& xn = g.vertices()[x];
      const std::string& yn = g.vertices()[y];
      Word lead = alternating(yn, xn, m - 1, Side::Left);   // yxy...
      Word trail = alternating(xn, yn, m - 1, Side::Right);  // ...yxy
      out.push_back({lead, target});
      out.push_back({lead.inverse(), target});
      if (m % 2 == 1) {  // the two spellings differ only for odd labels
        out.push_back({trail, target});
        out.push_back({trail.inverse(), target});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<RibbonEntry> conj_generators(const LabeledGraph& g, const VertexSet& x,
                                         int depth) {
  if (depth < 0) throw Error(ErrorKind::BadArgument, "negative ribbon depth");
  VertexSet xs = g.normalize_subset(x);
  std::uint64_t xm = g.subset_mask(xs);

  struct Chain {
    Word word;
    std::uint64_t target;
  };
  std::map<std::uint64_t, std::vector<RibbonStep>> step_cache;
  auto steps_of = [&](std::uint64_t mask) -> const std::vector<RibbonStep>& {
    auto it = step_cache.find(mask);
    if (it == step_cache.end())
      it = step_cache.emplace(mask, elementary_steps(g, mask)).first;
    return it->second;
  };

  std::vector<Chain> frontier{{Word(), xm}};
  std::set<std::pair<std::string, std::uint64_t>> seen;
  std::vector<RibbonEntry> out;
  auto emit = [&](const Word& w, std::uint64_t target) {
    if (seen.insert({w.str(), target}).second) {
      out.push_back({w, g.subset_from_mask(target)});
      return true;
    }
    return false;
  };
  emit(Word(), xm);
  for (int step = 0; step < depth; ++step) {
    std::vector<Chain> next;
    for (const auto& chain : frontier)
      for (const auto& ribbon : steps_of(chain.target)) {
        Chain ext{reduce_free(chain.word * ribbon.word), ribbon.target};
        // chains meeting an already emitted (word, subset) state add nothing
        if (emit(ext.word, ext.target)) next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const RibbonEntry& a, const RibbonEntry& b) {
    return a.word.str() != b.word.str() ? a.word.str() < b.word.str()
                                        : a.target < b.target;
  });
  return out;
}

bool property_c_precondition(const LabeledGraph& g, const VertexSet& x,
                             const VertexSet& y) {
  OCSets oc = oc_sets(g, x, y);
  std::uint64_t d = g.subset_mask(oc.c_xy) | g.subset_mask(oc.c_yx);
  std::uint64_t all = g.size() == 0 ? 0 : (g.size() == 64 ? ~0ull : (1ull << g.size()) - 1);
  for (int v = 0; v < g.size(); ++v) {
    if (d >> v & 1) continue;
    if ((g.finite_adjacency(v) | (1ull << v)) != all) return false;
  }
  return true;
}

AmalgamSplit amalgam_split(const LabeledGraph& g, const std::string& s) {
  int v = g.index_of(s);
  AmalgamSplit out;
  auto [link, star] = g.link_star(s);
  out.link = link;
  out.star = star;
  std::uint64_t all = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
  out.rest = g.subset_from_mask(all & ~(1ull << v));
  return out;
}

}  // namespace artin

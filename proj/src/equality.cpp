#include "artin/equality.hpp"

#include <algorithm>

namespace artin {

namespace {

Ternary trivial_rec(const LabeledGraph& g, const VertexSet& sub, const Word& w);

// syllable reduction in a free product: parts index letters, syllables that
// become trivial in their factor are dropped as they close
Ternary trivial_free_product(const LabeledGraph& g,
                             const std::vector<VertexSet>& parts, const Word& w) {
  auto part_of = [&](const std::string& gen) -> int {
    for (size_t p = 0; p < parts.size(); ++p)
      if (std::binary_search(parts[p].begin(), parts[p].end(), gen))
        return static_cast<int>(p);
    return -1;
  };
  struct Syllable {
    int part;
    Word word;
  };
  std::vector<Syllable> stack;
  for (const auto& l : w) {
    int p = part_of(l.gen);
    if (!stack.empty() && stack.back().part == p) {
      stack.back().word.push(l);
    } else {
      stack.push_back({p, Word::generator(l.gen, l.sign)});
    }
    Ternary t = trivial_rec(g, parts[stack.back().part], stack.back().word);
    if (t == Ternary::Unknown) return t;
    if (t == Ternary::Yes) stack.pop_back();
  }
  return stack.empty() ? Ternary::Yes : Ternary::No;
}

Ternary trivial_rec(const LabeledGraph& g, const VertexSet& sub, const Word& w) {
  if (sub.empty()) return Ternary::Yes;  // letters were validated against sub

  if (sub.size() == 1) {
    long long e = 0;
    for (const auto& l : w) e += l.sign;
    return e == 0 ? Ternary::Yes : Ternary::No;
  }

  LabeledGraph h = g.induced(sub);

  auto direct = h.irreducible_components();
  if (direct.size() > 1) {
    // direct product: trivial iff every projection is
    for (const auto& part : direct) {
      Word proj;
      for (const auto& l : w)
        if (std::binary_search(part.begin(), part.end(), l.gen)) proj.push(l);
      Ternary t = trivial_rec(g, part, proj);
      if (t != Ternary::Yes) return t;
    }
    return Ternary::Yes;
  }

  // components of the finite-label view; cross labels are all infinity
  std::vector<VertexSet> parts;
  {
    std::vector<char> used(sub.size(), 0);
    for (size_t i = 0; i < sub.size(); ++i) {
      if (used[i]) continue;
      std::vector<size_t> queue{i};
      used[i] = 1;
      VertexSet comp{sub[i]};
      while (!queue.empty()) {
        size_t cur = queue.back();
        queue.pop_back();
        for (size_t j = 0; j < sub.size(); ++j)
          if (!used[j] && h.label(sub[cur], sub[j]).is_finite()) {
            used[j] = 1;
            queue.push_back(j);
            comp.push_back(sub[j]);
          }
      }
      std::sort(comp.begin(), comp.end());
      parts.push_back(std::move(comp));
    }
  }
  if (parts.size() > 1) return trivial_free_product(g, parts, w);

  if (sub.size() == 2) {
    // connected in both views: a single finite edge with label > 2
    Label l = h.label(sub[0], sub[1]);
    return dihedral_nf(l.value(), w, sub[0], sub[1]).is_identity() ? Ternary::Yes
                                                                   : Ternary::No;
  }
  return Ternary::Unknown;
}

}  // namespace

Ternary word_is_trivial(const LabeledGraph& g, const VertexSet& sub, const Word& w) {
  VertexSet x = g.normalize_subset(sub);
  for (const auto& l : w)
    if (!std::binary_search(x.begin(), x.end(), l.gen))
      throw Error(ErrorKind::UnknownGenerator,
                  "letter " + l.gen + " outside the subset");
  return trivial_rec(g, x, reduce_free(w));
}

Ternary words_equal(const LabeledGraph& g, const VertexSet& sub, const Word& w1,
                    const Word& w2) {
  VertexSet x = g.normalize_subset(sub);
  for (const auto& l : w1)
    if (!std::binary_search(x.begin(), x.end(), l.gen))
      throw Error(ErrorKind::UnknownGenerator,
                  "letter " + l.gen + " outside the subset");
  for (const auto& l : w2)
    if (!std::binary_search(x.begin(), x.end(), l.gen))
      throw Error(ErrorKind::UnknownGenerator,
                  "letter " + l.gen + " outside the subset");
  return trivial_rec(g, x, reduce_free(w1 * w2.inverse()));
}

}  // namespace artin

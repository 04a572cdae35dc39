#ifndef ARTIN_PARABOLIC_HPP
#define ARTIN_PARABOLIC_HPP

#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// conjugator * A_base * conjugator^-1; an empty base is the trivial subgroup
struct ParabolicDescriptor {
  Word conjugator;
  VertexSet base;
};

struct OCSets {
  VertexSet o_xy, c_xy, o_yx, c_yx;
};

// O_{X,Y}: elements of X\Y joined to Y\X by an odd edge; C = (X n Y) u O.
OCSets oc_sets(const LabeledGraph& g, const VertexSet& x, const VertexSet& y);

struct IntersectionRewrite {
  ParabolicDescriptor left;   // (f x, C_{X,Y})
  ParabolicDescriptor right;  // (g y, C_{Y,X})
  Word x;                     // in A_X
  Word y;                     // in A_Y
};

// Rewrites f A_X f^-1 n g A_Y g^-1 over the C-sets; purely symbolic, the
// subgroup-level equality is the supporting theorem.
IntersectionRewrite intersect_rewrite(const LabeledGraph& g, const Word& f,
                                      const Word& gw, const VertexSet& x,
                                      const VertexSet& y);

// f rho_X(f^-1 w f) f^-1, freely reduced
Word extended_retraction(const LabeledGraph& g, const ParabolicDescriptor& p,
                         const Word& w);

// generators outside X commuting with all of X
VertexSet x_perp(const LabeledGraph& g, const VertexSet& x);

// the alternating word yxy... of length m_{x,y} - 1
Word elementary_ribbon(const LabeledGraph& g, const std::string& x,
                       const std::string& y);

struct RibbonEntry {
  Word word;
  VertexSet target;
};

// Products of elementary ribbons up to the given chain length, each with the
// subset they carry X to. Conjugator completeness is the normalizer
// conjecture's claim and is assumed, not verified.
std::vector<RibbonEntry> conj_generators(const LabeledGraph& g, const VertexSet& x,
                                         int depth);

// all vertices outside C_{X,Y} u C_{Y,X} have star equal to the whole set
bool property_c_precondition(const LabeledGraph& g, const VertexSet& x,
                             const VertexSet& y);

struct AmalgamSplit {
  VertexSet star;  // st(s)
  VertexSet link;  // lk(s) = star n rest
  VertexSet rest;  // S \ {s}
};

AmalgamSplit amalgam_split(const LabeledGraph& g, const std::string& s);

}  // namespace artin

#endif

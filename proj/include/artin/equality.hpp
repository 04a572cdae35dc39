#ifndef ARTIN_EQUALITY_HPP
#define ARTIN_EQUALITY_HPP

#include "artin/dihedral.hpp"
#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

// The word problem for general Artin groups is open; equality checks answer
// Unknown instead of guessing outside the supported class.
enum class Ternary { No, Yes, Unknown };

// Decides w = 1 in the standard parabolic A_X when the induced graph
// decomposes recursively into integers, finite dihedrals, direct products
// (all cross labels 2) and free products (all cross labels infinity).
Ternary word_is_trivial(const LabeledGraph& g, const VertexSet& sub, const Word& w);

Ternary words_equal(const LabeledGraph& g, const VertexSet& sub, const Word& w1,
                    const Word& w2);

}  // namespace artin

#endif

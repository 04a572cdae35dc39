#ifndef ARTIN_FINITE_TYPE_HPP
#define ARTIN_FINITE_TYPE_HPP

#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// Names of the irreducible finite Coxeter types, with I2(3) and I2(4)
// canonicalized to A2 and B2. Z is the single-vertex case.
struct CoxeterType {
  enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2, Z, NonSpherical };
  Family family = Family::NonSpherical;
  int parameter = 0;  // rank for A/B/D, the label m for I2

  bool spherical() const { return family != Family::NonSpherical; }
  std::string str() const;
  bool operator==(const CoxeterType& o) const {
    return family == o.family && parameter == o.parameter;
  }
};

// a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients
struct QuadRat {
  long long an = 0, ad = 1;  // a = an/ad, and so on
  long long bn = 0, bd = 1;
  long long cn = 0, cd = 1;
  long long dn = 0, dd = 1;
  bool operator==(const QuadRat& o) const;
  long double value() const;
};

struct CosineEntry {
  bool exact = false;  // true when the label is in {2,3,4,6,inf} or diagonal
  QuadRat q;           // meaningful only when exact
  long double value = 0;
};

// B[s][t] = -cos(pi/m_{s,t}) off the diagonal, 1 on it.
std::vector<std::vector<CosineEntry>> cosine_matrix(const LabeledGraph& g);

CoxeterType classify_irreducible(const LabeledGraph& g);
bool is_spherical(const LabeledGraph& g);
bool is_fc_type(const LabeledGraph& g);

namespace detail {
enum class Definiteness { Positive, NotPositive, Inconclusive };
// Sylvester criterion on the cosine matrix; exact over Q(sqrt2, sqrt3) when
// all labels allow it, floating point with a 1e-12 tolerance otherwise.
Definiteness cosine_positive_definite(const LabeledGraph& g);
std::vector<std::uint64_t> maximal_finite_cliques(const LabeledGraph& g);
}  // namespace detail

}  // namespace artin

#endif

#ifndef ARTIN_ORACLES_HPP
#define ARTIN_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/graph.hpp"
#include "artin/words.hpp"

namespace artin {

struct SearchOutcome {
  std::optional<Word> found;
  long long searched_count = 0;
  int bound = 0;
};

// Exhaustive search for x in F_2 = <a,b> solving (a,x)_r = (x,a)_r together
// with (b,x)_s = (x,b)_s, over freely reduced words of length <= max_len.
SearchOutcome f2_system_search(int r, int s, int max_len);

// single-equation control: (a,x)_r = (x,a)_r alone
SearchOutcome f2_single_search(int r, int max_len);

// Equality classes of the words of length <= radius in the dihedral group
// with label m, computed by closing the seed set under free reduction and
// one-relator rewriting. Independent of the Garside normal form.
class DihedralBall {
 public:
  DihedralBall(int m, int radius);  // radius <= 7, otherwise TooLarge

  int m() const { return m_; }
  int radius() const { return radius_; }
  bool same_class(const Word& w1, const Word& w2) const;
  // partition of the freely reduced words of length <= radius
  const std::vector<std::vector<Word>>& classes() const { return classes_; }
  std::size_t visited_words() const { return parent_.size(); }

 private:
  std::uint64_t find_root(std::uint64_t code) const;
  int m_;
  int radius_;
  mutable std::unordered_map<std::uint64_t, std::uint64_t> parent_;
  std::vector<std::vector<Word>> classes_;
};

struct Triangle234Outcome {
  SearchOutcome outcome;      // x with a x = x a and b x b = x b x
  long long commuting_count = 0;
  bool parity_ok = false;     // even b-exponent for every commuting candidate
};

// Enumerates normal forms of I2(4) with |Delta power| <= bound and canonical
// length <= bound; commutation and the defining equation are decided through
// the dihedral normal form.
Triangle234Outcome triangle_234_search(int bound);

// control: the first nontrivial x with a x = x a (expected: a itself)
SearchOutcome triangle_234_commuting_search(int bound);

struct Abelianization {
  int rank = 0;
  std::map<std::string, int> class_of;
};

// Generators collapse along odd edges in the abelianization; the rank is the
// number of odd classes.
Abelianization abelianization_classes(const LabeledGraph& g);

}  // namespace artin

#endif

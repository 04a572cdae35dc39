#ifndef ARTIN_DIHEDRAL_HPP
#define ARTIN_DIHEDRAL_HPP

#include <string>
#include <vector>

#include "artin/words.hpp"

namespace artin {

// Left-greedy Garside normal form Delta^p x_1 ... x_r in the dihedral Artin
// group on two generators with relation of length m. Each factor is a proper
// alternating prefix of Delta, consecutive factors share their boundary
// letter, and Delta powers are pushed to the left.
struct DihedralNF {
  struct Simple {
    int first = 0;  // 0 = gen_a, 1 = gen_b
    int len = 0;    // 1 <= len <= m-1
    bool operator==(const Simple& o) const { return first == o.first && len == o.len; }
  };

  int m = 2;
  std::string gen_a = "a", gen_b = "b";
  long long power = 0;
  std::vector<Simple> factors;

  bool is_identity() const { return power == 0 && factors.empty(); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  Word factor_word(const Simple& s) const;
  Word delta_word() const;  // the alternating word of length m starting at gen_a
  Word to_word() const;
  std::string str() const;

  bool operator==(const DihedralNF& o) const {
    return m == o.m && gen_a == o.gen_a && gen_b == o.gen_b && power == o.power &&
           factors == o.factors;
  }
  bool operator!=(const DihedralNF& o) const { return !(*this == o); }
};

DihedralNF dihedral_nf(int m, const Word& w, const std::string& gen_a = "a",
                       const std::string& gen_b = "b");

// equality in the dihedral Artin group via identical normal forms
bool dihedral_equal(int m, const Word& a, const Word& b,
                    const std::string& gen_a = "a", const std::string& gen_b = "b");

}  // namespace artin

#endif

#include "artin/dihedral.hpp"

namespace artin {

namespace {

// incremental normal-form state over letters 0/1
struct NfState {
  int m;
  long long power = 0;
  std::vector<DihedralNF::Simple> factors;

  int last_letter(const DihedralNF::Simple& s) const {
    return s.len % 2 == 1 ? s.first : 1 - s.first;
  }

  // Delta conjugation swaps the letters when m is odd
  void twist_all() {
    if (m % 2 == 0) return;
    for (auto& f : factors) f.first = 1 - f.first;
  }

  void push_positive(int g) {
    if (!factors.empty()) {
      auto& back = factors.back();
      int last = last_letter(back);
      if (last != g) {
        if (back.len + 1 == m) {
          // the factor completes to Delta; absorb and push it left
          factors.pop_back();
          ++power;
          twist_all();
        } else {
          ++back.len;
        }
        return;
      }
    }
    factors.push_back({g, 1});
  }

  void push_negative(int g) {
    // w g^-1 = Delta^-1 (Delta w Delta^-1) (Delta g^-1); the second factor is
    // the alternating word of length m-1 ending at the other letter
    --power;
    twist_all();
    for (int i = 0; i < m - 1; ++i)
      push_positive((m - 2 - i) % 2 == 0 ? 1 - g : g);
  }
};

}  // namespace

Word DihedralNF::factor_word(const Simple& s) const {
  std::vector<Letter> out;
  for (int i = 0; i < s.len; ++i)
    out.push_back({(i % 2 == 0) == (s.first == 0) ? gen_a : gen_b, 1});
  return Word(std::move(out));
}

Word DihedralNF::delta_word() const {
  std::vector<Letter> out;
  for (int i = 0; i < m; ++i) out.push_back({i % 2 == 0 ? gen_a : gen_b, 1});
  return Word(std::move(out));
}

Word DihedralNF::to_word() const {
  Word out;
  Word delta = delta_word();
  if (power >= 0) {
    for (long long i = 0; i < power; ++i) out = out * delta;
  } else {
    Word inv = delta.inverse();
    for (long long i = 0; i < -power; ++i) out = out * inv;
  }
  for (const auto& f : factors) out = out * factor_word(f);
  return out;
}

std::string DihedralNF::str() const {
  if (is_identity()) return "1";
  std::string out;
  if (power != 0) out = "D^" + std::to_string(power);
  for (const auto& f : factors) {
    if (!out.empty()) out += ' ';
    for (int i = 0; i < f.len; ++i)
      out += (i % 2 == 0) == (f.first == 0) ? gen_a : gen_b;
  }
  return out;
}

DihedralNF dihedral_nf(int m, const Word& w, const std::string& gen_a,
                       const std::string& gen_b) {
  if (m < 2) throw Error(ErrorKind::BadLabel, "dihedral label must be >= 2");
  NfState st{m, 0, {}};
  for (const auto& l : w) {
    int g;
    if (l.gen == gen_a) g = 0;
    else if (l.gen == gen_b) g = 1;
    else throw Error(ErrorKind::UnknownGenerator,
                     "letter " + l.gen + " outside the dihedral generators");
    if (l.sign > 0) st.push_positive(g);
    else st.push_negative(g);
  }
  DihedralNF out;
  out.m = m;
  out.gen_a = gen_a;
  out.gen_b = gen_b;
  out.power = st.power;
  out.factors = std::move(st.factors);
  return out;
}

bool dihedral_equal(int m, const Word& a, const Word& b, const std::string& gen_a,
                    const std::string& gen_b) {
  return dihedral_nf(m, a, gen_a, gen_b) == dihedral_nf(m, b, gen_a, gen_b);
}

}  // namespace artin

#include "artin/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "artin/dihedral.hpp"

namespace artin {

namespace {

// F_2 letters: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1 (lexicographic order)
using FWord = std::vector<int>;

int letter_inverse(int l) { return l ^ 1; }

FWord freely_reduce(const FWord& w) {
  FWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == letter_inverse(l)) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word to_word(const FWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (int l : w)
    out.push_back({l < 2 ? std::string("a") : std::string("b"), l % 2 == 0 ? 1 : -1});
  return Word(std::move(out));
}

FWord from_word(const Word& w, const std::string& a, const std::string& b) {
  FWord out;
  for (const auto& l : w) {
    int base;
    if (l.gen == a) base = 0;
    else if (l.gen == b) base = 2;
    else throw Error(ErrorKind::UnknownGenerator,
                     "letter " + l.gen + " outside {" + a + "," + b + "}");
    out.push_back(base + (l.sign > 0 ? 0 : 1));
  }
  return out;
}

template <typename F>
bool enum_rec(FWord& cur, int len, F& visit) {
  if (static_cast<int>(cur.size()) == len) return visit(cur);
  for (int l = 0; l < 4; ++l) {
    if (!cur.empty() && cur.back() == letter_inverse(l)) continue;
    cur.push_back(l);
    bool keep = enum_rec(cur, len, visit);
    cur.pop_back();
    if (!keep) return false;
  }
  return true;
}

// freely reduced words by length, lexicographic within a length
template <typename F>
void enumerate_reduced(int max_len, F&& visit) {
  FWord cur;
  for (int len = 0; len <= max_len; ++len)
    if (!enum_rec(cur, len, visit)) return;
}

// the alternating product of `count` factors in {x, single letter}, ending
// with the x slot when x_last is set
FWord splice_alternating(const FWord& x, int letter, int count, bool x_last) {
  FWord out;
  for (int i = 0; i < count; ++i) {
    bool is_x = ((count - 1 - i) % 2 == 0) == x_last;
    if (is_x) out.insert(out.end(), x.begin(), x.end());
    else out.push_back(letter);
  }
  return freely_reduce(out);
}

SearchOutcome f2_search(int r, std::optional<int> s, int max_len) {
  SearchOutcome out;
  out.bound = max_len;
  enumerate_reduced(max_len, [&](const FWord& x) {
    ++out.searched_count;
    if (splice_alternating(x, 0, r, true) != splice_alternating(x, 0, r, false))
      return true;
    if (s && splice_alternating(x, 2, *s, true) != splice_alternating(x, 2, *s, false))
      return true;
    out.found = to_word(x);
    return false;
  });
  return out;
}

}  // namespace

SearchOutcome f2_system_search(int r, int s, int max_len) {
  if (r < 1 || r % 2 == 0)
    throw Error(ErrorKind::BadArgument, "r must be odd and positive");
  if (s < 2 || s % 2 == 1)
    throw Error(ErrorKind::BadArgument, "s must be even and positive");
  return f2_search(r, s, max_len);
}

SearchOutcome f2_single_search(int r, int max_len) {
  if (r < 1) throw Error(ErrorKind::BadArgument, "r must be positive");
  return f2_search(r, std::nullopt, max_len);
}

namespace {

// packed code: length in the top byte, letters at 2 bits each
std::uint64_t encode(const FWord& w) {
  std::uint64_t code = static_cast<std::uint64_t>(w.size()) << 56;
  for (size_t i = 0; i < w.size(); ++i)
    code |= static_cast<std::uint64_t>(w[i]) << (2 * i);
  return code;
}

FWord decode(std::uint64_t code) {
  size_t len = code >> 56;
  FWord out(len);
  for (size_t i = 0; i < len; ++i) out[i] = (code >> (2 * i)) & 3;
  return out;
}

struct RewriteRule {
  FWord from, to;
};

// all one-relator rewrites u -> v where u is a nonempty prefix of a cyclic
// rotation of the defining relator or of its inverse
std::vector<RewriteRule> relator_rules(int m) {
  FWord relator;
  for (int i = 0; i < m; ++i) relator.push_back(i % 2 == 0 ? 0 : 2);  // m(a,b)
  for (int i = m - 1; i >= 0; --i)
    relator.push_back(letter_inverse(i % 2 == 0 ? 2 : 0));  // m(b,a)^-1
  std::set<std::pair<FWord, FWord>> dedup;
  std::vector<RewriteRule> rules;
  for (int dir = 0; dir < 2; ++dir) {
    FWord r = relator;
    if (dir == 1) {
      std::reverse(r.begin(), r.end());
      for (int& l : r) l = letter_inverse(l);
    }
    for (size_t rot = 0; rot < r.size(); ++rot) {
      FWord rr(r.begin() + rot, r.end());
      rr.insert(rr.end(), r.begin(), r.begin() + rot);
      for (size_t k = 1; k < rr.size(); ++k) {
        FWord u(rr.begin(), rr.begin() + k);
        FWord v(rr.begin() + k, rr.end());
        std::reverse(v.begin(), v.end());
        for (int& l : v) l = letter_inverse(l);
        if (dedup.insert({u, v}).second) rules.push_back({std::move(u), std::move(v)});
      }
    }
  }
  return rules;
}

}  // namespace

std::uint64_t DihedralBall::find_root(std::uint64_t code) const {
  std::uint64_t root = code;
  while (parent_.at(root) != root) root = parent_.at(root);
  while (parent_.at(code) != code) {
    std::uint64_t next = parent_.at(code);
    parent_[code] = root;
    code = next;
  }
  return root;
}

DihedralBall::DihedralBall(int m, int radius) : m_(m), radius_(radius) {
  if (m < 2) throw Error(ErrorKind::BadLabel, "dihedral label must be >= 2");
  if (radius < 0 || radius > 7)
    throw Error(ErrorKind::TooLarge, "ball radius is capped at 7");
  const int cap = radius + 2 * m;
  if (cap > 28) throw Error(ErrorKind::TooLarge, "ball closure cap exceeds 28 letters");

  auto rules = relator_rules(m);
  std::deque<std::uint64_t> queue;
  std::vector<std::uint64_t> seeds;

  auto add = [&](const FWord& w) -> std::uint64_t {
    std::uint64_t code = encode(w);
    if (parent_.emplace(code, code).second) queue.push_back(code);
    return code;
  };
  auto unite = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t rx = find_root(x), ry = find_root(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
  };

  enumerate_reduced(radius, [&](const FWord& w) {
    seeds.push_back(add(w));
    return true;
  });

  while (!queue.empty()) {
    std::uint64_t code = queue.front();
    queue.pop_front();
    FWord w = decode(code);
    for (const auto& rule : rules) {
      if (rule.from.size() > w.size()) continue;
      for (size_t pos = 0; pos + rule.from.size() <= w.size(); ++pos) {
        if (!std::equal(rule.from.begin(), rule.from.end(), w.begin() + pos)) continue;
        FWord nw;
        nw.reserve(w.size() - rule.from.size() + rule.to.size());
        nw.insert(nw.end(), w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rule.to.begin(), rule.to.end());
        nw.insert(nw.end(), w.begin() + pos + rule.from.size(), w.end());
        nw = freely_reduce(nw);
        if (static_cast<int>(nw.size()) > cap) continue;
        unite(code, add(nw));
      }
    }
  }

  // group the seed words by representative
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_root;
  for (std::uint64_t s : seeds) by_root[find_root(s)].push_back(s);
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    std::vector<Word> cls;
    cls.reserve(members.size());
    for (std::uint64_t c : members) cls.push_back(to_word(decode(c)));
    classes_.push_back(std::move(cls));
  }
}

bool DihedralBall::same_class(const Word& w1, const Word& w2) const {
  FWord a = freely_reduce(from_word(w1, "a", "b"));
  FWord b = freely_reduce(from_word(w2, "a", "b"));
  auto it1 = parent_.find(encode(a));
  auto it2 = parent_.find(encode(b));
  if (it1 == parent_.end() || it2 == parent_.end())
    throw Error(ErrorKind::TooLarge, "word outside the computed ball");
  return find_root(it1->first) == find_root(it2->first);
}

namespace {

Word word_from_ascii(const char* s) {
  Word w;
  for (const char* c = s; *c; ++c) w.push(Letter{std::string(1, *c), 1});
  return w;
}

// normal forms of I2(4): Delta power and boundary-matched simple sequences,
// enumerated by canonical length, then factors, then |power|
template <typename F>
void enumerate_i24(int bound, bool skip_empty, F&& visit) {
  static const std::vector<Word> simples = {
      word_from_ascii("a"),  word_from_ascii("ab"), word_from_ascii("aba"),
      word_from_ascii("b"),  word_from_ascii("ba"), word_from_ascii("bab")};
  const Word delta = word_from_ascii("abab");

  std::vector<long long> powers{0};
  for (int p = 1; p <= bound; ++p) {
    powers.push_back(-p);
    powers.push_back(p);
  }

  std::vector<std::vector<Word>> sequences{{}};
  std::vector<std::vector<Word>> frontier{{}};
  for (int r = 0; r < bound; ++r) {
    std::vector<std::vector<Word>> next;
    for (const auto& seq : frontier)
      for (const auto& s : simples)
        if (seq.empty() ||
            seq.back()[seq.back().size() - 1].gen == s[0].gen) {
          auto ext = seq;
          ext.push_back(s);
          next.push_back(std::move(ext));
        }
    sequences.insert(sequences.end(), next.begin(), next.end());
    frontier.assign(sequences.end() - next.size(), sequences.end());
  }

  for (const auto& seq : sequences) {
    if (skip_empty && seq.empty()) continue;
    for (long long p : powers) {
      Word x;
      Word dpart = p >= 0 ? delta : delta.inverse();
      for (long long i = 0; i < (p >= 0 ? p : -p); ++i) x = x * dpart;
      for (const auto& s : seq) x = x * s;
      if (!visit(x)) return;
    }
  }
}

long long b_exponent(const Word& w) {
  long long e = 0;
  for (const auto& l : w)
    if (l.gen == "b") e += l.sign;
  return e;
}

}  // namespace

Triangle234Outcome triangle_234_search(int bound) {
  if (bound < 0 || bound > 6)
    throw Error(ErrorKind::TooLarge, "canonical length bound is capped at 6");
  Triangle234Outcome out;
  out.outcome.bound = bound;
  out.parity_ok = true;
  const Word a = Word::generator("a");
  const Word b = Word::generator("b");
  enumerate_i24(bound, false, [&](const Word& x) {
    ++out.outcome.searched_count;
    if (!dihedral_equal(4, a * x, x * a)) return true;
    ++out.commuting_count;
    if (b_exponent(x) % 2 != 0) out.parity_ok = false;
    if (!out.outcome.found && dihedral_equal(4, b * x * b, x * b * x))
      out.outcome.found = x;
    return true;
  });
  return out;
}

SearchOutcome triangle_234_commuting_search(int bound) {
  if (bound < 0 || bound > 6)
    throw Error(ErrorKind::TooLarge, "canonical length bound is capped at 6");
  SearchOutcome out;
  out.bound = bound;
  const Word a = Word::generator("a");
  enumerate_i24(bound, true, [&](const Word& x) {
    ++out.searched_count;
    if (dihedral_equal(4, a * x, x * a)) {
      out.found = x;
      return false;
    }
    return true;
  });
  return out;
}

Abelianization abelianization_classes(const LabeledGraph& g) {
  Abelianization out;
  auto classes = g.odd_classes();
  out.rank = static_cast<int>(classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    for (const auto& v : classes[i]) out.class_of[v] = static_cast<int>(i);
  return out;
}

}  // namespace artin

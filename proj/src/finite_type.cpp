#include "artin/finite_type.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace artin {

std::string CoxeterType::str() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(parameter);
    case Family::B: return "B" + std::to_string(parameter);
    case Family::D: return "D" + std::to_string(parameter);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(parameter) + ")";
    case Family::Z: return "Z";
    case Family::NonSpherical: return "non-spherical";
  }
  return "?";
}

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void set_frac(long long& n, long long& d, long long num, long long den) {
  if (den < 0) { num = -num; den = -den; }
  long long g = gcd_ll(num, den);
  if (g == 0) g = 1;
  n = num / g;
  d = den / g;
}

}  // namespace

bool QuadRat::operator==(const QuadRat& o) const {
  return an == o.an && ad == o.ad && bn == o.bn && bd == o.bd && cn == o.cn &&
         cd == o.cd && dn == o.dn && dd == o.dd;
}

long double QuadRat::value() const {
  constexpr long double s2 = 1.41421356237309504880L;
  constexpr long double s3 = 1.73205080756887729353L;
  return (long double)an / ad + (long double)bn / bd * s2 +
         (long double)cn / cd * s3 + (long double)dn / dd * s2 * s3;
}

std::vector<std::vector<CosineEntry>> cosine_matrix(const LabeledGraph& g) {
  const int n = g.size();
  std::vector<std::vector<CosineEntry>> b(n, std::vector<CosineEntry>(n));
  const long double pi = 3.14159265358979323846L;
  for (int i = 0; i < n; ++i) {
    b[i][i].exact = true;
    set_frac(b[i][i].q.an, b[i][i].q.ad, 1, 1);
    b[i][i].value = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = g.label_at(i, j);
      CosineEntry e;
      if (l.is_infinite()) {
        e.exact = true;
        set_frac(e.q.an, e.q.ad, -1, 1);
        e.value = -1;
      } else {
        switch (l.value()) {
          case 2: e.exact = true; e.value = 0; break;
          case 3:
            e.exact = true;
            set_frac(e.q.an, e.q.ad, -1, 2);
            break;
          case 4:
            e.exact = true;
            set_frac(e.q.bn, e.q.bd, -1, 2);
            break;
          case 6:
            e.exact = true;
            set_frac(e.q.cn, e.q.cd, -1, 2);
            break;
          default:
            e.exact = false;
            e.value = -std::cos(pi / l.value());
        }
        if (e.exact) e.value = e.q.value();
      }
      b[i][j] = b[j][i] = e;
    }
  return b;
}

namespace {

// Integers of the form a + b*sqrt2 + c*sqrt3 + d*sqrt6; ring arithmetic with
// overflow detection so the caller can fall back to floating point.
struct QuadInt {
  long long a = 0, b = 0, c = 0, d = 0;
};

struct QuadOverflow {};

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw QuadOverflow{};
  return r;
}
long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw QuadOverflow{};
  return r;
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  return {checked_add(x.a, -y.a), checked_add(x.b, -y.b), checked_add(x.c, -y.c),
          checked_add(x.d, -y.d)};
}
QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  // (1, s2, s3, s6) multiplication table
  long long a = checked_add(
      checked_add(checked_mul(x.a, y.a), checked_mul(2, checked_mul(x.b, y.b))),
      checked_add(checked_mul(3, checked_mul(x.c, y.c)),
                  checked_mul(6, checked_mul(x.d, y.d))));
  long long b = checked_add(
      checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)),
      checked_mul(3, checked_add(checked_mul(x.c, y.d), checked_mul(x.d, y.c))));
  long long c = checked_add(
      checked_add(checked_mul(x.a, y.c), checked_mul(x.c, y.a)),
      checked_mul(2, checked_add(checked_mul(x.b, y.d), checked_mul(x.d, y.b))));
  long long d = checked_add(
      checked_add(checked_mul(x.a, y.d), checked_mul(x.d, y.a)),
      checked_add(checked_mul(x.b, y.c), checked_mul(x.c, y.b)));
  return {a, b, c, d};
}

bool is_zero(const QuadInt& x) { return x.a == 0 && x.b == 0 && x.c == 0 && x.d == 0; }

// sign of u + v*sqrt2, exactly
int sign_q2(long long u, long long v) {
  if (u == 0 && v == 0) return 0;
  if (u >= 0 && v >= 0) return 1;
  if (u <= 0 && v <= 0) return -1;
  // opposite signs: compare u^2 with 2 v^2
  __int128 uu = (__int128)u * u;
  __int128 vv = (__int128)v * v * 2;
  if (uu == vv) return 0;
  return (uu > vv) == (u > 0) ? 1 : -1;
}

// Exact sign of a + b*sqrt2 + c*sqrt3 + d*sqrt6. Zero is decided by basis
// independence; away from zero a float estimate suffices, and the remaining
// near-zero band is resolved exactly via x = (a + b*sqrt2) + (c + d*sqrt2)*sqrt3
// when the coefficients are small enough for 128-bit squaring.
int sign_of(const QuadInt& x) {
  if (is_zero(x)) return 0;
  long double val = (long double)x.a + 1.41421356237309504880L * x.b +
                    1.73205080756887729353L * x.c + 2.44948974278317809820L * x.d;
  long double scale = std::abs((long double)x.a) + 1.5L * std::abs((long double)x.b) +
                      1.8L * std::abs((long double)x.c) + 2.5L * std::abs((long double)x.d);
  if (std::abs(val) > 1e-12L * scale) return val > 0 ? 1 : -1;

  const long long lim = 1ll << 30;
  if (std::abs(x.a) >= lim || std::abs(x.b) >= lim || std::abs(x.c) >= lim ||
      std::abs(x.d) >= lim)
    throw QuadOverflow{};
  int sq = sign_q2(x.c, x.d);
  if (sq == 0) return sign_q2(x.a, x.b);
  int sp = sign_q2(x.a, x.b);
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // compare (a + b*sqrt2)^2 with 3 (c + d*sqrt2)^2 in Z[sqrt2]
  __int128 du = (__int128)x.a * x.a + 2 * (__int128)x.b * x.b -
                3 * ((__int128)x.c * x.c + 2 * (__int128)x.d * x.d);
  __int128 dv = 2 * (__int128)x.a * x.b - 6 * (__int128)x.c * x.d;
  int s;
  if (du == 0 && dv == 0) s = 0;
  else if (du >= 0 && dv >= 0) s = 1;
  else if (du <= 0 && dv <= 0) s = -1;
  else {
    __int128 l = du > 0 ? du : -du;
    __int128 r = dv > 0 ? dv : -dv;
    if (l * l == 2 * r * r) s = 0;
    else s = ((l * l > 2 * r * r) == (du > 0)) ? 1 : -1;
  }
  return s == 0 ? 0 : (s == sp ? sp : sq);
}

// exact division by a previous Bareiss pivot; solves q * y = x coefficientwise
QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
  // multiply by the three conjugates of y, then divide by the integer norm
  QuadInt y2{y.a, -y.b, y.c, -y.d};
  QuadInt y3{y.a, y.b, -y.c, -y.d};
  QuadInt y4{y.a, -y.b, -y.c, y.d};
  QuadInt num = x * y2 * y3 * y4;
  QuadInt norm = y * y2 * y3 * y4;
  if (norm.b != 0 || norm.c != 0 || norm.d != 0 || norm.a == 0) throw QuadOverflow{};
  long long nv = norm.a;
  if (num.a % nv || num.b % nv || num.c % nv || num.d % nv) throw QuadOverflow{};
  return {num.a / nv, num.b / nv, num.c / nv, num.d / nv};
}

// 2 * B entries are quad integers for labels in {2,3,4,6,inf}
bool exact_cosine2(const LabeledGraph& g, int i, int j, QuadInt& out) {
  if (i == j) { out = {2, 0, 0, 0}; return true; }
  Label l = g.label_at(i, j);
  if (l.is_infinite()) { out = {-2, 0, 0, 0}; return true; }
  switch (l.value()) {
    case 2: out = {0, 0, 0, 0}; return true;
    case 3: out = {-1, 0, 0, 0}; return true;
    case 4: out = {0, -1, 0, 0}; return true;
    case 6: out = {0, 0, -1, 0}; return true;
    default: return false;
  }
}

detail::Definiteness numeric_positive_definite(const LabeledGraph& g) {
  const int n = g.size();
  auto b = cosine_matrix(g);
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = b[i][j].value;
  const long double tol = 1e-12L;
  for (int k = 0; k < n; ++k) {
    long double piv = a[k][k];
    if (piv < -tol) return detail::Definiteness::NotPositive;
    if (piv <= tol) return detail::Definiteness::Inconclusive;
    for (int i = k + 1; i < n; ++i) {
      long double f = a[i][k] / piv;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return detail::Definiteness::Positive;
}

}  // namespace

namespace detail {

Definiteness cosine_positive_definite(const LabeledGraph& g) {
  const int n = g.size();
  if (n == 0) return Definiteness::Positive;
  std::vector<std::vector<QuadInt>> m(n, std::vector<QuadInt>(n));
  bool exact = true;
  for (int i = 0; i < n && exact; ++i)
    for (int j = 0; j < n && exact; ++j)
      exact = exact_cosine2(g, i, j, m[i][j]);
  if (!exact) return numeric_positive_definite(g);

  // Bareiss elimination on 2B: pivots are exactly the leading minors
  try {
    QuadInt prev{1, 0, 0, 0};
    for (int k = 0; k < n; ++k) {
      if (sign_of(m[k][k]) <= 0) return Definiteness::NotPositive;
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      prev = m[k][k];
    }
    return Definiteness::Positive;
  } catch (const QuadOverflow&) {
    return numeric_positive_definite(g);
  }
}

std::vector<std::uint64_t> maximal_finite_cliques(const LabeledGraph& g) {
  const int n = g.size();
  if (n > 24)
    throw Error(ErrorKind::TooLarge, "clique enumeration is capped at 24 vertices");
  std::vector<std::uint64_t> out;
  // Bron-Kerbosch with pivoting on the finite-label view
  struct Frame { std::uint64_t r, p, x; };
  std::vector<Frame> stack{{0, n ? (n == 64 ? ~0ull : (1ull << n) - 1) : 0, 0}};
  while (!stack.empty()) {
    auto [r, p, x] = stack.back();
    stack.pop_back();
    if (!p && !x) {
      out.push_back(r);
      continue;
    }
    if (!p) continue;
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (int v = 0; v < n; ++v)
      if (px >> v & 1) {
        int deg = std::popcount(p & g.finite_adjacency(v));
        if (deg > best) { best = deg; pivot = v; }
      }
    std::uint64_t cand = p & ~g.finite_adjacency(pivot);
    for (int v = 0; v < n; ++v)
      if (cand >> v & 1) {
        std::uint64_t nv = g.finite_adjacency(v);
        stack.push_back({r | (1ull << v), p & nv, x & nv});
        p &= ~(1ull << v);
        x |= 1ull << v;
      }
  }
  return out;
}

}  // namespace detail

namespace {

// classification of the connected (non-2-edge view) finite Coxeter diagrams
CoxeterType classify_connected(const LabeledGraph& g) {
  const CoxeterType non{CoxeterType::Family::NonSpherical, 0};
  const int n = g.size();
  if (n == 0) return non;
  if (n == 1) return {CoxeterType::Family::Z, 0};

  std::vector<std::vector<int>> adj(n);
  std::vector<int> labels;  // labels of the non-2 edges
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = g.label_at(i, j);
      if (l.is_infinite()) return non;
      if (l.value() != 2) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        labels.push_back(l.value());
        ++edge_count;
      }
    }
  if (edge_count != n - 1) return non;  // every finite diagram is a tree

  if (n == 2) {
    int m = labels[0];
    if (m == 3) return {CoxeterType::Family::A, 2};
    if (m == 4) return {CoxeterType::Family::B, 2};
    return {CoxeterType::Family::I2, m};
  }

  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return non;
    if (adj[v].size() == 3) {
      if (branch != -1) return non;
      branch = v;
    }
  }

  if (branch == -1) {
    // a path: read the label sequence from one endpoint
    int end = -1;
    for (int v = 0; v < n; ++v)
      if (adj[v].size() == 1) { end = v; break; }
    std::vector<int> seq;
    int prev = -1, cur = end;
    while (true) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next == -1) break;
      seq.push_back(g.label_at(cur, next).value());
      prev = cur;
      cur = next;
    }
    auto rev = seq;
    std::reverse(rev.begin(), rev.end());
    if (rev < seq) seq = rev;
    // seq is the direction-canonical label list of a path on n vertices
    bool all3 = std::all_of(seq.begin(), seq.end(), [](int m) { return m == 3; });
    if (all3) return {CoxeterType::Family::A, n};
    if (seq.back() == 4 && std::all_of(seq.begin(), seq.end() - 1,
                                       [](int m) { return m == 3; }))
      return {CoxeterType::Family::B, n};
    if (n == 3 && seq == std::vector<int>{3, 5}) return {CoxeterType::Family::H3, 0};
    if (n == 4 && seq == std::vector<int>{3, 3, 5}) return {CoxeterType::Family::H4, 0};
    if (n == 4 && seq == std::vector<int>{3, 4, 3}) return {CoxeterType::Family::F4, 0};
    return non;
  }

  // one branch vertex: D or E shape, all labels 3
  if (!std::all_of(labels.begin(), labels.end(), [](int m) { return m == 3; }))
    return non;
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {CoxeterType::Family::D, n};
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return {CoxeterType::Family::E6, 0};
    if (arms[2] == 3) return {CoxeterType::Family::E7, 0};
    if (arms[2] == 4) return {CoxeterType::Family::E8, 0};
  }
  return non;
}

}  // namespace

CoxeterType classify_irreducible(const LabeledGraph& g) {
  if (g.irreducible_components().size() != 1)
    throw Error(ErrorKind::NotIrreducible,
                "graph has more than one irreducible component");
  return classify_connected(g);
}

bool is_spherical(const LabeledGraph& g) {
  bool by_classification = true;
  for (const auto& comp : g.irreducible_components())
    if (!classify_connected(g.induced(comp)).spherical()) {
      by_classification = false;
      break;
    }
  auto def = detail::cosine_positive_definite(g);
  if (def != detail::Definiteness::Inconclusive &&
      (def == detail::Definiteness::Positive) != by_classification)
    throw Error(ErrorKind::BadArgument,
                "internal: classification and definiteness disagree");
  return by_classification;
}

bool is_fc_type(const LabeledGraph& g) {
  for (std::uint64_t clique : detail::maximal_finite_cliques(g))
    if (!is_spherical(g.induced(g.subset_from_mask(clique)))) return false;
  return true;
}

}  // namespace artin

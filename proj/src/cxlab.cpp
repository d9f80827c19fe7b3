#include "smul/cxlab.hpp"

#include <algorithm>
#include <random>

namespace smul::cxlab {

namespace {

constexpr int kMaxIndexBound = 62;

Coeff add_checked(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient sum exceeds 64 bits");
  return r;
}

Coeff mul_checked(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient product exceeds 64 bits");
  return r;
}

void check_bound(int bound) {
  if (bound < 1 || bound > kMaxIndexBound)
    throw Error(ErrorKind::InvalidArgument, "index bound must lie in 1..62");
}

/// Sorted, merged, validated copy.
Monomial canonical(Monomial m, int bound) {
  std::sort(m.begin(), m.end());
  Monomial out;
  for (auto [i, e] : m) {
    if (i < 1 || i > bound)
      throw Error(ErrorKind::IndexOutOfBound, "X" + std::to_string(i) + " outside X1..X" + std::to_string(bound));
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (e == 0) continue;
    if (!out.empty() && out.back().first == i)
      out.back().second += e;
    else
      out.emplace_back(i, e);
  }
  return out;
}

int two_adic(Coeff c) {
  int v = 0;
  while (c % 2 == 0) {
    c /= 2;
    ++v;
  }
  return v;
}

/// A nonzero normal form with indices <= max_index and coefficients small
/// enough that every term escapes 2^m R for some m <= max_index.
QPolyNF random_poly(std::mt19937_64& rng, int max_index, int bound) {
  std::uniform_int_distribution<int> nterms(1, 3), idx(1, max_index), exp(1, 2), nvars(0, 2);
  Terms raw;
  const Coeff cmax = Coeff{1} << (max_index - 1);
  std::uniform_int_distribution<Coeff> coeff(-cmax, cmax);
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    for (int v = nvars(rng); v > 0; --v) m.emplace_back(idx(rng), exp(rng));
    raw[canonical(m, bound)] += coeff(rng);
  }
  auto f = QPolyNF::normalize(raw, bound);
  if (f.is_zero()) f = QPolyNF::constant(1, bound);
  return f;
}

}  // namespace

int min_index(const Monomial& m) {
  if (m.empty()) throw Error(ErrorKind::InvalidArgument, "constant monomial has no index");
  return m.front().first;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string format(const Monomial& m) {
  std::string out;
  for (auto [i, e] : m) {
    if (!out.empty()) out += "*";
    out += "X" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

QPolyNF QPolyNF::constant(Coeff c, int index_bound) { return term(c, {}, index_bound); }

QPolyNF QPolyNF::variable(int i, int index_bound) { return term(1, {{i, 1}}, index_bound); }

QPolyNF QPolyNF::term(Coeff c, Monomial m, int index_bound) {
  Terms raw;
  raw[canonical(std::move(m), index_bound)] = c;
  return normalize(raw, index_bound);
}

QPolyNF QPolyNF::normalize(const Terms& raw, int index_bound) {
  check_bound(index_bound);
  Terms merged;
  for (const auto& [m, c] : raw) {
    auto key = canonical(m, index_bound);
    merged[key] = add_checked(merged[key], c);
  }
  QPolyNF out;
  out.bound_ = index_bound;
  for (const auto& [m, c] : merged) {
    Coeff r = c;
    if (!m.empty()) {
      const Coeff mod = Coeff{1} << min_index(m);
      r = ((c % mod) + mod) % mod;
    }
    if (r != 0) out.terms_[m] = r;
  }
  return out;
}

Coeff QPolyNF::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

std::string QPolyNF::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string piece;
    if (m.empty())
      piece = std::to_string(c);
    else if (c == 1)
      piece = cxlab::format(m);
    else
      piece = std::to_string(c) + "*" + cxlab::format(m);
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

QPolyNF normalize(const QPolyNF& p) { return QPolyNF::normalize(p.terms(), p.index_bound()); }

QPolyNF add(const QPolyNF& a, const QPolyNF& b) {
  Terms raw = a.terms();
  for (const auto& [m, c] : b.terms()) raw[m] = add_checked(raw[m], c);
  return QPolyNF::normalize(raw, std::max(a.index_bound(), b.index_bound()));
}

QPolyNF sub(const QPolyNF& a, const QPolyNF& b) {
  Terms raw = a.terms();
  for (const auto& [m, c] : b.terms()) raw[m] = add_checked(raw[m], mul_checked(c, -1));
  return QPolyNF::normalize(raw, std::max(a.index_bound(), b.index_bound()));
}

QPolyNF mul(const QPolyNF& a, const QPolyNF& b) {
  Terms raw;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto m = monomial_product(ma, mb);
      raw[m] = add_checked(raw[m], mul_checked(ca, cb));
    }
  return QPolyNF::normalize(raw, std::max(a.index_bound(), b.index_bound()));
}

QPolyNF pow2(int k, int index_bound) {
  if (k < 0 || k > 62) throw Error(ErrorKind::Overflow, "2^k needs 0 <= k <= 62");
  return QPolyNF::constant(Coeff{1} << k, index_bound);
}

bool in_q(const Terms& raw) {
  Terms merged;
  for (const auto& [m, c] : raw) {
    auto key = canonical(m, kMaxIndexBound);
    merged[key] = add_checked(merged[key], c);
  }
  for (const auto& [m, c] : merged) {
    if (m.empty()) {
      if (c != 0) return false;
    } else if (c % (Coeff{1} << min_index(m)) != 0) {
      return false;
    }
  }
  return true;
}

bool member_pow2_principal(const QPolyNF& f, int m) {
  if (m < 0 || m > f.index_bound())
    throw Error(ErrorKind::IndexOutOfBound, "exponent " + std::to_string(m) + " outside 0.." +
                                                std::to_string(f.index_bound()));
  for (const auto& [mono, c] : f.terms()) {
    const int e = mono.empty() ? m : std::min(m, min_index(mono));
    if (c % (Coeff{1} << e) != 0) return false;
  }
  return true;
}

int escape_exponent(const QPolyNF& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "0 lies in every 2^m R");
  int best = 64;
  for (const auto& [mono, c] : f.terms()) best = std::min(best, two_adic(c) + 1);
  return best;
}

Certificate replay_counterexample1(int index_bound) {
  check_bound(index_bound);
  const int n_max = index_bound - 2;
  Certificate cert;
  cert.claim_id = "ex.counterexample1";
  cert.instance = "qpoly " + std::to_string(index_bound) + " | <2> | 0";
  for (int n = 1; n <= n_max; ++n) {
    const QPolyNF s = pow2(n, index_bound);
    const QPolyNF a = pow2(n + 2, index_bound);
    const QPolyNF b = QPolyNF::variable(n + 2, index_bound);
    const std::string tag = " (n = " + std::to_string(n) + ")";
    const QPolyNF ab = mul(a, b), sa = mul(s, a), sb = mul(s, b);
    Json w;
    w["a"] = a.format();
    w["b"] = b.format();
    w["ab"] = ab.format();
    cert.add("2^(n+2) X_(n+2) = 0" + tag, ab.is_zero(), std::move(w));
    Json w2;
    w2["s"] = s.format();
    w2["sa"] = sa.format();
    cert.add("2^n 2^(n+2) = 2^(2n+2) != 0" + tag, !sa.is_zero() && sa == pow2(2 * n + 2, index_bound), std::move(w2));
    Json w3;
    w3["s"] = s.format();
    w3["sb"] = sb.format();
    cert.add("2^n X_(n+2) != 0" + tag, !sb.is_zero() && sb == QPolyNF::term(Coeff{1} << n, {{n + 2, 1}}, index_bound),
             std::move(w3));
  }
  cert.note("a witness s makes every multiple of s a witness, so ruling out 2^n for n >= 1 also rules out 1");
  cert.note("for every n: 2^(n+2) X_(n+2) is a generator of Q, 2^n < 2^(n+2) keeps 2^n X_(n+2) outside Q, and constants are never reduced");
  return cert;
}

Certificate replay_counterexample3(int index_bound) {
  check_bound(index_bound);
  Certificate cert;
  cert.claim_id = "ex.counterexample3";
  cert.instance = "qpoly " + std::to_string(index_bound) + " | <2>";

  bool strict = true;
  Json w1 = Json::array();
  for (int k = 0; k < index_bound; ++k) {
    const bool inside = member_pow2_principal(pow2(k, index_bound), k + 1);
    if (inside) strict = false;
    w1.push_back({{"k", k}, {"2^k in 2^(k+1)R", inside}});
  }
  cert.add("2^k lies outside 2^(k+1)R: S is not strongly multiplicative", strict, std::move(w1));

  // Each nonzero f escapes some 2^m R: the intersection is 0.
  std::mt19937_64 rng(20241019);
  bool escapes = true;
  Json w2 = Json::array();
  const int max_index = std::min(index_bound, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const QPolyNF f = random_poly(rng, max_index, index_bound);
    const int m = escape_exponent(f);
    if (m > index_bound || member_pow2_principal(f, m)) escapes = false;
    if (trial < 5) w2.push_back({{"f", f.format()}, {"outside", "2^" + std::to_string(m) + "R"}});
  }
  cert.add("every sampled nonzero f escapes some 2^m R", escapes, std::move(w2));

  const bool zero_not_s_prime = replay_counterexample1(index_bound).passed();
  cert.add("0 is not S-prime", zero_not_s_prime);

  Json w4;
  w4["argument"] = "an S-minimal P equals 2^n P for all n, so P lies in the intersection of 2^n R, which is 0";
  cert.add("no S-minimal prime exists", strict && escapes && zero_not_s_prime, std::move(w4));
  cert.note("a nonzero term c M escapes 2^m R once m exceeds the 2-adic valuation of c, which is below the smallest index of M");
  return cert;
}

Certificate replay_colon(int index_bound) {
  check_bound(index_bound);
  Certificate cert;
  cert.claim_id = "ex.colon";
  cert.instance = "qpoly " + std::to_string(index_bound) + " | <2> | (0 : (X1, X2, ...))";

  // (0 : J) = 0: each sampled nonzero f has f X_j != 0 for some generator.
  std::mt19937_64 rng(7);
  bool annihilator_zero = true;
  Json w1 = Json::array();
  const int max_index = std::max(1, index_bound / 2);
  for (int trial = 0; trial < 200; ++trial) {
    const QPolyNF f = random_poly(rng, max_index, index_bound);
    int found = 0;
    for (int j = 1; j <= index_bound && !found; ++j)
      if (!mul(f, QPolyNF::variable(j, index_bound)).is_zero()) found = j;
    if (!found) annihilator_zero = false;
    if (trial < 5) w1.push_back({{"f", f.format()}, {"j", found}});
  }
  cert.add("(I : J) = 0 on sampled elements", annihilator_zero, std::move(w1));

  bool killed = true;
  Json w2 = Json::array();
  for (int n = 1; n <= index_bound; ++n) {
    const QPolyNF p = mul(pow2(n, index_bound), QPolyNF::variable(n, index_bound));
    if (!p.is_zero()) killed = false;
    w2.push_back({{"generator", "X" + std::to_string(n)}, {"s", "2^" + std::to_string(n)}});
  }
  cert.add("2^n X_n = 0, so S^-1 J = 0", killed, std::move(w2));

  bool units_nonzero = true;
  for (int n = 0; n <= std::min(index_bound, 62); ++n)
    if (pow2(n, index_bound).is_zero()) units_nonzero = false;
  cert.add("no 2^n is 0, so S^-1 R is not the zero ring", units_nonzero);

  Json w4;
  w4["lhs"] = "S^-1(I:J) = 0";
  w4["rhs"] = "(S^-1 I : S^-1 J) = (0 : 0) = S^-1 R";
  cert.add("S^-1(I:J) != (S^-1 I : S^-1 J)", annihilator_zero && killed && units_nonzero, std::move(w4));
  cert.note("f X_j keeps every nonconstant term of f once j exceeds its indices, and keeps c X_j when 2^j does not divide c");
  return cert;
}

}  // namespace smul::cxlab

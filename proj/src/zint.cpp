#include "smul/zint.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

namespace smul::zint {

namespace {

using U128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<U128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime_number(static_cast<Int>(n))) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

Int abs_checked(Int a) {
  if (a == INT64_MIN) throw Error(ErrorKind::Overflow, "magnitude does not fit in 64 bits");
  return a < 0 ? -a : a;
}

std::vector<Int> monoid_elements_by_magnitude(const ZSet& s, Int bound, std::size_t count) {
  std::vector<Int> out;
  for (Int m = 1; m <= bound && out.size() < count; ++m) {
    if (contains(s, m))
      out.push_back(m);
    else if (contains(s, -m))
      out.push_back(-m);
  }
  return out;
}

/// A nonunit element of S, if any.
std::optional<Int> nonunit_element(const ZSet& s) {
  if (const auto* m = std::get_if<IntMonoid>(&s)) {
    for (Int g : m->generators)
      if (g != 1 && g != -1) return g;
    return std::nullopt;
  }
  if (const auto* c = std::get_if<PrimeComplement>(&s)) return c->p == 2 ? 3 : 2;
  return 2;
}

/// Dijkstra over divisibility patterns: valuations at the primes of n,
/// capped at the valuation in n. Returns, per reachable pattern, the element
/// of the monoid with the smallest magnitude realizing it.
std::map<std::vector<int>, Int> monoid_patterns(const IntMonoid& m, Int n) {
  const auto primes = prime_factors(n);
  std::vector<int> cap;
  for (Int q : primes) cap.push_back(valuation(n, q));
  auto pattern_of = [&](Int g) {
    std::vector<int> v(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) v[i] = valuation(g, primes[i]);
    return v;
  };
  struct Step {
    Int g;
    std::vector<int> v;
  };
  std::vector<Step> steps;
  for (Int g : m.generators) {
    if (g == 1 || g == -1) continue;
    auto v = pattern_of(g);
    if (std::any_of(v.begin(), v.end(), [](int x) { return x > 0; })) steps.push_back({g, std::move(v)});
  }
  using Item = std::pair<Int, std::vector<int>>;  // (magnitude, pattern)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::map<std::vector<int>, Int> best;  // signed element
  std::vector<int> start(primes.size(), 0);
  best[start] = 1;
  queue.push({1, start});
  std::map<std::vector<int>, bool> done;
  while (!queue.empty()) {
    auto [mag, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    const Int value = best[v];
    for (const auto& st : steps) {
      Int next_value;
      if (__builtin_mul_overflow(value, st.g, &next_value)) continue;
      std::vector<int> w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::min(cap[i], w[i] + st.v[i]);
      const Int next_mag = abs_checked(next_value);
      auto it = best.find(w);
      if (it == best.end() || abs_checked(it->second) > next_mag) {
        best[w] = next_value;
        queue.push({next_mag, w});
      }
    }
  }
  return best;
}

Json ideal_json(const PrincipalIdeal& i) { return i.format(); }

std::string family_format(const std::vector<PrincipalIdeal>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + family[i].format();
  return out + "}";
}

}  // namespace

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer product exceeds 64 bits");
  return r;
}

Int checked_pow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(abs_checked(a), abs_checked(b)); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(abs_checked(a) / gcd(a, b), abs_checked(b));
}

bool is_prime_number(Int n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t d = un - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, un);
      if (x == un - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "0 has no prime factorization");
  std::vector<std::uint64_t> raw;
  factor_into(static_cast<std::uint64_t>(abs_checked(n)), raw);
  std::vector<Int> out(raw.begin(), raw.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int valuation(Int n, Int p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of 0");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

PrincipalIdeal::PrincipalIdeal(Int value) : n(abs_checked(value)) {}

std::string PrincipalIdeal::format() const {
  if (n == 0) return "0";
  if (n == 1) return "Z";
  return std::to_string(n) + "Z";
}

PrincipalIdeal meet(PrincipalIdeal a, PrincipalIdeal b) { return PrincipalIdeal(lcm(a.n, b.n)); }
PrincipalIdeal join(PrincipalIdeal a, PrincipalIdeal b) { return PrincipalIdeal(gcd(a.n, b.n)); }

PrincipalIdeal colon(PrincipalIdeal a, PrincipalIdeal b) { return colon(a, b.n); }

PrincipalIdeal colon(PrincipalIdeal a, Int s) {
  if (a.n == 0) return PrincipalIdeal(s == 0 ? 1 : 0);
  return PrincipalIdeal(a.n / gcd(a.n, s));
}

ZSet checked_set(ZSet s) {
  if (auto* m = std::get_if<IntMonoid>(&s)) {
    for (Int g : m->generators) {
      if (g == 0) throw Error(ErrorKind::ContainsZero, "0 cannot generate a multiplicative set");
      if (abs_checked(g) > kMaxGenerator)
        throw Error(ErrorKind::TooLarge, "generator " + std::to_string(g) + " exceeds 10^6");
    }
  } else if (auto* c = std::get_if<PrimeComplement>(&s)) {
    if (c->p < 0) c->p = -c->p;
    if (!is_prime_number(c->p)) throw Error(ErrorKind::NotPrime, std::to_string(c->p) + " is not prime");
  }
  return s;
}

bool contains(const ZSet& s, Int m) {
  if (m == 0) return false;
  if (const auto* c = std::get_if<PrimeComplement>(&s)) return m % c->p != 0;
  if (std::holds_alternative<Nonzero>(s)) return true;
  const auto& mon = std::get<IntMonoid>(s);
  bool free_sign = mon.sign_closure;
  std::vector<Int> gens;
  for (Int g : mon.generators) {
    if (g == -1) free_sign = true;
    if (g != 1 && g != -1) gens.push_back(g);
  }
  // (remaining magnitude, parity of negative factors still required) -> reachable
  std::map<std::pair<Int, bool>, bool> memo;
  auto rec = [&](auto&& self, Int a, bool odd) -> bool {
    if (a == 1) return free_sign || !odd;
    auto key = std::make_pair(a, odd);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (Int g : gens) {
      const Int ag = g < 0 ? -g : g;
      if (a % ag == 0 && self(self, a / ag, odd != (g < 0))) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };
  return rec(rec, abs_checked(m), m < 0);
}

std::string format(const ZSet& s) {
  if (const auto* c = std::get_if<PrimeComplement>(&s)) return "complement (" + std::to_string(c->p) + ")";
  if (std::holds_alternative<Nonzero>(s)) return "reg";
  const auto& m = std::get<IntMonoid>(s);
  std::vector<Int> gens;
  if (m.sign_closure) gens.push_back(-1);
  for (Int g : m.generators)
    if (g != 1 && !(m.sign_closure && g == -1)) gens.push_back(g);
  if (gens.empty()) return "<1>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + std::to_string(gens[i]);
  return out + ">";
}

bool is_unit_set(const ZSet& s) { return !nonunit_element(s).has_value(); }

InvertedPrimes inverted_primes(const ZSet& s) {
  InvertedPrimes out;
  if (const auto* c = std::get_if<PrimeComplement>(&s)) {
    out.cofinite = true;
    out.listed.insert(c->p);
  } else if (std::holds_alternative<Nonzero>(s)) {
    out.cofinite = true;
  } else {
    for (Int g : std::get<IntMonoid>(s).generators)
      for (Int q : prime_factors(g)) out.listed.insert(q);
  }
  return out;
}

bool has_multiple(const ZSet& s, Int k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "multiples of 0");
  const auto inv = inverted_primes(s);
  for (Int q : prime_factors(k))
    if (!inv.inverted(q)) return false;
  return true;
}

bool meets(const PrincipalIdeal& i, const ZSet& s) { return i.n != 0 && has_multiple(s, i.n); }

std::optional<Int> smallest_multiple_in(const ZSet& s, Int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
  if (const auto* c = std::get_if<PrimeComplement>(&s)) {
    if (n % c->p == 0) return std::nullopt;
    return n;
  }
  if (std::holds_alternative<Nonzero>(s)) return n;
  if (n == 1) return 1;
  const auto best = monoid_patterns(std::get<IntMonoid>(s), n);
  std::vector<int> full;
  for (Int q : prime_factors(n)) full.push_back(valuation(n, q));
  auto it = best.find(full);
  if (it == best.end()) return std::nullopt;
  return it->second;
}

StrongEvidence strongly_multiplicative_def(const ZSet& s, int depth) {
  StrongEvidence out;
  const auto g = nonunit_element(s);
  if (!g) {
    out.holds = true;
    out.evidence["rule"] = "S lies in {1, -1}; 1 lies in every sZ";
    out.evidence["witness"] = 1;
    return out;
  }
  Json chain;
  chain_intersection(ParametricChain{1, *g}, &chain, depth);
  out.holds = false;
  out.evidence["rule"] = "intersection of sZ over S lies in the intersection of g^k Z, which is 0 and misses S";
  out.evidence["g"] = *g;
  out.evidence["chain"] = std::move(chain);
  return out;
}

StrongEvidence strongly_multiplicative_mmc(const ZSet& s, int depth) {
  StrongEvidence out;
  const auto g = nonunit_element(s);
  if (!g) {
    out.holds = true;
    out.evidence["rule"] = "t = 1 is divisible by every element of S";
    out.evidence["t"] = 1;
    return out;
  }
  out.holds = false;
  out.evidence["rule"] = "t in S divisible by all of S would be divisible by every g^k, forcing t = 0";
  out.evidence["g"] = *g;
  // Each bounded candidate t is refuted by s = g t, which lies in S and does not divide t.
  Json refuted = Json::array();
  for (Int t : monoid_elements_by_magnitude(s, 1000, static_cast<std::size_t>(depth))) {
    Int gt;
    if (__builtin_mul_overflow(t, *g, &gt)) break;
    if (!contains(s, gt) || t % gt == 0) {
      out.evidence["inconsistent_at"] = t;
      out.holds = true;
      return out;
    }
    refuted.push_back({{"t", t}, {"s", gt}});
  }
  out.evidence["refuted"] = std::move(refuted);
  return out;
}

PrincipalIdeal chain_intersection(const ParametricChain& ch, Json* evidence, int depth) {
  if (ch.c == 0 || ch.k == 0 || ch.k == 1 || ch.k == -1)
    throw Error(ErrorKind::DegenerateChain, "chain c k^n Z needs c != 0 and |k| >= 2");
  if (evidence) {
    Json steps = Json::array();
    Int term = ch.c;
    for (int n = 0; n <= depth; ++n) {
      Int next;
      if (__builtin_mul_overflow(term, ch.k, &next)) {
        (*evidence)["truncated_at"] = n;
        break;
      }
      steps.push_back({{"n", n}, {"term", term}, {"outside_next", term % next != 0}});
      term = next;
    }
    (*evidence)["steps"] = std::move(steps);
    (*evidence)["derivation"] = "a common element x != 0 would be divisible by |k|^n for all n, but |x| < |k|^n eventually";
  }
  return PrincipalIdeal(0);
}

bool localized_contains(const PrincipalIdeal& i, const ZSet& s, Int a) {
  if (i.n == 0) return a == 0;
  return has_multiple(s, i.n / gcd(i.n, a));
}

PrincipalIdeal localized_contraction(const PrincipalIdeal& i, const ZSet& s) {
  if (i.n == 0) return PrincipalIdeal(0);
  const auto inv = inverted_primes(s);
  Int out = 1;
  for (Int q : prime_factors(i.n))
    if (!inv.inverted(q)) out = checked_mul(out, checked_pow(q, valuation(i.n, q)));
  return PrincipalIdeal(out);
}

Certificate check_intersection_commutes(const ZSet& s, const std::vector<PrincipalIdeal>& family) {
  Certificate cert;
  cert.claim_id = "thm.localization-intersection";
  cert.instance = "Z | " + format(s) + " | " + family_format(family);
  PrincipalIdeal meet_all(1);
  PrincipalIdeal rhs(1);
  for (const auto& j : family) {
    meet_all = meet(meet_all, j);
    rhs = meet(rhs, localized_contraction(j, s));
  }
  const PrincipalIdeal lhs = localized_contraction(meet_all, s);
  Json w;
  w["lhs_contraction"] = ideal_json(lhs);
  w["rhs_contraction"] = ideal_json(rhs);
  cert.add("S^-1(meet) = meet(S^-1)", lhs == rhs, std::move(w));
  return cert;
}

Certificate check_intersection_commutes(const ZSet& s, const ParametricChain& ch, int depth) {
  Certificate cert;
  cert.claim_id = "thm.localization-intersection";
  cert.instance = "Z | " + format(s) + " | {" + std::to_string(ch.c) + " * " + std::to_string(ch.k) + "^n Z}";
  Json chain;
  const PrincipalIdeal meet_all = chain_intersection(ch, &chain, depth);
  const PrincipalIdeal lhs = localized_contraction(meet_all, s);
  // Contractions of c k^n Z stay bounded exactly when every prime of k is inverted.
  const auto inv = inverted_primes(s);
  bool all_inverted = true;
  for (Int q : prime_factors(ch.k))
    if (!inv.inverted(q)) all_inverted = false;
  const PrincipalIdeal rhs = all_inverted ? localized_contraction(PrincipalIdeal(ch.c), s) : PrincipalIdeal(0);
  Json terms = Json::array();
  Int term = ch.c;
  for (int n = 0; n <= depth; ++n) {
    terms.push_back(localized_contraction(PrincipalIdeal(term), s).format());
    Int next;
    if (__builtin_mul_overflow(term, ch.k, &next)) break;
    term = next;
  }
  Json w;
  w["lhs_contraction"] = ideal_json(lhs);
  w["rhs_contraction"] = ideal_json(rhs);
  w["term_contractions"] = std::move(terms);
  w["chain"] = std::move(chain);
  cert.add("S^-1(meet) = meet(S^-1)", lhs == rhs, std::move(w));
  return cert;
}

Certificate replay_prime_family(int bound) {
  const ZSet s = Nonzero{};
  Certificate cert;
  cert.claim_id = "ex.prime-family";
  cert.instance = "Z | reg | {pZ : p prime}";
  Json primes = Json::array();
  bool all_full = true;
  for (Int p = 2; p <= bound; ++p) {
    if (!is_prime_number(p)) continue;
    primes.push_back(p);
    if (!localized_contains(PrincipalIdeal(p), s, 1)) all_full = false;
  }
  Json w1;
  w1["primes"] = std::move(primes);
  w1["reading"] = "1 = p/p lies in S^-1(pZ): each localized ideal is the full ring";
  cert.add("S^-1(pZ) is the full ring for every prime p <= bound", all_full, std::move(w1));

  // x != 0 lies outside qZ for the first prime q > |x|.
  bool escapes = true;
  Json w2 = Json::array();
  for (Int x = 1; x <= bound; ++x) {
    Int q = x + 1;
    while (!is_prime_number(q)) ++q;
    if (x % q == 0) escapes = false;
    if (x <= 6) w2.push_back({{"x", x}, {"outside", std::to_string(q) + "Z"}});
  }
  cert.add("the intersection of all pZ is 0", escapes, std::move(w2));

  const PrincipalIdeal lhs = localized_contraction(PrincipalIdeal(0), s);
  Json w3;
  w3["lhs"] = lhs.format();
  w3["rhs"] = "full ring";
  cert.add("S^-1(meet) differs from meet(S^-1)", lhs.n == 0 && all_full, std::move(w3));
  cert.note("primes beyond the bound enter through the symbolic tail: every p/p = 1");
  return cert;
}

std::optional<ZWitness> colon_prime_witness(const PrincipalIdeal& i, const ZSet& s) {
  if (i.n == 0) return ZWitness{1, PrincipalIdeal(0)};
  if (i.n == 1) return std::nullopt;
  const auto primes = prime_factors(i.n);
  std::optional<ZWitness> best;
  auto offer = [&](Int cand, Int p) {
    if (!best || abs_checked(cand) < abs_checked(best->s) || (abs_checked(cand) == abs_checked(best->s) && cand > best->s))
      best = ZWitness{cand, PrincipalIdeal(p)};
  };
  // (nZ : s) = pZ exactly when gcd(n, s) = n / p.
  if (const auto* mon = std::get_if<IntMonoid>(&s)) {
    const auto patterns = monoid_patterns(*mon, i.n);
    for (std::size_t j = 0; j < primes.size(); ++j) {
      std::vector<int> want;
      for (std::size_t k = 0; k < primes.size(); ++k) want.push_back(valuation(i.n, primes[k]) - (k == j ? 1 : 0));
      if (auto it = patterns.find(want); it != patterns.end()) offer(it->second, primes[j]);
    }
    return best;
  }
  for (Int p : primes) {
    const Int d = i.n / p;
    // d is the smallest positive integer with gcd(n, d) = d; any other s in
    // that class is a multiple of d.
    if (contains(s, d)) offer(d, p);
  }
  return best;
}

std::optional<ZWitness> is_s_prime_z(const PrincipalIdeal& i, const ZSet& s) {
  if (meets(i, s)) throw Error(ErrorKind::NotDisjoint, i.format() + " meets " + format(s));
  return colon_prime_witness(i, s);
}

bool is_strongly_prime_z(const PrincipalIdeal& p) {
  if (!p.is_prime()) throw Error(ErrorKind::NotPrime, p.format() + " is not prime");
  return false;
}

std::string ProductIdeal::format() const {
  auto part = [](const PrincipalIdeal& i) { return i.n == 0 ? std::string("0") : i.format(); };
  return part(first) + " x " + part(second);
}

std::string format(const ProductSet& s) { return format(s.first) + " x " + format(s.second); }

bool meets(const ProductIdeal& i, const ProductSet& s) { return meets(i.first, s.first) && meets(i.second, s.second); }

std::optional<std::pair<Int, Int>> is_s_prime_zz(const ProductIdeal& i, const ProductSet& s) {
  if (meets(i, s)) throw Error(ErrorKind::NotDisjoint, i.format() + " meets " + format(s));
  // Primes of Z x Z are Z x P and P x Z, so (P : (s1, s2)) is prime exactly
  // when one component colon is Z and the other is prime.
  std::optional<std::pair<Int, Int>> best;
  auto offer = [&](Int a, Int b) {
    auto key = [](std::pair<Int, Int> w) { return std::make_pair(abs_checked(w.first) + abs_checked(w.second), w); };
    if (!best || key({a, b}) < key(*best)) best = std::make_pair(a, b);
  };
  if (i.first.n != 0) {
    const auto s1 = smallest_multiple_in(s.first, i.first.n);
    const auto w2 = colon_prime_witness(i.second, s.second);
    if (s1 && w2) offer(*s1, w2->s);
  }
  if (i.second.n != 0) {
    const auto s2 = smallest_multiple_in(s.second, i.second.n);
    const auto w1 = colon_prime_witness(i.first, s.first);
    if (s2 && w1) offer(w1->s, *s2);
  }
  return best;
}

ClassifiedMinimal s_minimal_primes_zz(const ProductSet& s, Int bound) {
  ClassifiedMinimal out;
  auto s_prime = [&](const ProductIdeal& p) { return !meets(p, s) && is_s_prime_zz(p, s).has_value(); };
  for (Int n = 0; n <= bound; ++n)
    for (Int m = 0; m <= bound; ++m) {
      const ProductIdeal p{PrincipalIdeal(n), PrincipalIdeal(m)};
      if (s_prime(p)) out.s_primes.push_back(p);
    }
  for (const auto& p : out.s_primes) {
    // Sub-ideals of nZ x mZ are (an)Z x (bm)Z; search a, b in {0, 1, ..., bound}.
    bool smaller = false;
    for (Int a = 0; a <= bound && !smaller; ++a)
      for (Int b = 0; b <= bound && !smaller; ++b) {
        const ProductIdeal q{PrincipalIdeal(checked_mul(a, p.first.n)), PrincipalIdeal(checked_mul(b, p.second.n))};
        if (q == p) continue;
        if (s_prime(q)) smaller = true;
      }
    if (!smaller) out.minimal.push_back(p);
  }
  return out;
}

Certificate replay_counterexample2(int depth) {
  const ZSet s = PrimeComplement{2};
  Certificate cert;
  cert.claim_id = "ex.counterexample2";
  cert.instance = "Z | complement (2) | I_n = 2 * 3^n Z";

  const auto def = strongly_multiplicative_def(s, depth);
  const auto mmc = strongly_multiplicative_mmc(s, depth);
  Json w;
  w["definitional"] = def.evidence;
  w["maximal_multiple"] = mmc.evidence;
  w["strongly_prime_2Z"] = is_strongly_prime_z(PrincipalIdeal(2));
  cert.add("Z - 2Z is not strongly multiplicative", !def.holds && !mmc.holds, std::move(w));

  for (int n = 1; n <= depth; ++n) {
    const Int three_n = checked_pow(3, n);
    const PrincipalIdeal in(checked_mul(2, three_n));
    const auto wit = is_s_prime_z(in, s);
    const bool ok = wit && colon(in, three_n) == PrincipalIdeal(2) && contains(s, three_n) &&
                    colon(in, wit->s).is_prime();
    Json wn;
    wn["ideal"] = in.format();
    wn["s"] = three_n;
    wn["colon"] = colon(in, three_n).format();
    if (wit) wn["search_witness"] = wit->s;
    cert.add("I_" + std::to_string(n) + " is S-prime", ok, std::move(wn));
  }

  Json chain;
  const PrincipalIdeal meet_all = chain_intersection(ParametricChain{2, 3}, &chain, depth);
  const auto wit0 = is_s_prime_z(meet_all, s);
  Json w0;
  w0["intersection"] = meet_all.format();
  w0["chain"] = std::move(chain);
  if (wit0) w0["s"] = wit0->s;
  cert.add("the intersection of the I_n is 0 and is S-prime", meet_all.n == 0 && wit0.has_value(), std::move(w0));
  cert.note("I_n for n beyond the depth follow the same colon (I_n : 3^n) = 2Z");
  return cert;
}

Certificate replay_counterexample4(int depth) {
  const ProductSet s{Nonzero{}, IntMonoid{}};
  Certificate cert;
  cert.claim_id = "ex.counterexample4";
  cert.instance = "Z x Z | " + format(s);

  // ∩ (x,1)R = lcm(1..B)Z x Z over |x| <= B; the lcm is unbounded.
  Int l = 1;
  Json lcms = Json::array();
  bool lcm_grows = true;
  for (Int x = 1; x <= depth; ++x) {
    const Int next = lcm(l, x);
    if (x > 1 && next % x != 0) lcm_grows = false;
    l = next;
    lcms.push_back(l);
  }
  const ProductIdeal meet_all{PrincipalIdeal(0), PrincipalIdeal(1)};
  const bool disjoint = !meets(meet_all, s);
  Json w1;
  w1["bounded_lcms"] = std::move(lcms);
  w1["intersection"] = meet_all.format();
  w1["reading"] = "(0,1)R = 0 x Z misses every (x,1) with x != 0";
  cert.add("Reg(Z) x {1} is not strongly multiplicative", lcm_grows && disjoint, std::move(w1));

  // (1,0)(0,1) = (0,0); (x,1)(1,0) = (x,0) and (x,1)(0,1) = (0,1) are nonzero for x != 0.
  using Pair = std::pair<Int, Int>;
  auto mul = [](Pair u, Pair v) { return Pair{checked_mul(u.first, v.first), checked_mul(u.second, v.second)}; };
  const Pair a{1, 0}, b{0, 1}, origin{0, 0};
  bool outside = mul(a, b) == origin;
  for (Int x = -depth; x <= depth; ++x) {
    if (x == 0) continue;
    if (mul({x, 1}, a) == origin || mul({x, 1}, b) == origin) outside = false;
  }
  const ProductIdeal zero{PrincipalIdeal(0), PrincipalIdeal(0)};
  const bool decided = !is_s_prime_zz(zero, s).has_value();
  Json w2;
  w2["a"] = "(1,0)";
  w2["b"] = "(0,1)";
  w2["ab"] = "(0,0)";
  w2["sa"] = "(x,0)";
  w2["sb"] = "(0,1)";
  cert.add("{0} is not S-prime", outside && decided, std::move(w2));

  const ProductIdeal target{PrincipalIdeal(0), PrincipalIdeal(1)};
  const auto wt = is_s_prime_zz(target, s);
  Json w3;
  if (wt) w3["s"] = "(" + std::to_string(wt->first) + "," + std::to_string(wt->second) + ")";
  cert.add("{0} x Z is S-prime", wt.has_value() && wt->first == 1 && wt->second == 1, std::move(w3));

  // Every S-prime in the window has one of the forms 0 x Z, nZ x 0, nZ x pZ (n != 0).
  const auto classified = s_minimal_primes_zz(s, depth);
  bool forms = true;
  Json bad = Json::array();
  for (Int n = 0; n <= depth; ++n)
    for (Int m = 0; m <= depth; ++m) {
      const ProductIdeal p{PrincipalIdeal(n), PrincipalIdeal(m)};
      const bool expected = (n == 0 && m == 1) || (n != 0 && (m == 0 || is_prime_number(m)));
      const bool got = std::find(classified.s_primes.begin(), classified.s_primes.end(), p) != classified.s_primes.end();
      if (expected != got) {
        forms = false;
        bad.push_back(p.format());
      }
    }
  Json w4;
  w4["window"] = depth;
  w4["count"] = classified.s_primes.size();
  if (!bad.empty()) w4["mismatches"] = std::move(bad);
  cert.add("S-prime ideals are 0 x Z, nZ x 0 and nZ x pZ", forms, std::move(w4));

  Json w5;
  Json mins = Json::array();
  for (const auto& p : classified.minimal) mins.push_back(p.format());
  w5["minimal"] = std::move(mins);
  cert.add("0 x Z is the unique S-minimal prime", classified.minimal.size() == 1 && classified.minimal[0] == target,
           std::move(w5));
  cert.note("nZ x 0 contains the S-prime 2nZ x 0 and nZ x pZ contains nZ x 0, for every n");
  return cert;
}

}  // namespace smul::zint

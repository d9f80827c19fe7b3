#include <doctest.h>

#include <set>

#include "smul/zint.hpp"

using namespace smul;
using namespace smul::zint;

namespace {

/// Residues mod n hit by elements of S, computed by closure inside Z/n.
std::set<Int> residues(const ZSet& s, Int n) {
  std::set<Int> out;
  auto md = [n](Int x) { return ((x % n) + n) % n; };
  if (const auto* c = std::get_if<PrimeComplement>(&s)) {
    for (Int r = 0; r < n; ++r)
      if (n % c->p != 0 || r % c->p != 0) out.insert(r);
    return out;
  }
  if (std::holds_alternative<Nonzero>(s)) {
    for (Int r = 0; r < n; ++r) out.insert(r);
    return out;
  }
  const auto& m = std::get<IntMonoid>(s);
  std::vector<Int> gens = m.generators;
  if (m.sign_closure) gens.push_back(-1);
  std::vector<Int> todo{md(1)};
  out.insert(md(1));
  while (!todo.empty()) {
    const Int r = todo.back();
    todo.pop_back();
    for (Int g : gens) {
      const Int x = md(r * md(g));
      if (out.insert(x).second) todo.push_back(x);
    }
  }
  return out;
}

/// Literal S-prime test for nZ (n >= 1) on residues: some s in S with
/// ab in P implying sa in P or sb in P.
bool s_prime_by_residues(Int n, const ZSet& s) {
  for (Int r : residues(s, n)) {
    bool ok = true;
    for (Int a = 0; a < n && ok; ++a)
      for (Int b = 0; b < n && ok; ++b)
        if ((a * b) % n == 0 && (r * a) % n != 0 && (r * b) % n != 0) ok = false;
    if (ok) return true;
  }
  return false;
}

std::vector<ZSet> sample_sets() {
  return {IntMonoid{}, IntMonoid{{}, true}, IntMonoid{{3}}, IntMonoid{{2, 5}}, IntMonoid{{-6}},
          IntMonoid{{4, 9}, true}, IntMonoid{{12}}, PrimeComplement{2}, PrimeComplement{3},
          PrimeComplement{5}, Nonzero{}};
}

}  // namespace

TEST_CASE("principal ideals: lattice operations against scans of multiples") {
  for (Int a = 1; a <= 24; ++a)
    for (Int b = 1; b <= 24; ++b) {
      Int first = 0;
      for (Int x = 1; x <= a * b; ++x)
        if (x % a == 0 && x % b == 0) {
          first = x;
          break;
        }
      CHECK(meet(PrincipalIdeal(a), PrincipalIdeal(b)).n == first);
      Int g = 0;
      for (Int d = 1; d <= std::min(a, b); ++d)
        if (a % d == 0 && b % d == 0) g = d;
      CHECK(join(PrincipalIdeal(a), PrincipalIdeal(b)).n == g);
      // (aZ : b) is the smallest positive x with a | bx.
      Int c = 0;
      for (Int x = 1; x <= a; ++x)
        if ((b * x) % a == 0) {
          c = x;
          break;
        }
      CHECK(colon(PrincipalIdeal(a), b).n == c);
    }
  CHECK(colon(PrincipalIdeal(0), 5).n == 0);
  CHECK(colon(PrincipalIdeal(0), 0).n == 1);
  CHECK(PrincipalIdeal(-6).n == 6);
  CHECK(PrincipalIdeal(0).is_prime());
  CHECK_FALSE(PrincipalIdeal(6).is_prime());
}

TEST_CASE("primality and factorization") {
  std::vector<Int> sieve_primes;
  for (Int n = 2; n < 2000; ++n) {
    bool p = true;
    for (Int d = 2; d * d <= n; ++d)
      if (n % d == 0) p = false;
    CHECK(is_prime_number(n) == p);
    if (p) sieve_primes.push_back(n);
  }
  CHECK(is_prime_number(1'000'000'007));
  CHECK_FALSE(is_prime_number(1'000'000'007LL * 998'244'353LL));
  CHECK(prime_factors(1'000'000'007LL * 998'244'353LL) == std::vector<Int>{998'244'353, 1'000'000'007});
  CHECK(prime_factors(-360) == std::vector<Int>{2, 3, 5});
  CHECK(valuation(360, 2) == 3);
  CHECK_THROWS_AS(checked_pow(10, 19), Error);
}

TEST_CASE("monoid membership agrees with explicit closure up to 10^4") {
  const Int bound = 10'000;
  for (const auto& set : sample_sets()) {
    const auto* m = std::get_if<IntMonoid>(&set);
    if (!m) continue;
    std::set<Int> closure{1};
    std::vector<Int> todo{1};
    std::vector<Int> gens = m->generators;
    if (m->sign_closure) gens.push_back(-1);
    while (!todo.empty()) {
      const Int x = todo.back();
      todo.pop_back();
      for (Int g : gens) {
        const Int y = x * g;
        if (y >= -bound && y <= bound && closure.insert(y).second) todo.push_back(y);
      }
    }
    for (Int x = -bound; x <= bound; ++x) CHECK(contains(set, x) == (closure.count(x) > 0));
  }
  CHECK(contains(PrimeComplement{2}, 9));
  CHECK_FALSE(contains(PrimeComplement{2}, 18));
  CHECK_FALSE(contains(Nonzero{}, 0));
  CHECK_THROWS_AS(checked_set(IntMonoid{{0}}), Error);
  CHECK_THROWS_AS(checked_set(IntMonoid{{2'000'000}}), Error);
  CHECK_THROWS_AS(checked_set(PrimeComplement{4}), Error);
}

TEST_CASE("meeting an ideal and multiples inside S") {
  for (const auto& set : sample_sets())
    for (Int n = 1; n <= 40; ++n) {
      const bool by_residue = residues(set, n).count(0) > 0;
      CHECK(meets(PrincipalIdeal(n), set) == by_residue);
      const auto m = smallest_multiple_in(set, n);
      CHECK(m.has_value() == by_residue);
      if (m) {
        CHECK(contains(set, *m));
        CHECK(*m % n == 0);
        // Nothing smaller in magnitude works.
        for (Int x = n; x < (*m < 0 ? -*m : *m); x += n) CHECK_FALSE((contains(set, x) || contains(set, -x)));
      }
    }
  CHECK_FALSE(meets(PrincipalIdeal(0), Nonzero{}));
}

TEST_CASE("S-prime ideals of Z: gcd-class search against the literal definition") {
  for (const auto& set : sample_sets())
    for (Int n = 1; n <= 48; ++n) {
      if (meets(PrincipalIdeal(n), set)) {
        CHECK_THROWS_AS(is_s_prime_z(PrincipalIdeal(n), set), Error);
        continue;
      }
      const auto w = is_s_prime_z(PrincipalIdeal(n), set);
      CHECK_MESSAGE(w.has_value() == s_prime_by_residues(n, set), "n = ", n, " S = ", format(set));
      if (w) {
        CHECK(contains(set, w->s));
        CHECK(colon(PrincipalIdeal(n), w->s) == w->colon);
        CHECK(w->colon.is_prime());
        // Smallest magnitude among witnesses.
        for (Int x = 1; x < (w->s < 0 ? -w->s : w->s); ++x)
          for (Int y : {x, -x})
            if (contains(set, y)) CHECK_FALSE(colon(PrincipalIdeal(n), y).is_prime());
      }
    }
}

TEST_CASE("S-prime examples in Z") {
  const auto w = is_s_prime_z(PrincipalIdeal(18), PrimeComplement{2});
  REQUIRE(w.has_value());
  CHECK(w->s == 9);
  CHECK(w->colon == PrincipalIdeal(2));
  CHECK_FALSE(is_s_prime_z(PrincipalIdeal(6), IntMonoid{{}, true}).has_value());
  for (const auto& set : sample_sets()) {
    const auto z = is_s_prime_z(PrincipalIdeal(0), set);
    REQUIRE(z.has_value());
    CHECK(z->s == 1);
  }
  CHECK_THROWS_AS(is_s_prime_z(PrincipalIdeal(3), PrimeComplement{2}), Error);
  CHECK_FALSE(is_strongly_prime_z(PrincipalIdeal(2)));
  CHECK_THROWS_AS(is_strongly_prime_z(PrincipalIdeal(4)), Error);
}

TEST_CASE("strongly multiplicative sets of Z are exactly those inside {1, -1}") {
  for (const auto& set : sample_sets()) {
    const auto def = strongly_multiplicative_def(set);
    const auto mmc = strongly_multiplicative_mmc(set);
    CHECK(def.holds == mmc.holds);
    CHECK(def.holds == is_unit_set(set));
    if (!def.holds) {
      const Int g = def.evidence["g"].get<Int>();
      CHECK(contains(set, g));
      for (int k = 0; k < 12; ++k) {
        const Int gk = checked_pow(g, k);
        Int gk1;
        if (__builtin_mul_overflow(gk, g, &gk1)) break;
        CHECK(gk % gk1 != 0);
      }
    }
  }
}

TEST_CASE("parametric chains") {
  for (auto ch : {ParametricChain{2, 3}, ParametricChain{1, 2}, ParametricChain{5, -2}}) {
    Json ev;
    CHECK(chain_intersection(ch, &ev).n == 0);
    for (const auto& step : ev["steps"]) CHECK(step["outside_next"].get<bool>());
  }
  CHECK_THROWS_AS(chain_intersection(ParametricChain{2, 1}), Error);
  CHECK_THROWS_AS(chain_intersection(ParametricChain{2, -1}), Error);
  CHECK_THROWS_AS(chain_intersection(ParametricChain{0, 3}), Error);
  try {
    chain_intersection(ParametricChain{3, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateChain);
  }
}

TEST_CASE("localized membership against residues") {
  for (const auto& set : sample_sets())
    for (Int n = 1; n <= 30; ++n) {
      const auto rs = residues(set, n);
      const auto contraction = localized_contraction(PrincipalIdeal(n), set);
      for (Int a = -40; a <= 40; ++a) {
        bool expected = false;
        for (Int r : rs)
          if ((((r * a) % n) + n) % n == 0) expected = true;
        CHECK(localized_contains(PrincipalIdeal(n), set, a) == expected);
        CHECK(contraction.contains(a) == expected);
      }
    }
}

TEST_CASE("localization and intersections over Z") {
  for (const auto& set : sample_sets()) {
    CHECK(check_intersection_commutes(set, {PrincipalIdeal(4), PrincipalIdeal(6)}).passed());
    CHECK(check_intersection_commutes(set, {PrincipalIdeal(12), PrincipalIdeal(18), PrincipalIdeal(10)}).passed());
  }
  CHECK(check_intersection_commutes(IntMonoid{{}, true}, ParametricChain{2, 3}).passed());
  CHECK_FALSE(check_intersection_commutes(PrimeComplement{2}, ParametricChain{2, 3}).passed());
  CHECK(check_intersection_commutes(PrimeComplement{3}, ParametricChain{2, 3}).passed());
  CHECK_FALSE(check_intersection_commutes(IntMonoid{{2}}, ParametricChain{1, 2}).passed());
  CHECK_FALSE(check_intersection_commutes(Nonzero{}, ParametricChain{1, 2}).passed());
  CHECK(replay_prime_family().passed());
}

TEST_CASE("Z x Z: S-prime decision against residues") {
  // For n, m >= 1 every question lives in Z/n x Z/m.
  const std::vector<ProductSet> sets = {{Nonzero{}, IntMonoid{}}, {IntMonoid{{3}}, PrimeComplement{2}},
                                        {IntMonoid{{2}}, IntMonoid{{}, true}}};
  for (const auto& s : sets)
    for (Int n = 1; n <= 8; ++n)
      for (Int m = 1; m <= 8; ++m) {
        const ProductIdeal p{PrincipalIdeal(n), PrincipalIdeal(m)};
        const auto r1 = residues(s.first, n), r2 = residues(s.second, m);
        const bool meets_expected = r1.count(0) && r2.count(0);
        CHECK(meets(p, s) == meets_expected);
        if (meets_expected) continue;
        bool expected = false;
        for (Int x : r1)
          for (Int y : r2) {
            bool ok = true;
            for (Int a1 = 0; a1 < n && ok; ++a1)
              for (Int a2 = 0; a2 < m && ok; ++a2)
                for (Int b1 = 0; b1 < n && ok; ++b1)
                  for (Int b2 = 0; b2 < m && ok; ++b2) {
                    const bool ab = (a1 * b1) % n == 0 && (a2 * b2) % m == 0;
                    const bool sa = (x * a1) % n == 0 && (y * a2) % m == 0;
                    const bool sb = (x * b1) % n == 0 && (y * b2) % m == 0;
                    if (ab && !sa && !sb) ok = false;
                  }
            if (ok) expected = true;
          }
        CHECK_MESSAGE(is_s_prime_zz(p, s).has_value() == expected, p.format(), " | ", format(s));
      }
}

TEST_CASE("replays over Z and Z x Z") {
  const auto c2 = replay_counterexample2();
  CHECK(c2.passed());
  CHECK(c2.checks.size() == 14);
  CHECK(c2.checks[3].witness["colon"] == "2Z");
  CHECK(c2.to_json().dump() == replay_counterexample2().to_json().dump());

  const auto c4 = replay_counterexample4();
  CHECK(c4.passed());
  CHECK(c4.to_json().dump() == replay_counterexample4().to_json().dump());

  const ProductSet s{Nonzero{}, IntMonoid{}};
  const auto w = is_s_prime_zz({PrincipalIdeal(0), PrincipalIdeal(1)}, s);
  REQUIRE(w.has_value());
  CHECK(*w == std::make_pair(Int{1}, Int{1}));
  CHECK_FALSE(is_s_prime_zz({PrincipalIdeal(0), PrincipalIdeal(0)}, s).has_value());
  CHECK(is_s_prime_zz({PrincipalIdeal(4), PrincipalIdeal(0)}, s).has_value());
  CHECK(is_s_prime_zz({PrincipalIdeal(4), PrincipalIdeal(7)}, s).has_value());
  CHECK_FALSE(is_s_prime_zz({PrincipalIdeal(4), PrincipalIdeal(6)}, s).has_value());
}

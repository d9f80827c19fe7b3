#include "doctest.h"

#include "smul/sprime.hpp"

using namespace smul;

namespace {

Elem e(std::size_t i) { return elem(i); }

std::vector<RingPtr> corpus() {
  auto z2 = FiniteRing::zn(2);
  auto z3 = FiniteRing::zn(3);
  auto z4 = FiniteRing::zn(4);
  std::vector<RingPtr> out;
  for (std::size_t n : {2, 4, 6, 8, 9, 12, 16, 18}) out.push_back(FiniteRing::zn(n));
  out.push_back(FiniteRing::boolean(3));
  out.push_back(FiniteRing::product(z2, z4));
  out.push_back(FiniteRing::product(z4, z3));
  out.push_back(FiniteRing::product(z4, z4));
  out.push_back(FiniteRing::trivial_extension(z2, RingModule(RingHom::identity(z2))));
  return out;
}

// Literal definition: some s in S with sa or sb in P whenever ab in P.
std::optional<Elem> s_prime_by_definition(const FiniteRing& r, const ElemSet& p, const ElemSet& s) {
  for (Elem x : s) {
    bool ok = true;
    for (Elem a : r.elements())
      for (Elem b : r.elements())
        if (p.contains(r.mul(a, b)) && !p.contains(r.mul(x, a)) && !p.contains(r.mul(x, b))) ok = false;
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("S-prime examples") {
  auto z4 = FiniteRing::zn(4);
  auto units = close(z4, std::vector<Elem>{e(3)});
  CHECK_FALSE(is_s_prime(zero_ideal(z4), units).has_value());
  CHECK(is_s_prime(principal_ideal(z4, e(2)), units)->s == e(1));
  auto z6 = FiniteRing::zn(6);
  try {
    is_s_prime(principal_ideal(z6, e(3)), close(z6, std::vector<Elem>{e(3)}));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotDisjoint);
  }
}

TEST_CASE("definitional and colon S-prime tests agree with the literal definition") {
  for (const auto& r : corpus()) {
    INFO(r->expression());
    const auto ideals = all_ideals(r);
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      for (const auto& p : ideals) {
        if (p.elements().intersects(s.elements())) continue;
        const auto def = is_s_prime(p, s, SPrimeMode::Definitional);
        const auto col = is_s_prime(p, s, SPrimeMode::ColonPrime);
        CHECK(def.has_value() == col.has_value());
        const auto lit = s_prime_by_definition(*r, p.elements(), s.elements());
        CHECK(def.has_value() == lit.has_value());
        if (def) CHECK(def->s == *lit);
        if (is_prime(p)) CHECK(def.has_value());
        if (def && s.subset_of_units()) CHECK(is_prime(p));
      }
    }
  }
}

TEST_CASE("strongly prime ideals of finite rings") {
  auto z6 = FiniteRing::zn(6);
  CHECK(is_strongly_prime(principal_ideal(z6, e(2))));
  CHECK_THROWS_AS(is_strongly_prime(zero_ideal(z6)), Error);
  for (const auto& r : corpus()) {
    for (const auto& p : prime_ideals(r)) {
      CHECK(is_strongly_prime(p));
      CHECK(strongly_multiplicative_mmc(from_prime_complement(p)).holds);
      if (r->size() <= 16) CHECK(is_strongly_prime_by_principal_families(p));
    }
    auto rep = zero_dimensional_report(r);
    CHECK(rep.all_agree());
    CHECK(rep.every_prime_strongly_prime);
    CHECK(is_strongly_zero_dimensional(r));
  }
}

TEST_CASE("S-minimal primes of Z4 x Z9") {
  auto z4 = FiniteRing::zn(4);
  auto r = FiniteRing::product(z4, FiniteRing::zn(9));
  auto s = close(r, std::vector<Elem>{r->pair(e(1), e(0))});
  auto mins = s_minimal_primes(s);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].elements() == ElemSet{r->pair(e(0), e(0)), r->pair(e(2), e(0))});
  CHECK_FALSE(is_prime(mins[0]));
  auto cert = check_s_minimal_theorem(s);
  CHECK(cert.passed());

  auto alg = algorithm1(s);
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].ideal == mins[0]);
  CHECK(r->format(alg[0].witness.first) == "(0,1)");
  CHECK(r->format(alg[0].witness.second) == "(1,0)");
}

TEST_CASE("algorithm 1 mirrored branch and guards") {
  auto z4 = FiniteRing::zn(4);
  auto r = FiniteRing::product(z4, z4);
  auto s = close(r, std::vector<Elem>{r->pair(e(0), e(1))});
  auto alg = algorithm1(s);
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].ideal.elements() == ElemSet{r->pair(e(0), e(0)), r->pair(e(0), e(2))});
  auto field = FiniteRing::product(FiniteRing::zn(2), z4);
  try {
    algorithm1(close(field, std::vector<Elem>{field->pair(e(1), e(0))}));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotApplicable);
  }
  CHECK_THROWS_AS(algorithm1(close(r, std::vector<Elem>{r->pair(e(3), e(1))})), Error);
}

TEST_CASE("algorithm 1 matches S-minimal primes on products") {
  int applicable = 0;
  for (std::size_t m : {4, 6, 8, 9}) {
    for (std::size_t n : {4, 6, 8, 9}) {
      if (m * n > 64) continue;
      auto r = FiniteRing::product(FiniteRing::zn(m), FiniteRing::zn(n));
      for (const auto& s : enumerate_multiplicative_sets(r)) {
        std::vector<Algorithm1Entry> out;
        try {
          out = algorithm1(s);
        } catch (const Error& err) {
          CHECK(err.kind() == ErrorKind::NotApplicable);
          continue;
        }
        ++applicable;
        auto mins = s_minimal_primes(s);
        REQUIRE(out.size() == mins.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          CHECK(out[i].ideal == mins[i]);
          auto [a, b] = out[i].witness;
          CHECK(out[i].ideal.contains(r->mul(a, b)));
          CHECK_FALSE(out[i].ideal.contains(a));
          CHECK_FALSE(out[i].ideal.contains(b));
        }
      }
    }
  }
  CHECK(applicable >= 20);
}

TEST_CASE("S-minimal theorem over the corpus") {
  for (const auto& r : corpus()) {
    INFO(r->expression());
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      auto cert = check_s_minimal_theorem(s);
      if (!cert.passed()) INFO(cert.to_json().dump());
      CHECK(cert.passed());
    }
  }
  auto z6 = FiniteRing::zn(6);
  auto s3 = close(z6, std::vector<Elem>{e(3)});
  for (const auto& p : s_minimal_primes(s3)) CHECK(p.elements().subset_of(z6->principal(e(3))));
}

TEST_CASE("strong Krull separation") {
  auto z6 = FiniteRing::zn(6);
  auto k = strong_krull(close(z6, std::vector<Elem>{e(3)}), zero_ideal(z6));
  CHECK(k.found.elements() == ElemSet{e(0), e(2), e(4)});
  CHECK(k.is_maximal_ideal);
  auto z4 = FiniteRing::zn(4);
  auto k4 = strong_krull(close(z4, std::vector<Elem>{e(3)}), zero_ideal(z4));
  CHECK(k4.found.elements() == ElemSet{e(0), e(2)});
  CHECK_THROWS_AS(strong_krull(close(z6, std::vector<Elem>{e(3)}), principal_ideal(z6, e(3))), Error);

  for (const auto& r : corpus()) {
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      for (const auto& i : all_ideals(r)) {
        if (i.elements().intersects(s.elements())) continue;
        auto res = strong_krull(s, i);
        CHECK(i.subset_of(res.found));
        CHECK_FALSE(res.found.elements().intersects(s.elements()));
        CHECK(std::find(res.omega_maximal.begin(), res.omega_maximal.end(), res.found) != res.omega_maximal.end());
        for (const auto& m : res.omega_maximal) CHECK(is_maximal(m));
      }
    }
  }

  // Finite analog of the product-with-a-field example.
  auto r = FiniteRing::product(z6, FiniteRing::zn(2));
  auto s = from_elements(r, ElemSet{r->pair(e(1), e(0)), r->pair(e(1), e(1))});
  auto res = strong_krull(s, zero_ideal(r));
  CHECK(res.is_maximal_ideal);
  CHECK(is_strongly_prime(res.found));
}

TEST_CASE("descending chains of S-prime ideals") {
  for (const auto& r : corpus()) {
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      for (const auto& p : all_ideals(r)) {
        if (p.elements().intersects(s.elements()) || !is_s_prime(p, s)) continue;
        for (Elem x : s.elements()) CHECK(check_descending_chain(p, s, x).passed());
      }
    }
  }
}

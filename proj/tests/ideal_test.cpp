#include "doctest.h"

#include <bit>

#include "smul/finite_ring.hpp"
#include "smul/ideal.hpp"

using namespace smul;

namespace {

Elem e(std::size_t i) { return elem(i); }

// Brute-force ideal enumeration over all subsets (rings with at most 16 elements).
std::vector<ElemSet> ideals_by_subset_scan(const FiniteRing& r) {
  std::vector<ElemSet> out;
  const std::size_t n = r.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if ((mask & 1U) == 0) continue;
    ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(e(i));
    bool ok = true;
    for (Elem a : s) {
      for (Elem b : s)
        if (!s.contains(r.add(a, b))) ok = false;
      for (Elem x : r.elements())
        if (!s.contains(r.mul(x, a))) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<RingPtr> rings() {
  auto z2 = FiniteRing::zn(2);
  auto z4 = FiniteRing::zn(4);
  std::vector<RingPtr> out;
  for (std::size_t n : {2, 4, 6, 8, 9, 12, 16}) out.push_back(FiniteRing::zn(n));
  out.push_back(FiniteRing::boolean(4));
  out.push_back(FiniteRing::product(z2, z4));
  out.push_back(FiniteRing::product(z4, z4));
  out.push_back(FiniteRing::trivial_extension(z2, RingModule(RingHom::from_assignments(
                                                      z2, FiniteRing::product(z2, z2), {}))));
  return out;
}

}  // namespace

TEST_CASE("span") {
  auto z6 = FiniteRing::zn(6);
  std::vector<Elem> g{e(2)};
  CHECK(span(z6, g).elements() == ElemSet{e(0), e(2), e(4)});
  CHECK(span(z6, {}).elements() == ElemSet{e(0)});
  std::vector<Elem> g2{e(2), e(3)};
  CHECK(span(z6, g2).is_unit());
}

TEST_CASE("lattice operations in Z6") {
  auto z6 = FiniteRing::zn(6);
  const Ideal two = principal_ideal(z6, e(2));
  const Ideal three = principal_ideal(z6, e(3));
  const Ideal zero = zero_ideal(z6);
  CHECK(intersect(two, three).elements() == ElemSet{e(0)});
  CHECK(sum(two, three).is_unit());
  CHECK(colon(zero, two).elements() == ElemSet{e(0), e(3)});
  CHECK(colon(two, unit_ideal(z6)) == two);
  std::vector<Ideal> none;
  CHECK(intersect_family(z6, none).is_unit());
}

TEST_CASE("primes, maximals and Jacobson radical") {
  auto z6 = FiniteRing::zn(6);
  auto primes = prime_ideals(z6);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0].elements() == ElemSet{e(0), e(3)});
  CHECK(primes[1].elements() == ElemSet{e(0), e(2), e(4)});
  for (const auto& p : primes) CHECK(is_maximal(p));
  CHECK(jacobson(z6).is_zero());
  auto z4 = FiniteRing::zn(4);
  CHECK(jacobson(z4).elements() == ElemSet{e(0), e(2)});
}

TEST_CASE("ideal enumeration matches a subset scan") {
  for (const auto& r : rings()) {
    if (r->size() > 16) continue;
    INFO(r->expression());
    CHECK(r->lattice().ideals() == ideals_by_subset_scan(*r));
  }
}

TEST_CASE("lattice laws and colon adjunction") {
  for (const auto& r : rings()) {
    const auto& lat = r->lattice();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const ElemSet& a = lat[i];
        const ElemSet& b = lat[j];
        CHECK(lat[lat.meet(i, j)] == (a & b));
        CHECK(lat[lat.meet(i, j)].subset_of(a));
        CHECK(a.subset_of(lat[lat.join(i, j)]));
        CHECK(b.subset_of(lat[lat.join(i, j)]));
        const ElemSet& c = lat[lat.colon(i, j)];
        for (Elem x : r->elements()) {
          bool into = true;
          for (Elem y : b)
            if (!a.contains(r->mul(x, y))) into = false;
          CHECK(c.contains(x) == into);
        }
      }
    }
  }
}

TEST_CASE("primality via quotients, dimension zero, Jacobson characterization") {
  for (const auto& r : rings()) {
    const auto& lat = r->lattice();
    for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
      auto q = FiniteRing::quotient(r, lat[i]);
      const bool domain = q->regular_elements().size() + 1 == q->size();
      CHECK(lat.is_prime(i) == domain);
      if (lat.is_prime(i)) CHECK(lat.is_maximal(i));
      CHECK(lat.is_maximal(i) == is_maximal_set(*r, lat[i]));
    }
    ElemSet jac;
    for (Elem x : r->elements()) {
      bool in = true;
      for (Elem a : r->elements())
        if (!r->is_unit(r->sub(r->one(), r->mul(a, x)))) in = false;
      if (in) jac.insert(x);
    }
    CHECK(lat.jacobson() == jac);
  }
}

TEST_CASE("checked ideals") {
  auto z6 = FiniteRing::zn(6);
  CHECK_THROWS_AS(checked_ideal(z6, ElemSet{e(0), e(2)}), Error);
  CHECK(checked_ideal(z6, ElemSet{e(0), e(3)}).format() == "(3)");
}

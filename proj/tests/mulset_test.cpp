#include "doctest.h"

#include "smul/mulset.hpp"

using namespace smul;

namespace {

Elem e(std::size_t i) { return elem(i); }

// All subsets containing 1, avoiding 0, closed under products.
std::vector<ElemSet> multiplicative_by_subset_scan(const FiniteRing& r) {
  std::vector<ElemSet> out;
  const std::size_t n = r.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if ((mask & 1U) != 0 || ((mask >> idx(r.one())) & 1U) == 0) continue;
    ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(e(i));
    bool ok = true;
    for (Elem a : s) {
      for (Elem b : s)
        if (!s.contains(r.mul(a, b))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElemSet> sets_of(const std::vector<MultiplicativeSet>& v) {
  std::vector<ElemSet> out;
  for (const auto& s : v) out.push_back(s.elements());
  return out;
}

std::vector<RingPtr> corpus() {
  auto z2 = FiniteRing::zn(2);
  auto z3 = FiniteRing::zn(3);
  auto z4 = FiniteRing::zn(4);
  std::vector<RingPtr> out;
  for (std::size_t n : {2, 4, 6, 8, 9, 10, 12, 16, 18, 30}) out.push_back(FiniteRing::zn(n));
  out.push_back(FiniteRing::boolean(3));
  out.push_back(FiniteRing::product(z4, z3));
  out.push_back(FiniteRing::product(z2, z4));
  out.push_back(FiniteRing::product(z4, FiniteRing::zn(9)));
  out.push_back(FiniteRing::trivial_extension(z4, RingModule(RingHom::identity(z4))));
  return out;
}

ElemSet brute_saturation(const FiniteRing& r, const ElemSet& s) {
  ElemSet out;
  for (Elem a : r.elements())
    for (Elem x : r.elements())
      if (s.contains(r.mul(a, x))) {
        out.insert(a);
        break;
      }
  return out;
}

}  // namespace

TEST_CASE("closure") {
  auto z6 = FiniteRing::zn(6);
  std::vector<Elem> g{e(3)};
  CHECK(close(z6, g).elements() == ElemSet{e(1), e(3)});
  auto z4 = FiniteRing::zn(4);
  std::vector<Elem> two{e(2)};
  try {
    close(z4, two);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ContainsZero);
  }
}

TEST_CASE("strongly multiplicative tests on Z6") {
  auto z6 = FiniteRing::zn(6);
  std::vector<Elem> g{e(3)};
  auto s = close(z6, g);
  auto def = strongly_multiplicative_def(s);
  CHECK(def.holds);
  CHECK(def.intersection == ElemSet{e(0), e(3)});
  CHECK(def.witness == e(3));
  auto mmc = strongly_multiplicative_mmc(s);
  CHECK(mmc.holds);
  CHECK(mmc.witness == e(3));
  CHECK(s.max_multiple() == e(3));
  auto one = close(z6, {});
  CHECK(strongly_multiplicative_def(one).witness == e(1));
}

TEST_CASE("saturation examples") {
  auto z6 = FiniteRing::zn(6);
  std::vector<Elem> g{e(3)};
  auto sat = saturation(close(z6, g));
  CHECK(sat.elements == ElemSet{e(1), e(3), e(5)});
  REQUIRE(sat.form.has_value());
  CHECK(sat.form->kind == SaturationKind::UnitsTimesFactor);
  CHECK(sat.form->idempotent == e(3));
  auto z4 = FiniteRing::zn(4);
  std::vector<Elem> g3{e(3)};
  auto sat4 = saturation(close(z4, g3));
  CHECK(sat4.elements == ElemSet{e(1), e(3)});
  CHECK(sat4.form->kind == SaturationKind::Units);

  auto p = FiniteRing::product(FiniteRing::zn(4), FiniteRing::zn(9));
  std::vector<Elem> g10{p->pair(e(1), e(0))};
  auto satp = saturation(close(p, g10));
  CHECK(satp.form->kind == SaturationKind::UnitsTimesFactor);
  CHECK(satp.form->side == FactorSide::Left);
  std::vector<Elem> g01{p->pair(e(0), e(1))};
  CHECK(saturation(close(p, g01)).form->side == FactorSide::Right);
  std::vector<Elem> gu{p->pair(e(3), e(1))};
  CHECK(saturation(close(p, gu)).form->kind == SaturationKind::UnitsTimesUnits);
}

TEST_CASE("enumeration agrees with a subset scan") {
  CHECK(sets_of(enumerate_multiplicative_sets(FiniteRing::zn(4))) ==
        std::vector<ElemSet>{ElemSet{e(1)}, ElemSet{e(1), e(3)}});
  CHECK(enumerate_multiplicative_sets(FiniteRing::zn(2)).size() == 1);
  for (const auto& r : corpus()) {
    if (r->size() > 16) continue;
    INFO(r->expression());
    CHECK(sets_of(enumerate_multiplicative_sets(r)) == multiplicative_by_subset_scan(*r));
  }
  auto z6 = FiniteRing::zn(6);
  auto sets = sets_of(enumerate_multiplicative_sets(z6));
  for (const ElemSet& expected : {ElemSet{e(1)}, ElemSet{e(1), e(3)}, ElemSet{e(1), e(4)}, ElemSet{e(1), e(5)},
                                  ElemSet{e(1), e(3), e(5)}, ElemSet{e(1), e(2), e(4), e(5)}})
    CHECK(std::find(sets.begin(), sets.end(), expected) != sets.end());
}

TEST_CASE("two-generator enumeration on a mid-size ring") {
  auto r = FiniteRing::zn(30);
  auto sets = enumerate_multiplicative_sets(r);
  CHECK(sets.size() > 10);
  for (const auto& s : sets) {
    CHECK(s.generators().size() <= 2);
    CHECK(closure_set(*r, s.elements()) == s.elements());
  }
  CHECK_THROWS_AS(enumerate_multiplicative_sets(FiniteRing::product(FiniteRing::zn(9), FiniteRing::zn(9))), Error);
}

TEST_CASE("structure properties over the corpus") {
  for (const auto& r : corpus()) {
    INFO(r->expression());
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      auto def = strongly_multiplicative_def(s);
      auto mmc = strongly_multiplicative_mmc(s);
      CHECK(def.holds == mmc.holds);
      CHECK(def.holds);  // every finite multiplicative set
      CHECK(def.witness == mmc.witness);
      CHECK(jacobson_disjoint(s));
      if (r->is_indecomposable()) CHECK(s.subset_of_units());
      auto sat = saturation(s);
      CHECK(sat.elements == brute_saturation(*r, s.elements()));
      CHECK(sat.elements == saturation_via_primes(s));
      REQUIRE(sat.form.has_value());
      CHECK(sat.elements == saturation_from_form(*r, *sat.form));
      CHECK(strongly_multiplicative_def(from_elements(r, sat.elements)).holds);
      if (s.subset_of_units()) CHECK(sat.elements == r->units());
    }
  }
}

TEST_CASE("product sets and prime complements") {
  auto z6 = FiniteRing::zn(6);
  std::vector<Elem> g3{e(3)}, g4{e(4)};
  auto s3 = close(z6, g3);
  auto s4 = close(z6, g4);
  CHECK_THROWS_AS(product_set(s3, s4), Error);
  CHECK(product_set(s3, s3) == s3);
  CHECK(from_prime_complement(principal_ideal(z6, e(2))).elements() == ElemSet{e(1), e(3), e(5)});
  CHECK(from_prime_complement(principal_ideal(z6, e(3))).elements() == ElemSet{e(1), e(2), e(4), e(5)});
  auto z5 = FiniteRing::zn(5);
  CHECK(from_prime_complement(zero_ideal(z5)).size() == 4);
  try {
    from_prime_complement(zero_ideal(z6));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("transport constructions") {
  auto z4 = FiniteRing::zn(4);
  auto q = FiniteRing::quotient(z4, ElemSet{e(0), e(2)});
  std::vector<Elem> g3{e(3)};
  auto img = image_under(RingHom::quotient_map(q), close(z4, g3));
  CHECK(img.elements() == ElemSet{q->one()});

  auto z2 = FiniteRing::zn(2);
  auto t = FiniteRing::trivial_extension(z2, RingModule(RingHom::identity(z2)));
  auto lifted = lift_to_trivext(t, close(z2, {}), ElemSet{e(0)});
  CHECK(lifted.elements() == ElemSet{t->pair(e(1), e(0))});

  auto z6 = FiniteRing::zn(6);
  auto p = FiniteRing::product(z6, z2);
  auto pw = product_with(p, close(z6, std::vector<Elem>{e(3)}), close(z2, {}));
  CHECK(pw.elements() == ElemSet{p->pair(e(1), e(1)), p->pair(e(3), e(1))});

  auto am = FiniteRing::amalgamation(RingHom::identity(z4), ElemSet{e(0), e(2)});
  auto s = lift_to_amalgam(am, close(z4, g3));
  CHECK(s.elements() == ElemSet{am->pair(e(1), e(1)), am->pair(e(3), e(3))});

  auto z8 = FiniteRing::zn(8);
  auto red = RingHom::from_assignments(z8, z4, {});
  CHECK_THROWS_AS(image_under(RingHom::from_assignments(z4, FiniteRing::product(z2, z2), {}), close(z4, {})), Error);
  CHECK(image_under(red, close(z8, std::vector<Elem>{e(5)})).elements() == ElemSet{e(1)});
}

#include "doctest.h"

#include "smul/localization.hpp"

using namespace smul;

namespace {

Elem e(std::size_t i) { return elem(i); }

std::vector<RingPtr> corpus() {
  auto z2 = FiniteRing::zn(2);
  auto z3 = FiniteRing::zn(3);
  auto z4 = FiniteRing::zn(4);
  std::vector<RingPtr> out;
  for (std::size_t n : {2, 4, 6, 8, 9, 10, 12, 18}) out.push_back(FiniteRing::zn(n));
  out.push_back(FiniteRing::boolean(3));
  out.push_back(FiniteRing::product(z2, z4));
  out.push_back(FiniteRing::product(z4, z3));
  out.push_back(FiniteRing::trivial_extension(z2, RingModule(RingHom::identity(z2))));
  return out;
}

}  // namespace

TEST_CASE("localizing Z6") {
  auto z6 = FiniteRing::zn(6);
  auto l = localize(close(z6, std::vector<Elem>{e(3)}));
  CHECK(l.idempotent() == e(3));
  CHECK(l.ring()->size() == 2);
  CHECK(l.format(l.ring()->all()) == "{0,3}");
  CHECK(localize_ideal(l, principal_ideal(z6, e(2))).is_zero());
  CHECK(localize_ideal(l, principal_ideal(z6, e(3))).is_unit());
  CHECK(localize_ideal(l, unit_ideal(z6)).is_unit());
  auto contracted = contract(l, localize_ideal(l, zero_ideal(z6)));
  CHECK(contracted.elements() == ElemSet{e(0), e(2), e(4)});

  auto units = localize(close(z6, std::vector<Elem>{e(5)}));
  CHECK(units.ring()->size() == 6);
  auto z4 = FiniteRing::zn(4);
  CHECK(localize(close(z4, std::vector<Elem>{e(3)})).ring()->size() == 4);
}

TEST_CASE("localized multiplicative sets") {
  auto z6 = FiniteRing::zn(6);
  auto s = close(z6, std::vector<Elem>{e(3)});
  auto l = localize(s);
  auto image = localized_mulset(l, s);
  CHECK(image.elements() == ElemSet{l.ring()->one()});
  CHECK(l.embed(l.ring()->one()) == e(3));
  auto trivial = localize(close(z6, {}));
  auto t = close(z6, std::vector<Elem>{e(4)});
  CHECK(localized_mulset(trivial, t).size() == t.size());
}

TEST_CASE("colon example") {
  auto z6 = FiniteRing::zn(6);
  auto l = localize(close(z6, std::vector<Elem>{e(3)}));
  auto cert = check_colon_commutes(l, zero_ideal(z6), principal_ideal(z6, e(2)));
  CHECK(cert.passed());
  CHECK(localize_ideal(l, colon(zero_ideal(z6), principal_ideal(z6, e(2)))).is_unit());
}

TEST_CASE("localization identities over the corpus") {
  for (const auto& r : corpus()) {
    INFO(r->expression());
    const auto ideals = all_ideals(r);
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      auto l = localize(s);
      CHECK(l.projection().is_surjective());
      for (Elem x : s.elements()) CHECK(l.ring()->is_unit(l.project(x)));
      if (r->size() <= 12) CHECK(check_against_fractions(l).passed());
      for (const auto& i : ideals) {
        CHECK(check_contraction(l, i).passed());
        for (const auto& j : ideals) {
          std::vector<Ideal> fam{i, j};
          CHECK(check_intersection_commutes(l, fam).passed());
          CHECK(check_colon_commutes(l, i, j).passed());
        }
      }
      // Localizing again at the image of S changes nothing.
      auto again = localize(localized_mulset(l, s));
      CHECK(again.ring()->size() == l.ring()->size());
    }
  }
}

#include "doctest.h"

#include <numeric>

#include "smul/finite_ring.hpp"
#include "smul/ideal.hpp"

using namespace smul;

namespace {

Elem e(std::size_t i) { return elem(i); }

// Plain modular arithmetic, independent of the ring tables.
ElemSet zn_units_oracle(std::size_t n) {
  ElemSet out;
  for (std::size_t a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1) out.insert(e(a));
  return out;
}

ElemSet zn_idempotents_oracle(std::size_t n) {
  ElemSet out;
  for (std::size_t a = 0; a < n; ++a)
    if ((a * a) % n == a) out.insert(e(a));
  return out;
}

RingModule self_module(const RingPtr& r) { return RingModule(RingHom::identity(r)); }

std::vector<RingPtr> small_rings() {
  auto z2 = FiniteRing::zn(2);
  auto z3 = FiniteRing::zn(3);
  auto z4 = FiniteRing::zn(4);
  auto z2z2 = FiniteRing::product(z2, z2);
  std::vector<RingPtr> out;
  for (std::size_t n : {2, 3, 4, 6, 8, 9, 12}) out.push_back(FiniteRing::zn(n));
  out.push_back(FiniteRing::boolean(3));
  out.push_back(FiniteRing::product(z4, z3));
  out.push_back(FiniteRing::product(z2, FiniteRing::product(z2, z4)));
  out.push_back(FiniteRing::quotient(FiniteRing::zn(12), ElemSet{e(0), e(4), e(8)}));
  out.push_back(FiniteRing::trivial_extension(z4, self_module(z4)));
  out.push_back(FiniteRing::trivial_extension(z2, RingModule(RingHom::from_assignments(z2, z2z2, {}))));
  auto quot = FiniteRing::quotient(z4, ElemSet{e(0), e(2)});
  out.push_back(FiniteRing::amalgamation(RingHom::quotient_map(quot), quot->all()));
  out.push_back(FiniteRing::amalgamation(RingHom::identity(z4), ElemSet{e(0), e(2)}));
  return out;
}

}  // namespace

TEST_CASE("divisibility in Z6") {
  auto z6 = FiniteRing::zn(6);
  CHECK(z6->divides(e(2), e(4)));
  CHECK_FALSE(z6->divides(e(2), e(3)));
  CHECK(z6->principal(e(2)) == ElemSet{e(0), e(2), e(4)});
}

TEST_CASE("units, idempotents and regular elements of Zn match modular arithmetic") {
  for (std::size_t n = 2; n <= 30; ++n) {
    auto r = FiniteRing::zn(n);
    CHECK(r->units() == zn_units_oracle(n));
    CHECK(r->idempotents() == zn_idempotents_oracle(n));
    CHECK(r->regular_elements() == zn_units_oracle(n));
    CHECK(r->is_total_quotient_ring());
  }
  CHECK(FiniteRing::zn(6)->units() == ElemSet{e(1), e(5)});
  CHECK(FiniteRing::zn(4)->units() == ElemSet{e(1), e(3)});
  CHECK(FiniteRing::zn(6)->idempotents() == ElemSet{e(0), e(1), e(3), e(4)});
  CHECK(FiniteRing::zn(4)->idempotents() == ElemSet{e(0), e(1)});
  CHECK(FiniteRing::zn(7)->idempotents() == ElemSet{e(0), e(1)});
}

TEST_CASE("idempotent_of") {
  auto z6 = FiniteRing::zn(6);
  CHECK(z6->idempotent_of(e(3)) == e(3));
  CHECK(z6->idempotent_of(e(4)) == e(4));
  CHECK(z6->idempotent_of(e(2)) == e(4));
  CHECK(z6->idempotent_of(e(5)) == e(1));
  auto z4 = FiniteRing::zn(4);
  CHECK_THROWS_AS(z4->idempotent_of(e(2)), Error);
  try {
    z4->idempotent_of(e(2));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NoIdempotent);
  }
}

TEST_CASE("idempotent_of squares to itself and generates Rt") {
  for (const auto& r : small_rings()) {
    for (Elem t : r->elements()) {
      if (r->principal(t) != r->principal(r->mul(t, t))) {
        CHECK_THROWS_AS(r->idempotent_of(t), Error);
        continue;
      }
      const Elem f = r->idempotent_of(t);
      CHECK(r->mul(f, f) == f);
      CHECK(r->principal(f) == r->principal(t));
    }
  }
}

TEST_CASE("constructed rings satisfy the ring axioms") {
  for (const auto& r : small_rings()) {
    INFO(r->expression());
    CHECK(r->verify_axioms());
    CHECK(r->is_total_quotient_ring());
  }
}

TEST_CASE("divisibility is reflexive and transitive") {
  for (const auto& r : small_rings()) {
    for (Elem a : r->elements()) {
      CHECK(r->divides(a, a));
      for (Elem b : r->elements())
        if (r->divides(a, b))
          for (Elem c : r->elements())
            if (r->divides(b, c)) CHECK(r->divides(a, c));
    }
  }
}

TEST_CASE("trivial extension multiplication") {
  auto z2 = FiniteRing::zn(2);
  auto t = FiniteRing::trivial_extension(z2, self_module(z2));
  const Elem x = t->pair(e(1), e(1));
  CHECK(t->mul(x, x) == t->pair(e(1), e(0)));
  CHECK(t->format(t->mul(x, x)) == "(1,0)");
  CHECK(t->size() == 4);
}

TEST_CASE("Z2 x Z3 is isomorphic to Z6") {
  auto p = FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3));
  auto iso = isomorphism_from_zn(p);
  REQUIRE(iso.has_value());
  CHECK(iso->is_surjective());
  CHECK_FALSE(isomorphism_from_zn(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2))).has_value());
}

TEST_CASE("homomorphism guard") {
  auto z2 = FiniteRing::zn(2);
  auto z4 = FiniteRing::zn(4);
  // No unital map Z2 -> Z4 exists: 1 + 1 = 0 must map to 2.
  CHECK_THROWS_AS(RingHom::from_assignments(z2, z4, {}), Error);
  try {
    std::vector<Elem> table{e(0), e(1)};
    RingHom::from_table(z2, z4, table);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAHomomorphism);
  }
  // Z4 -> Z2 reduction is fine.
  auto red = RingHom::from_assignments(z4, z2, {});
  CHECK(red(e(3)) == e(1));
}

TEST_CASE("quotient carrier size is |R|/|I|") {
  for (std::size_t n : {4, 6, 8, 12, 18, 24}) {
    auto r = FiniteRing::zn(n);
    for (const auto& i : all_ideals(r)) {
      if (i.is_unit()) {
        CHECK_THROWS_AS(FiniteRing::quotient(r, i.elements()), Error);
        continue;
      }
      auto q = FiniteRing::quotient(r, i.elements());
      CHECK(q->size() * i.size() == r->size());
      CHECK(q->verify_axioms());
    }
  }
  auto z6 = FiniteRing::zn(6);
  CHECK_THROWS_AS(FiniteRing::quotient(z6, ElemSet{e(0), e(2)}), Error);
}

TEST_CASE("amalgamation carrier and guards") {
  auto z4 = FiniteRing::zn(4);
  auto a = FiniteRing::amalgamation(RingHom::identity(z4), ElemSet{e(0), e(2)});
  // {(a, a + j) : j in {0,2}}
  CHECK(a->size() == 8);
  CHECK(a->verify_axioms());
  CHECK(a->format(a->one()) == "(1,1)");
  CHECK_THROWS_AS(FiniteRing::amalgamation(RingHom::identity(z4), ElemSet{e(0), e(1)}), Error);
}

TEST_CASE("modules") {
  auto z4 = FiniteRing::zn(4);
  auto z2 = FiniteRing::zn(2);
  RingModule m(RingHom::from_assignments(z4, z2, {}));
  CHECK(m.verify_axioms());
  CHECK(m.all_submodules().size() == 2);
  RingModule self = self_module(z4);
  CHECK(self.all_submodules().size() == 3);
}

TEST_CASE("expressions and formatting") {
  auto z4 = FiniteRing::zn(4);
  auto z9 = FiniteRing::zn(9);
  auto p = FiniteRing::product(z4, z9);
  CHECK(p->expression() == "Zn 4 x Zn 9");
  CHECK(p->format(p->pair(e(1), e(0))) == "(1,0)");
  auto b = FiniteRing::boolean(3);
  CHECK(b->format(b->one()) == "(1,1,1)");
  CHECK(b->size() == 8);
  auto q = FiniteRing::quotient(FiniteRing::zn(12), ElemSet{e(0), e(4), e(8)});
  CHECK(q->expression() == "Zn 12 / (4)");
  CHECK(q->format(q->coset(e(7))) == "[3]");
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(FiniteRing::product(FiniteRing::zn(30), FiniteRing::zn(30)), Error);
  CHECK_THROWS_AS(FiniteRing::zn(1), Error);
}

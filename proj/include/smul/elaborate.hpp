#pragma once

#include <string>
#include <variant>

#include "smul/cxlab.hpp"
#include "smul/dsl.hpp"
#include "smul/ideal.hpp"
#include "smul/mulset.hpp"
#include "smul/zint.hpp"

/// Turns parsed expressions into library objects.
namespace smul::cli {

struct ZRing {};
struct ZZRing {};
struct QPolyRing {
  int index_bound = cxlab::kDefaultIndexBound;
};

using EffectiveRing = std::variant<RingPtr, ZRing, ZZRing, QPolyRing>;

/// TooLarge when a finite ring (or an intermediate one) exceeds `budget`
/// elements. Infinite rings: "Z", "Z x Z", "qpoly N".
EffectiveRing elaborate(const dsl::RingExpr& e, std::size_t budget = kMaxRingSize);
/// InvalidArgument unless the expression denotes a finite ring.
RingPtr elaborate_finite(const dsl::RingExpr& e, std::size_t budget = kMaxRingSize);
std::string describe(const EffectiveRing& r);

Elem eval_elem(const RingPtr& ring, const dsl::ElemExpr& e);
ElemSet eval_ideal(const RingPtr& ring, const dsl::ElemList& gens);
MultiplicativeSet eval_set(const RingPtr& ring, const dsl::SetExpr& s);

zint::Int eval_int(const dsl::ElemExpr& e);
std::pair<zint::Int, zint::Int> eval_int_pair(const dsl::ElemExpr& e);
/// gcd of the generators.
zint::PrincipalIdeal eval_z_ideal(const dsl::ElemList& gens);
/// Componentwise gcd of pairs.
zint::ProductIdeal eval_zz_ideal(const dsl::ElemList& gens);
zint::ZSet eval_z_set(const dsl::SetExpr& s);
/// Only products S1 x S2 (or "units" / "reg", taken componentwise).
zint::ProductSet eval_zz_set(const dsl::SetExpr& s);

cxlab::QPolyNF eval_qpoly(const dsl::ElemExpr& e, int index_bound);

struct Divisibility {
  bool divides = false;
  /// A quotient c with a c = b, when one is produced.
  std::string quotient;
};
/// a | b in any supported ring. Over qpoly only a = 2^k is decided
/// (UnsupportedDivisibility otherwise).
Divisibility divides(const EffectiveRing& ring, const dsl::ElemExpr& a, const dsl::ElemExpr& b);

}  // namespace smul::cli

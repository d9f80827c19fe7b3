#pragma once

#include <span>
#include <string>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/ideal.hpp"
#include "smul/mulset.hpp"

namespace smul {

/// S^{-1}R for a finite ring, realized as the corner ring eR where e is the
/// idempotent with Re = Rt for the maximal multiple t of S. The fraction a/s
/// corresponds to e a (e s)^{-1}.
class LocalizedRing {
 public:
  explicit LocalizedRing(MultiplicativeSet s);

  const RingPtr& base() const noexcept { return set_.ring(); }
  const MultiplicativeSet& set() const noexcept { return set_; }
  Elem t() const noexcept { return t_; }
  Elem idempotent() const noexcept { return e_; }
  /// The ring eR; its elements are indexed independently of the base ring.
  const RingPtr& ring() const noexcept { return corner_; }
  /// r -> e r, as a ring map R -> eR.
  const RingHom& projection() const noexcept { return projection_; }

  Elem project(Elem r) const { return projection_(r); }
  /// The base-ring element underlying a corner element.
  Elem embed(Elem x) const;
  /// a/s in eR.
  Elem fraction(Elem a, Elem s) const;
  /// Corner element rendered through the base ring ("3" rather than "1").
  std::string format(Elem x) const;
  std::string format(const ElemSet& xs) const;

 private:
  MultiplicativeSet set_;
  Elem t_;
  Elem e_;
  RingPtr corner_;
  RingHom projection_;
};

LocalizedRing localize(const MultiplicativeSet& s);

/// S^{-1}I as the ideal eI of eR.
Ideal localize_ideal(const LocalizedRing& l, const Ideal& i);
/// {r in R : e r in J} for an ideal J of eR.
Ideal contract(const LocalizedRing& l, const Ideal& j);

/// S^{-1}(J_1 ∩ ... ∩ J_k) = S^{-1}J_1 ∩ ... ∩ S^{-1}J_k.
Certificate check_intersection_commutes(const LocalizedRing& l, std::span<const Ideal> family);
/// S^{-1}(I:J) = (S^{-1}I : S^{-1}J).
Certificate check_colon_commutes(const LocalizedRing& l, const Ideal& i, const Ideal& j);
/// S^{-1}I ∩ R = (I : t).
Certificate check_contraction(const LocalizedRing& l, const Ideal& i);

/// S^{-1}T = {t/s} as a multiplicative set of eR; ContainsZero when 0 lies in it.
MultiplicativeSet localized_mulset(const LocalizedRing& l, const MultiplicativeSet& t);

/// Builds S^{-1}R from formal fractions (a, s) under (a,s) ~ (b,u) iff
/// v(au - bs) = 0 for some v in S, and checks that a/s -> e a (e s)^{-1} is a
/// well-defined ring isomorphism onto eR. Intended for |R| <= 12.
Certificate check_against_fractions(const LocalizedRing& l);

}  // namespace smul

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smul/finite_ring.hpp"
#include "smul/ideal.hpp"

namespace smul {

/// A multiplicative subset of a finite ring: contains 1, avoids 0, closed
/// under products. The closure is computed eagerly.
class MultiplicativeSet {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const ElemSet& elements() const noexcept { return elements_; }
  bool contains(Elem a) const { return elements_.contains(a); }
  std::size_t size() const { return elements_.size(); }
  /// t in S divisible by every s in S (smallest index), when it exists.
  const std::optional<Elem>& max_multiple() const noexcept { return max_multiple_; }
  bool subset_of_units() const { return elements_.subset_of(ring_->units()); }

  /// "<g1, g2>" in the ring's element syntax ("<1>" for the trivial set).
  std::string format() const;

  friend bool operator==(const MultiplicativeSet& a, const MultiplicativeSet& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  MultiplicativeSet(RingPtr ring, std::vector<Elem> generators, ElemSet elements);
  friend MultiplicativeSet close(RingPtr ring, std::span<const Elem> generators);
  friend MultiplicativeSet from_elements(RingPtr ring, const ElemSet& elements);

  RingPtr ring_;
  std::vector<Elem> generators_;
  ElemSet elements_;
  std::optional<Elem> max_multiple_;
};

/// Multiplicative closure of generators together with 1. ContainsZero when 0 is reached.
MultiplicativeSet close(RingPtr ring, std::span<const Elem> generators);
/// Wraps an explicit set; InvalidArgument unless it contains 1 and is
/// closed, ContainsZero if it contains 0.
MultiplicativeSet from_elements(RingPtr ring, const ElemSet& elements);
ElemSet closure_set(const FiniteRing& r, const ElemSet& seed);

struct StrongTest {
  bool holds = false;
  std::optional<Elem> witness;
  /// For the definitional test: the intersection of all sR.
  ElemSet intersection;
};

/// (intersection of sR over s in S) meets S. Checking the whole family
/// suffices since every subfamily has a larger intersection.
StrongTest strongly_multiplicative_def(const MultiplicativeSet& s);
/// Some t in S with s | t for all s in S.
StrongTest strongly_multiplicative_mmc(const MultiplicativeSet& s);

enum class SaturationKind { Units, UnitsTimesFactor, UnitsTimesUnits };
/// Which factor carries the units when the ring is a literal product A x B
/// and e = (1,0) (Left) or (0,1) (Right); otherwise the split is the Peirce
/// decomposition Re x R(1-e) with the units on Re.
enum class FactorSide { Left, Right, Peirce };

struct SaturationForm {
  SaturationKind kind;
  Elem idempotent;
  FactorSide side = FactorSide::Peirce;
};

struct Saturation {
  ElemSet elements;
  /// Present iff S is strongly multiplicative.
  std::optional<SaturationForm> form;
};

std::string_view to_string(SaturationKind k) noexcept;
std::string_view to_string(FactorSide s) noexcept;

/// {r : rx in S for some x}, with the structural classification.
Saturation saturation(const MultiplicativeSet& s);
/// The set a classification describes, computed from the form alone.
ElemSet saturation_from_form(const FiniteRing& r, const SaturationForm& form);
/// R minus the union of the primes disjoint from S.
ElemSet saturation_via_primes(const MultiplicativeSet& s);

/// Closure of {st}; ContainsZero if 0 lies in ST.
MultiplicativeSet product_set(const MultiplicativeSet& s, const MultiplicativeSet& t);
/// R - P for a prime P; NotPrime otherwise.
MultiplicativeSet from_prime_complement(const Ideal& p);

struct EnumerationBudget {
  std::size_t full_scan_limit = 16;
  std::size_t two_generator_limit = 64;
};

/// All multiplicative sets when |R| <= full_scan_limit, all sets generated by
/// at most two elements when |R| <= two_generator_limit, TooLarge beyond.
/// Sorted by (cardinality, element list).
std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring,
                                                             EnumerationBudget budget = {});

bool jacobson_disjoint(const MultiplicativeSet& s);
/// f(S) for a surjective f; NotSurjective / ContainsZero.
MultiplicativeSet image_under(const RingHom& f, const MultiplicativeSet& s);
/// S1 x S2 inside `product` (whose factors must be the rings of S1 and S2).
MultiplicativeSet product_with(const RingPtr& product, const MultiplicativeSet& s1, const MultiplicativeSet& s2);
/// S ∝ N = {(s, n)} inside a trivial extension; N a submodule.
MultiplicativeSet lift_to_trivext(const RingPtr& trivext, const MultiplicativeSet& s, const ElemSet& submodule);
/// {(s, f(s))} inside an amalgamation.
MultiplicativeSet lift_to_amalgam(const RingPtr& amalgam, const MultiplicativeSet& s);

}  // namespace smul

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/ideal.hpp"
#include "smul/mulset.hpp"

namespace smul {

enum class SPrimeMode { Definitional, ColonPrime };
std::string_view to_string(SPrimeMode m) noexcept;

struct SPrimeWitness {
  Ideal ideal;
  Elem s;
  SPrimeMode mode;
};

/// Every s in R with: ab in P implies sa in P or sb in P (for all a, b).
ElemSet s_prime_witnesses_definitional(const FiniteRing& r, const ElemSet& p);
/// s_prime_witnesses_definitional for every ideal of r.lattice(), by lattice
/// index; computed once per ring.
const std::vector<ElemSet>& definitional_witness_table(const FiniteRing& r);
/// Every s in R with (P : s) a prime ideal.
ElemSet s_prime_witnesses_colon(const FiniteRing& r, const ElemSet& p);

/// Smallest-index witness s in S, or nullopt. NotDisjoint if P meets S.
std::optional<SPrimeWitness> is_s_prime(const Ideal& p, const MultiplicativeSet& s,
                                        SPrimeMode mode = SPrimeMode::Definitional);

/// Decided through the complement R - P (NotPrime unless P is prime).
bool is_strongly_prime(const Ideal& p);
/// The defining property restricted to principal families: whenever the
/// intersection of a_i R lies in P some a_i lies in P. Scans every subset
/// of R - P, so only for |R| <= 16 (TooLarge otherwise).
bool is_strongly_prime_by_principal_families(const Ideal& p);

/// The equivalent conditions characterizing strongly zero-dimensional rings,
/// each evaluated by its own route on a finite ring.
struct ZeroDimensionalReport {
  /// (1) every prime is strongly prime: intersection of ideals inside P forces one inside P
  bool every_prime_strongly_prime = false;
  /// (2) every prime is maximal and every maximal ideal is strongly prime
  bool primes_maximal_and_maximals_strongly_prime = false;
  /// (3) (1) plus: I + J_i = R for all i implies I + (meet J_i) = R
  bool comaximal_meet_property = false;
  /// (4) principal-family property for every prime
  bool principal_family_property = false;
  /// (5) zero-dimensional and finitely many maximal ideals
  bool zero_dimensional_quasi_semilocal = false;
  /// (6) R - P is strongly multiplicative for every prime P
  bool prime_complements_strongly_multiplicative = false;

  std::array<bool, 6> conditions() const {
    return {every_prime_strongly_prime, primes_maximal_and_maximals_strongly_prime, comaximal_meet_property,
            principal_family_property, zero_dimensional_quasi_semilocal,
            prime_complements_strongly_multiplicative};
  }
  bool all_agree() const;
};

ZeroDimensionalReport zero_dimensional_report(const RingPtr& ring);
bool is_strongly_zero_dimensional(const RingPtr& ring);

/// S-prime ideals containing `over` (zero ideal by default) that are minimal
/// among such, ordered by (cardinality, element list).
std::vector<Ideal> s_minimal_primes(const MultiplicativeSet& s, const std::optional<Ideal>& over = std::nullopt);

/// A pair a, b outside P with ab in P, if P is not prime.
std::optional<std::pair<Elem, Elem>> non_prime_witness(const Ideal& p);

/// sP = P and P ⊆ ∩ sR for each S-minimal prime; non-primeness when S is not
/// inside u(R), otherwise every S-prime ideal is prime and every S-minimal
/// prime is a minimal prime. Also the relative version over every ideal I
/// disjoint from S.
Certificate check_s_minimal_theorem(const MultiplicativeSet& s);

struct Algorithm1Entry {
  Ideal ideal;
  std::pair<Elem, Elem> witness;  // ab in P, a and b outside P
};

/// Builds the S-minimal primes of R1 x R2 from the minimal primes of the
/// factor that is not inverted by the saturation. NotApplicable when a factor
/// is a field, S ⊆ u(R), or the saturation is not u(R1) x R2 / R1 x u(R2).
std::vector<Algorithm1Entry> algorithm1(const MultiplicativeSet& s);

struct KrullResult {
  Ideal found;
  bool is_maximal_ideal = false;
  /// I = chain[0] ⊂ chain[1] ⊂ ... ⊂ found.
  std::vector<Ideal> chain;
  /// Every maximal element of {J ⊇ I : J ∩ S = ∅}.
  std::vector<Ideal> omega_maximal;
};

/// NotDisjoint if I meets S.
KrullResult strong_krull(const MultiplicativeSet& s, const Ideal& i);

/// For an S-prime P and s in S: each ideal of P ⊇ sP ⊇ s²P ⊇ ... is S-prime
/// and so is their intersection (the chain stabilizes in a finite ring).
Certificate check_descending_chain(const Ideal& p, const MultiplicativeSet& s, Elem multiplier);

}  // namespace smul

#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "smul/finite_ring.hpp"

namespace smul {

/// Upper bound on the number of ideals a lattice may hold before TooLarge.
inline constexpr std::size_t kMaxIdeals = 2048;

// Set-level primitives. These work on raw element sets of one ring and are
// what the lattice and the audit use in inner loops.
ElemSet span_set(const FiniteRing& r, std::span<const Elem> generators);
ElemSet sum_set(const FiniteRing& r, const ElemSet& a, const ElemSet& b);
/// {x : x g in a for every g in gens}.
ElemSet colon_by(const FiniteRing& r, const ElemSet& a, std::span<const Elem> gens);
ElemSet colon_set(const FiniteRing& r, const ElemSet& a, const ElemSet& b);
/// sI = {s x : x in I}.
ElemSet scale_set(const FiniteRing& r, Elem s, const ElemSet& a);
bool is_ideal_set(const FiniteRing& r, const ElemSet& a);
bool is_prime_set(const FiniteRing& r, const ElemSet& a);
bool is_maximal_set(const FiniteRing& r, const ElemSet& a);
/// Greedy generating list in increasing index order.
std::vector<Elem> ideal_generators(const FiniteRing& r, const ElemSet& a);

/// An ideal of a finite ring, stored as its full element set.
class Ideal {
 public:
  /// Unchecked; use checked_ideal for user input.
  Ideal(RingPtr ring, ElemSet elements) : ring_(std::move(ring)), elements_(elements) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const ElemSet& elements() const noexcept { return elements_; }
  bool contains(Elem a) const { return elements_.contains(a); }
  std::size_t size() const { return elements_.size(); }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_unit() const { return elements_.contains(ring_->one()); }
  bool subset_of(const Ideal& o) const { return elements_.subset_of(o.elements_); }

  std::vector<Elem> generators() const { return ideal_generators(*ring_, elements_); }
  /// "(g1, g2)" in the ring's element syntax.
  std::string format() const;
  /// "{a,b,c}".
  std::string format_elements() const { return ring_->format(elements_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  ElemSet elements_;
};

/// Throws NotAnIdeal unless the set contains 0 and is closed under + and R-multiples.
Ideal checked_ideal(RingPtr ring, const ElemSet& elements);
Ideal span(RingPtr ring, std::span<const Elem> generators);
Ideal principal_ideal(RingPtr ring, Elem a);
Ideal zero_ideal(RingPtr ring);
Ideal unit_ideal(RingPtr ring);

Ideal intersect(const Ideal& a, const Ideal& b);
/// The empty family intersects to R; `ring` is needed for that case.
Ideal intersect_family(const RingPtr& ring, std::span<const Ideal> family);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Ideal& b);
Ideal scale(Elem s, const Ideal& a);

bool is_prime(const Ideal& p);
bool is_maximal(const Ideal& m);

/// All ideals, ordered by (cardinality, element list).
std::vector<Ideal> all_ideals(const RingPtr& ring);
std::vector<Ideal> prime_ideals(const RingPtr& ring);
std::vector<Ideal> maximal_ideals(const RingPtr& ring);
std::vector<Ideal> minimal_primes(const RingPtr& ring);
Ideal jacobson(const RingPtr& ring);

/// Complete ideal lattice of a finite ring with meet/join/colon tables.
/// Built once per ring through FiniteRing::lattice().
class IdealLattice {
 public:
  explicit IdealLattice(const FiniteRing& ring);

  std::size_t size() const noexcept { return ideals_.size(); }
  const std::vector<ElemSet>& ideals() const noexcept { return ideals_; }
  const ElemSet& operator[](std::size_t i) const { return ideals_[i]; }
  std::optional<std::size_t> index_of(const ElemSet& s) const;
  /// Index of aR.
  std::size_t principal_index(Elem a) const { return principal_index_[idx(a)]; }

  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t colon(std::size_t i, std::size_t j) const { return colon_[i * size() + j]; }
  bool is_prime(std::size_t i) const { return prime_[i]; }
  bool is_maximal(std::size_t i) const { return maximal_[i]; }

  std::vector<std::size_t> primes() const;
  std::vector<std::size_t> maximals() const;
  std::size_t zero_index() const noexcept { return 0; }
  std::size_t unit_index() const noexcept { return size() - 1; }
  const ElemSet& jacobson() const noexcept { return jacobson_; }

 private:
  std::vector<ElemSet> ideals_;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index_;
  std::vector<std::size_t> principal_index_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> colon_;
  std::vector<bool> prime_;
  std::vector<bool> maximal_;
  ElemSet jacobson_;
};

}  // namespace smul

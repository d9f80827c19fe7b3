#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "smul/elem_set.hpp"
#include "smul/error.hpp"

namespace smul {

class FiniteRing;
class IdealLattice;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A verified unital ring homomorphism between finite rings, stored as a table.
class RingHom {
 public:
  /// Checks additivity, multiplicativity and 1 -> 1; throws NotAHomomorphism.
  static RingHom from_table(RingPtr source, RingPtr target, std::vector<Elem> image);

  /// Extends the assignments (plus 0 -> 0 and 1 -> 1) by closing under the
  /// ring operations. Throws NotAHomomorphism on a conflict or when the
  /// assignments do not pin down the whole source.
  static RingHom from_assignments(RingPtr source, RingPtr target,
                                  std::span<const std::pair<Elem, Elem>> assignments);

  static RingHom identity(RingPtr ring);
  static RingHom projection(RingPtr product, int side);
  static RingHom quotient_map(RingPtr quotient);

  Elem operator()(Elem x) const { return image_[idx(x)]; }
  const RingPtr& source() const noexcept { return source_; }
  const RingPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return image_; }

  bool is_surjective() const;
  ElemSet image_of(const ElemSet& xs) const;

  /// Small list of assignments that regenerates this map via from_assignments.
  std::vector<std::pair<Elem, Elem>> generating_assignments() const;

 private:
  RingHom(RingPtr source, RingPtr target, std::vector<Elem> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

  RingPtr source_;
  RingPtr target_;
  std::vector<Elem> image_;
};

/// The additive group of a finite ring B viewed as an R-module through a ring
/// map R -> B (r.m := f(r) m). Covers R itself, R/I, and restriction of scalars.
class RingModule {
 public:
  explicit RingModule(RingHom action) : action_(std::move(action)) {}

  const RingPtr& scalars() const noexcept { return action_.source(); }
  const RingPtr& carrier() const noexcept { return action_.target(); }
  const RingHom& action() const noexcept { return action_; }

  std::size_t size() const;
  Elem add(Elem m, Elem n) const;
  Elem act(Elem r, Elem m) const;

  ElemSet span(std::span<const Elem> generators) const;
  bool is_submodule(const ElemSet& xs) const;
  /// Every submodule, ordered by (cardinality, element list).
  std::vector<ElemSet> all_submodules() const;

  /// Exhaustive module-axiom check on all enumerated pairs.
  bool verify_axioms() const;

 private:
  RingHom action_;
};

struct ZnNode {
  std::size_t modulus;
};
struct BooleanNode {
  std::size_t width;
};
struct ProductNode {
  RingPtr left;
  RingPtr right;
};
struct QuotientNode {
  RingPtr base;
  ElemSet ideal;
  std::vector<Elem> representative;  // coset index -> smallest base element
  std::vector<Elem> coset_of;        // base element -> coset index
};
struct TrivExtNode {
  RingPtr base;
  RingModule module;
};
struct AmalgamNode {
  RingHom map;  // A -> B
  ElemSet ideal;  // ideal J of B
  std::vector<std::pair<Elem, Elem>> pairs;  // carrier, ordered lexicographically
  std::vector<int> index_of_pair;            // a*|B|+b -> index or -1
};
struct CornerNode {
  RingPtr base;
  Elem idempotent;
  std::vector<Elem> members;  // eR in increasing base order
};

using Descriptor =
    std::variant<ZnNode, BooleanNode, ProductNode, QuotientNode, TrivExtNode, AmalgamNode, CornerNode>;

/// A finite commutative ring with identity, built from a constructor tree.
/// Arithmetic is computed compositionally from the children once and memoized
/// in tables; values are immutable after construction.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
  struct Key {};

 public:
  static RingPtr zn(std::size_t n);
  /// Boolean ring on k atoms, realized as Z2^k (xor / and).
  static RingPtr boolean(std::size_t k);
  static RingPtr product(RingPtr left, RingPtr right);
  static RingPtr quotient(RingPtr base, const ElemSet& ideal);
  static RingPtr trivial_extension(RingPtr base, RingModule module);
  static RingPtr amalgamation(RingHom map, const ElemSet& ideal_of_target);
  /// The ring eR with identity e for an idempotent e.
  static RingPtr corner(RingPtr base, Elem idempotent);

  FiniteRing(Key, Descriptor desc, std::size_t n, Elem one, std::vector<Elem> add,
             std::vector<Elem> mul);
  ~FiniteRing();
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return n_; }
  Elem zero() const noexcept { return elem(0); }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const { return add_[idx(a) * n_ + idx(b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a) * n_ + idx(b)]; }
  Elem neg(Elem a) const { return neg_[idx(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// k * 1.
  Elem from_integer(std::int64_t k) const;

  auto elements() const {
    return std::views::iota(std::size_t{0}, n_) | std::views::transform([](std::size_t i) { return elem(i); });
  }
  ElemSet all() const { return ElemSet::all(n_); }

  const Descriptor& descriptor() const noexcept { return desc_; }
  template <class Node>
  const Node* as() const noexcept {
    return std::get_if<Node>(&desc_);
  }

  std::string format(Elem a) const;
  std::string format(const ElemSet& xs) const;
  /// The constructor tree in the CLI ring-expression syntax.
  std::string expression() const;

  /// aR, precomputed for every a.
  const ElemSet& principal(Elem a) const { return principal_[idx(a)]; }
  /// a | b, i.e. b in aR.
  bool divides(Elem a, Elem b) const { return principal(a).contains(b); }

  const ElemSet& units() const noexcept { return units_; }
  const ElemSet& idempotents() const noexcept { return idempotents_; }
  /// Non-zero-divisors.
  const ElemSet& regular_elements() const noexcept { return regular_; }
  bool is_unit(Elem a) const { return units_.contains(a); }
  std::optional<Elem> inverse(Elem a) const;
  bool is_total_quotient_ring() const { return regular_.subset_of(units_); }
  bool is_field() const;
  bool is_indecomposable() const { return idempotents_.size() == 2; }

  /// The idempotent e with Re = Rt; requires Rt = Rt^2 (NoIdempotent otherwise).
  Elem idempotent_of(Elem t) const;

  /// Pair constructors/accessors for product, trivial-extension and
  /// amalgamation rings.
  Elem pair(Elem first, Elem second) const;
  Elem component(Elem a, int side) const;
  /// Coset of a base element in a quotient ring.
  Elem coset(Elem base_element) const;

  /// Exhaustive check of the commutative-ring axioms.
  bool verify_axioms() const;

  /// Memoized ideal lattice, built on first use; safe to call concurrently.
  const IdealLattice& lattice() const;

 private:
  Descriptor desc_;
  std::size_t n_;
  Elem one_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<ElemSet> principal_;
  ElemSet units_;
  ElemSet idempotents_;
  ElemSet regular_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<IdealLattice> lattice_;
};

/// The map Zn -> R, k -> k*1 with n = |R|, when it is bijective (so R is
/// isomorphic to Zn, e.g. by the Chinese remainder theorem).
std::optional<RingHom> isomorphism_from_zn(const RingPtr& ring);

}  // namespace smul

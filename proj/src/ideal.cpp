#include "smul/ideal.hpp"

#include <algorithm>

namespace smul {

namespace {

// Subgroup generated by a subgroup `a` and one more element x:
// the union of the cosets a + kx.
void adjoin(const FiniteRing& r, ElemSet& a, Elem x) {
  if (a.contains(x)) return;
  const ElemSet base = a;
  Elem step = x;
  while (!base.contains(step)) {
    for (Elem y : base) a.insert(r.add(y, step));
    step = r.add(step, x);
  }
}

}  // namespace

ElemSet span_set(const FiniteRing& r, std::span<const Elem> generators) {
  ElemSet out{r.zero()};
  for (Elem g : generators) out = sum_set(r, out, r.principal(g));
  return out;
}

ElemSet sum_set(const FiniteRing& r, const ElemSet& a, const ElemSet& b) {
  if (b.subset_of(a)) return a;
  if (a.subset_of(b)) return b;
  ElemSet out = a;
  for (Elem x : b) adjoin(r, out, x);
  return out;
}

ElemSet colon_by(const FiniteRing& r, const ElemSet& a, std::span<const Elem> gens) {
  ElemSet out;
  for (Elem x : r.elements()) {
    bool ok = true;
    for (Elem g : gens) {
      if (!a.contains(r.mul(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

ElemSet colon_set(const FiniteRing& r, const ElemSet& a, const ElemSet& b) {
  const auto gens = ideal_generators(r, b);
  return colon_by(r, a, gens);
}

ElemSet scale_set(const FiniteRing& r, Elem s, const ElemSet& a) {
  ElemSet out;
  for (Elem x : a) out.insert(r.mul(s, x));
  return out;
}

bool is_ideal_set(const FiniteRing& r, const ElemSet& a) {
  if (!a.contains(r.zero()) || !a.subset_of(r.all())) return false;
  for (Elem x : a) {
    if (!r.principal(x).subset_of(a)) return false;
    for (Elem y : a)
      if (!a.contains(r.add(x, y))) return false;
  }
  return true;
}

bool is_prime_set(const FiniteRing& r, const ElemSet& a) {
  if (a.contains(r.one())) return false;
  const ElemSet outside = r.all() - a;
  for (Elem x : outside)
    for (Elem y : outside)
      if (a.contains(r.mul(x, y))) return false;
  return true;
}

bool is_maximal_set(const FiniteRing& r, const ElemSet& a) {
  if (a.contains(r.one())) return false;
  const ElemSet whole = r.all();
  for (Elem x : whole - a)
    if (sum_set(r, a, r.principal(x)) != whole) return false;
  return true;
}

std::vector<Elem> ideal_generators(const FiniteRing& r, const ElemSet& a) {
  std::vector<Elem> gens;
  ElemSet cur{r.zero()};
  for (Elem x : a) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = sum_set(r, cur, r.principal(x));
    if (cur == a) break;
  }
  return gens;
}

std::string Ideal::format() const {
  std::string out = "(";
  const auto gens = generators();
  if (gens.empty()) return "(" + ring_->format(ring_->zero()) + ")";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring_->format(gens[i]);
  }
  return out + ")";
}

Ideal checked_ideal(RingPtr ring, const ElemSet& elements) {
  if (!is_ideal_set(*ring, elements))
    throw Error(ErrorKind::NotAnIdeal, ring->format(elements) + " is not an ideal of " + ring->expression());
  return Ideal(std::move(ring), elements);
}

Ideal span(RingPtr ring, std::span<const Elem> generators) {
  for (Elem g : generators)
    if (idx(g) >= ring->size()) throw Error(ErrorKind::InvalidArgument, "generator outside the ring");
  const ElemSet s = span_set(*ring, generators);
  return Ideal(std::move(ring), s);
}

Ideal principal_ideal(RingPtr ring, Elem a) {
  const ElemSet s = ring->principal(a);
  return Ideal(std::move(ring), s);
}

Ideal zero_ideal(RingPtr ring) {
  const ElemSet s{ring->zero()};
  return Ideal(std::move(ring), s);
}

Ideal unit_ideal(RingPtr ring) {
  const ElemSet s = ring->all();
  return Ideal(std::move(ring), s);
}

namespace {
void same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::InvalidArgument, "ideals of different rings");
}
}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  return Ideal(a.ring(), a.elements() & b.elements());
}

Ideal intersect_family(const RingPtr& ring, std::span<const Ideal> family) {
  ElemSet out = ring->all();
  for (const auto& i : family) {
    if (i.ring() != ring) throw Error(ErrorKind::InvalidArgument, "ideal of a different ring");
    out &= i.elements();
  }
  return Ideal(ring, out);
}

Ideal sum(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  return Ideal(a.ring(), sum_set(*a.ring(), a.elements(), b.elements()));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  same_ring(a, b);
  return Ideal(a.ring(), colon_set(*a.ring(), a.elements(), b.elements()));
}

Ideal scale(Elem s, const Ideal& a) { return Ideal(a.ring(), scale_set(*a.ring(), s, a.elements())); }

bool is_prime(const Ideal& p) { return is_prime_set(*p.ring(), p.elements()); }
bool is_maximal(const Ideal& m) { return is_maximal_set(*m.ring(), m.elements()); }

namespace {
std::vector<Ideal> wrap(const RingPtr& ring, const IdealLattice& lat, const std::vector<std::size_t>& ids) {
  std::vector<Ideal> out;
  for (auto i : ids) out.emplace_back(ring, lat[i]);
  return out;
}
}  // namespace

std::vector<Ideal> all_ideals(const RingPtr& ring) {
  std::vector<Ideal> out;
  for (const auto& s : ring->lattice().ideals()) out.emplace_back(ring, s);
  return out;
}

std::vector<Ideal> prime_ideals(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  return wrap(ring, lat, lat.primes());
}

std::vector<Ideal> maximal_ideals(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  return wrap(ring, lat, lat.maximals());
}

std::vector<Ideal> minimal_primes(const RingPtr& ring) {
  const auto& lat = ring->lattice();
  const auto primes = lat.primes();
  std::vector<std::size_t> minimal;
  for (auto p : primes) {
    bool is_min = true;
    for (auto q : primes)
      if (q != p && lat[q].subset_of(lat[p])) is_min = false;
    if (is_min) minimal.push_back(p);
  }
  return wrap(ring, lat, minimal);
}

Ideal jacobson(const RingPtr& ring) { return Ideal(ring, ring->lattice().jacobson()); }

// ---------------------------------------------------------------- IdealLattice

IdealLattice::IdealLattice(const FiniteRing& ring) {
  std::vector<ElemSet> found;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> seen;
  auto add = [&](const ElemSet& s) {
    if (seen.emplace(s, found.size()).second) {
      found.push_back(s);
      if (found.size() > kMaxIdeals)
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kMaxIdeals) + " ideals in " +
                                             ring.expression());
    }
  };
  std::vector<ElemSet> principals;
  for (Elem a : ring.elements()) {
    const std::size_t before = found.size();
    add(ring.principal(a));
    if (found.size() > before) principals.push_back(ring.principal(a));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : principals) {
      const ElemSet cur = found[i];
      add(sum_set(ring, cur, p));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  ideals_ = std::move(found);
  const std::size_t k = ideals_.size();
  for (std::size_t i = 0; i < k; ++i) index_.emplace(ideals_[i], i);

  principal_index_.resize(ring.size());
  for (Elem a : ring.elements()) principal_index_[idx(a)] = index_.at(ring.principal(a));

  std::vector<std::vector<Elem>> gens(k);
  for (std::size_t i = 0; i < k; ++i) gens[i] = ideal_generators(ring, ideals_[i]);

  meet_.resize(k * k);
  join_.resize(k * k);
  colon_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      meet_[i * k + j] = static_cast<std::uint16_t>(index_.at(ideals_[i] & ideals_[j]));
      if (j < i) {
        join_[i * k + j] = join_[j * k + i];
      } else {
        join_[i * k + j] = static_cast<std::uint16_t>(index_.at(sum_set(ring, ideals_[i], ideals_[j])));
      }
      colon_[i * k + j] = static_cast<std::uint16_t>(index_.at(colon_by(ring, ideals_[i], gens[j])));
    }
  }

  prime_.resize(k);
  maximal_.resize(k);
  jacobson_ = ring.all();
  for (std::size_t i = 0; i < k; ++i) {
    prime_[i] = is_prime_set(ring, ideals_[i]);
    // Maximal: proper, and the only ideal strictly above is R.
    bool maximal = i + 1 != k;
    for (std::size_t j = 0; maximal && j + 1 < k; ++j)
      if (j != i && ideals_[i].subset_of(ideals_[j])) maximal = false;
    maximal_[i] = maximal;
    if (maximal) jacobson_ &= ideals_[i];
  }
}

std::optional<std::size_t> IdealLattice::index_of(const ElemSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> IdealLattice::primes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (prime_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> IdealLattice::maximals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (maximal_[i]) out.push_back(i);
  return out;
}

}  // namespace smul

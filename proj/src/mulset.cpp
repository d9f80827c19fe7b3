#include "smul/mulset.hpp"

#include <algorithm>
#include <unordered_set>

namespace smul {

ElemSet closure_set(const FiniteRing& r, const ElemSet& seed) {
  ElemSet out = seed;
  out.insert(r.one());
  std::vector<Elem> frontier = out.to_vector();
  const std::vector<Elem> gens = seed.to_vector();
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem g : gens) {
        const Elem y = r.mul(x, g);
        if (!out.contains(y)) {
          out.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

std::vector<Elem> greedy_monoid_generators(const FiniteRing& r, const ElemSet& elements) {
  std::vector<Elem> gens;
  ElemSet cur{r.one()};
  for (Elem x : elements) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    ElemSet seed;
    for (Elem g : gens) seed.insert(g);
    cur = closure_set(r, seed);
    if (cur == elements) break;
  }
  return gens;
}

}  // namespace

MultiplicativeSet::MultiplicativeSet(RingPtr ring, std::vector<Elem> generators, ElemSet elements)
    : ring_(std::move(ring)), generators_(std::move(generators)), elements_(elements) {
  const auto& r = *ring_;
  for (Elem t : elements_) {
    bool all = true;
    for (Elem s : elements_)
      if (!r.divides(s, t)) {
        all = false;
        break;
      }
    if (all) {
      max_multiple_ = t;
      break;
    }
  }
}

std::string MultiplicativeSet::format() const {
  if (generators_.empty()) return "<" + ring_->format(ring_->one()) + ">";
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring_->format(generators_[i]);
  }
  return out + ">";
}

MultiplicativeSet close(RingPtr ring, std::span<const Elem> generators) {
  ElemSet seed;
  for (Elem g : generators) {
    if (idx(g) >= ring->size()) throw Error(ErrorKind::InvalidArgument, "generator outside the ring");
    seed.insert(g);
  }
  const ElemSet closed = closure_set(*ring, seed);
  if (closed.contains(ring->zero()))
    throw Error(ErrorKind::ContainsZero, "the multiplicative closure of the generators contains 0");
  std::vector<Elem> gens;
  for (Elem g : generators)
    if (g != ring->one() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  return MultiplicativeSet(std::move(ring), std::move(gens), closed);
}

MultiplicativeSet from_elements(RingPtr ring, const ElemSet& elements) {
  const auto& r = *ring;
  if (elements.contains(r.zero())) throw Error(ErrorKind::ContainsZero, "set contains 0");
  if (!elements.contains(r.one())) throw Error(ErrorKind::InvalidArgument, "set does not contain 1");
  for (Elem a : elements)
    for (Elem b : elements)
      if (!elements.contains(r.mul(a, b)))
        throw Error(ErrorKind::InvalidArgument, "set is not closed under multiplication");
  auto gens = greedy_monoid_generators(r, elements);
  return MultiplicativeSet(std::move(ring), std::move(gens), elements);
}

StrongTest strongly_multiplicative_def(const MultiplicativeSet& s) {
  const auto& r = *s.ring();
  StrongTest out;
  out.intersection = r.all();
  for (Elem x : s.elements()) out.intersection &= r.principal(x);
  const ElemSet meet = out.intersection & s.elements();
  out.holds = !meet.empty();
  if (out.holds) out.witness = meet.first();
  return out;
}

StrongTest strongly_multiplicative_mmc(const MultiplicativeSet& s) {
  const auto& r = *s.ring();
  StrongTest out;
  for (Elem t : s.elements()) {
    bool all = true;
    for (Elem x : s.elements()) {
      // x | t: look for y with x y = t.
      bool found = false;
      for (Elem y : r.elements())
        if (r.mul(x, y) == t) {
          found = true;
          break;
        }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) {
      out.holds = true;
      out.witness = t;
      return out;
    }
  }
  return out;
}

std::string_view to_string(SaturationKind k) noexcept {
  switch (k) {
    case SaturationKind::Units: return "Units";
    case SaturationKind::UnitsTimesFactor: return "UnitsTimesFactor";
    case SaturationKind::UnitsTimesUnits: return "UnitsTimesUnits";
  }
  return "?";
}

std::string_view to_string(FactorSide s) noexcept {
  switch (s) {
    case FactorSide::Left: return "left";
    case FactorSide::Right: return "right";
    case FactorSide::Peirce: return "peirce";
  }
  return "?";
}

Saturation saturation(const MultiplicativeSet& s) {
  const auto& r = *s.ring();
  Saturation out;
  for (Elem x : r.elements())
    if (s.elements().intersects(r.principal(x))) out.elements.insert(x);

  const auto t = s.max_multiple();
  if (!t) return out;
  const Elem e = r.idempotent_of(*t);
  SaturationForm form{SaturationKind::Units, e, FactorSide::Peirce};
  if (r.is_indecomposable()) {
    form.kind = SaturationKind::Units;
  } else if (e == r.one()) {
    form.kind = SaturationKind::UnitsTimesUnits;
  } else {
    form.kind = SaturationKind::UnitsTimesFactor;
    if (r.as<ProductNode>() != nullptr) {
      const Elem zero_l = r.component(r.zero(), 0);
      const Elem zero_r = r.component(r.zero(), 1);
      if (e == r.pair(r.component(r.one(), 0), zero_r))
        form.side = FactorSide::Left;
      else if (e == r.pair(zero_l, r.component(r.one(), 1)))
        form.side = FactorSide::Right;
    }
  }
  out.form = form;
  return out;
}

ElemSet saturation_from_form(const FiniteRing& r, const SaturationForm& form) {
  ElemSet out;
  switch (form.kind) {
    case SaturationKind::Units:
    case SaturationKind::UnitsTimesUnits:
      return r.units();
    case SaturationKind::UnitsTimesFactor:
      break;
  }
  if (form.side == FactorSide::Left || form.side == FactorSide::Right) {
    const auto* p = r.as<ProductNode>();
    const int side = form.side == FactorSide::Left ? 0 : 1;
    const auto& factor = side == 0 ? *p->left : *p->right;
    for (Elem x : r.elements())
      if (factor.is_unit(r.component(x, side))) out.insert(x);
    return out;
  }
  // Peirce: x = ex + (1-e)x with ex a unit of eR.
  const Elem e = form.idempotent;
  for (Elem x : r.elements()) {
    const Elem ex = r.mul(e, x);
    for (Elem y : r.principal(e))
      if (r.mul(ex, y) == e) {
        out.insert(x);
        break;
      }
  }
  return out;
}

ElemSet saturation_via_primes(const MultiplicativeSet& s) {
  const auto& r = *s.ring();
  const auto& lat = r.lattice();
  ElemSet covered;
  for (auto i : lat.primes())
    if (!lat[i].intersects(s.elements())) covered |= lat[i];
  return r.all() - covered;
}

MultiplicativeSet product_set(const MultiplicativeSet& s, const MultiplicativeSet& t) {
  if (s.ring() != t.ring()) throw Error(ErrorKind::InvalidArgument, "sets over different rings");
  const auto& r = *s.ring();
  ElemSet st;
  for (Elem a : s.elements())
    for (Elem b : t.elements()) st.insert(r.mul(a, b));
  if (st.contains(r.zero())) throw Error(ErrorKind::ContainsZero, "0 lies in ST");
  std::vector<Elem> gens = s.generators();
  for (Elem g : t.generators())
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  return close(s.ring(), gens);
}

MultiplicativeSet from_prime_complement(const Ideal& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.format() + " is not prime");
  return from_elements(p.ring(), p.ring()->all() - p.elements());
}

std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring, EnumerationBudget budget) {
  const auto& r = *ring;
  struct Found {
    ElemSet set;
    std::vector<Elem> gens;
  };
  std::vector<Found> found;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  auto push = [&](const ElemSet& s, std::vector<Elem> gens) {
    if (!s.contains(r.zero()) && seen.insert(s).second) found.push_back({s, std::move(gens)});
  };
  if (r.size() <= budget.full_scan_limit) {
    // Every submonoid is reached by adjoining one element at a time.
    push(ElemSet{r.one()}, {});
    for (std::size_t i = 0; i < found.size(); ++i) {
      const Found cur = found[i];
      for (Elem x : r.elements()) {
        if (x == r.zero() || cur.set.contains(x)) continue;
        ElemSet seed = cur.set;
        seed.insert(x);
        auto gens = cur.gens;
        gens.push_back(x);
        push(closure_set(r, seed), std::move(gens));
      }
    }
  } else if (r.size() <= budget.two_generator_limit) {
    push(ElemSet{r.one()}, {});
    std::vector<ElemSet> singles(r.size());
    for (Elem x : r.elements()) {
      singles[idx(x)] = closure_set(r, ElemSet{x});
      if (x != r.one()) push(singles[idx(x)], {x});
    }
    for (Elem x : r.elements()) {
      if (x == r.one() || singles[idx(x)].contains(r.zero())) continue;
      for (Elem y : r.elements()) {
        if (idx(y) <= idx(x) || y == r.one() || singles[idx(y)].contains(r.zero())) continue;
        push(closure_set(r, ElemSet{x, y}), {x, y});
      }
    }
  } else {
    throw Error(ErrorKind::TooLarge, "multiplicative-set enumeration limited to rings of size " +
                                         std::to_string(budget.two_generator_limit));
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return canonical_less(a.set, b.set); });
  std::vector<MultiplicativeSet> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(close(ring, f.gens));
  return out;
}

bool jacobson_disjoint(const MultiplicativeSet& s) {
  return !s.elements().intersects(s.ring()->lattice().jacobson());
}

MultiplicativeSet image_under(const RingHom& f, const MultiplicativeSet& s) {
  if (f.source() != s.ring()) throw Error(ErrorKind::InvalidArgument, "map source differs from the set's ring");
  if (!f.is_surjective()) throw Error(ErrorKind::NotSurjective, "map is not surjective");
  const ElemSet img = f.image_of(s.elements());
  if (img.contains(f.target()->zero())) throw Error(ErrorKind::ContainsZero, "0 lies in f(S)");
  return from_elements(f.target(), img);
}

MultiplicativeSet product_with(const RingPtr& product, const MultiplicativeSet& s1, const MultiplicativeSet& s2) {
  const auto* p = product->as<ProductNode>();
  if (p == nullptr || p->left != s1.ring() || p->right != s2.ring())
    throw Error(ErrorKind::InvalidArgument, "product ring does not match the factors");
  ElemSet out;
  for (Elem a : s1.elements())
    for (Elem b : s2.elements()) out.insert(product->pair(a, b));
  return from_elements(product, out);
}

MultiplicativeSet lift_to_trivext(const RingPtr& trivext, const MultiplicativeSet& s, const ElemSet& submodule) {
  const auto* t = trivext->as<TrivExtNode>();
  if (t == nullptr || t->base != s.ring())
    throw Error(ErrorKind::InvalidArgument, "ring is not a trivial extension of the set's ring");
  if (!t->module.is_submodule(submodule)) throw Error(ErrorKind::InvalidArgument, "N is not a submodule");
  ElemSet out;
  for (Elem a : s.elements())
    for (Elem n : submodule) out.insert(trivext->pair(a, n));
  return from_elements(trivext, out);
}

MultiplicativeSet lift_to_amalgam(const RingPtr& amalgam, const MultiplicativeSet& s) {
  const auto* a = amalgam->as<AmalgamNode>();
  if (a == nullptr || a->map.source() != s.ring())
    throw Error(ErrorKind::InvalidArgument, "ring is not an amalgamation over the set's ring");
  ElemSet out{amalgam->one()};
  for (Elem x : s.elements()) out.insert(amalgam->pair(x, a->map(x)));
  return from_elements(amalgam, out);
}

}  // namespace smul

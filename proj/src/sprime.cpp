#include "smul/sprime.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace smul {

std::string_view to_string(SPrimeMode m) noexcept {
  return m == SPrimeMode::Definitional ? "Definitional" : "ColonPrime";
}

ElemSet s_prime_witnesses_definitional(const FiniteRing& r, const ElemSet& p) {
  ElemSet out;
  for (Elem s : r.elements()) {
    // Pairs (a, b) with sa, sb outside P must have ab outside P.
    std::vector<Elem> outside;
    for (Elem a : r.elements())
      if (!p.contains(r.mul(s, a))) outside.push_back(a);
    bool ok = true;
    for (std::size_t i = 0; ok && i < outside.size(); ++i)
      for (std::size_t j = i; j < outside.size(); ++j)
        if (p.contains(r.mul(outside[i], outside[j]))) {
          ok = false;
          break;
        }
    if (ok) out.insert(s);
  }
  return out;
}

const std::vector<ElemSet>& definitional_witness_table(const FiniteRing& r) {
  struct Entry {
    std::weak_ptr<const FiniteRing> ring;
    std::shared_ptr<const std::vector<ElemSet>> table;
  };
  static std::mutex mu;
  static std::unordered_map<const FiniteRing*, Entry> cache;
  {
    std::lock_guard lock(mu);
    const auto it = cache.find(&r);
    if (it != cache.end() && !it->second.ring.expired()) return *it->second.table;
  }
  const auto& lat = r.lattice();
  auto table = std::make_shared<std::vector<ElemSet>>();
  for (std::size_t i = 0; i < lat.size(); ++i) table->push_back(s_prime_witnesses_definitional(r, lat[i]));
  std::lock_guard lock(mu);
  std::erase_if(cache, [](const auto& kv) { return kv.second.ring.expired(); });
  auto& entry = cache[&r];
  if (entry.ring.expired() || !entry.table) entry = Entry{r.weak_from_this(), std::move(table)};
  return *entry.table;
}

ElemSet s_prime_witnesses_colon(const FiniteRing& r, const ElemSet& p) {
  ElemSet out;
  const auto& lat = r.lattice();
  const auto pi = lat.index_of(p);
  for (Elem s : r.elements()) {
    bool prime;
    if (pi) {
      prime = lat.is_prime(lat.colon(*pi, lat.principal_index(s)));
    } else {
      prime = is_prime_set(r, colon_by(r, p, std::array<Elem, 1>{s}));
    }
    if (prime) out.insert(s);
  }
  return out;
}

std::optional<SPrimeWitness> is_s_prime(const Ideal& p, const MultiplicativeSet& s, SPrimeMode mode) {
  if (p.ring() != s.ring()) throw Error(ErrorKind::InvalidArgument, "ideal and set over different rings");
  if (p.elements().intersects(s.elements()))
    throw Error(ErrorKind::NotDisjoint, p.format() + " meets " + s.format());
  const auto& r = *p.ring();
  const ElemSet w = mode == SPrimeMode::Definitional ? s_prime_witnesses_definitional(r, p.elements())
                                                      : s_prime_witnesses_colon(r, p.elements());
  const ElemSet hit = w & s.elements();
  if (hit.empty()) return std::nullopt;
  return SPrimeWitness{p, hit.first(), mode};
}

bool is_strongly_prime(const Ideal& p) {
  return strongly_multiplicative_mmc(from_prime_complement(p)).holds;
}

bool is_strongly_prime_by_principal_families(const Ideal& p) {
  const auto& r = *p.ring();
  if (r.size() > 16) throw Error(ErrorKind::TooLarge, "principal-family scan limited to 16 elements");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.format() + " is not prime");
  // Families meeting P satisfy the property trivially, so only subsets of
  // R - P can refute it.
  const auto outside = (r.all() - p.elements()).to_vector();
  const std::size_t m = outside.size();
  std::vector<ElemSet> meet(std::size_t{1} << m);
  meet[0] = r.all();
  for (std::size_t mask = 1; mask < meet.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    meet[mask] = meet[mask & (mask - 1)] & r.principal(outside[low]);
    if (meet[mask].subset_of(p.elements())) return false;
  }
  return true;
}

bool ZeroDimensionalReport::all_agree() const {
  const auto c = conditions();
  return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; });
}

ZeroDimensionalReport zero_dimensional_report(const RingPtr& ring) {
  const auto& r = *ring;
  const auto& lat = r.lattice();
  ZeroDimensionalReport rep;
  const auto primes = lat.primes();

  // (1) ideal families: the family of all J not inside P has the smallest meet.
  rep.every_prime_strongly_prime = true;
  for (auto pi : primes) {
    ElemSet meet = r.all();
    for (std::size_t j = 0; j < lat.size(); ++j)
      if (!lat[j].subset_of(lat[pi])) meet &= lat[j];
    if (meet.subset_of(lat[pi])) rep.every_prime_strongly_prime = false;
  }

  bool primes_maximal = true;
  for (auto pi : primes)
    if (!lat.is_maximal(pi)) primes_maximal = false;
  bool maximals_strong = true;
  for (auto mi : lat.maximals())
    if (!is_strongly_prime(Ideal(ring, lat[mi]))) maximals_strong = false;
  rep.primes_maximal_and_maximals_strongly_prime = primes_maximal && maximals_strong;

  bool comaximal = true;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::size_t meet = lat.unit_index();
    for (std::size_t j = 0; j < lat.size(); ++j)
      if (lat.join(i, j) == lat.unit_index()) meet = lat.meet(meet, j);
    if (lat.join(i, meet) != lat.unit_index()) comaximal = false;
  }
  rep.comaximal_meet_property = rep.every_prime_strongly_prime && comaximal;

  rep.principal_family_property = true;
  for (auto pi : primes) {
    const Ideal p(ring, lat[pi]);
    bool ok;
    if (r.size() <= 16) {
      ok = is_strongly_prime_by_principal_families(p);
    } else {
      ElemSet meet = r.all();
      for (Elem a : r.all() - lat[pi]) meet &= r.principal(a);
      ok = !meet.subset_of(lat[pi]);
    }
    if (!ok) rep.principal_family_property = false;
  }

  rep.zero_dimensional_quasi_semilocal = primes_maximal && !lat.maximals().empty();

  rep.prime_complements_strongly_multiplicative = true;
  for (auto pi : primes)
    if (!strongly_multiplicative_def(from_prime_complement(Ideal(ring, lat[pi]))).holds)
      rep.prime_complements_strongly_multiplicative = false;
  return rep;
}

bool is_strongly_zero_dimensional(const RingPtr& ring) {
  return zero_dimensional_report(ring).every_prime_strongly_prime;
}

std::vector<Ideal> s_minimal_primes(const MultiplicativeSet& s, const std::optional<Ideal>& over) {
  const auto& ring = s.ring();
  const auto& r = *ring;
  const auto& lat = r.lattice();
  const ElemSet base = over ? over->elements() : ElemSet{r.zero()};
  const auto& witnesses = definitional_witness_table(r);
  std::vector<std::size_t> sprimes;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!base.subset_of(lat[i]) || lat[i].intersects(s.elements())) continue;
    if (witnesses[i].intersects(s.elements())) sprimes.push_back(i);
  }
  std::vector<Ideal> out;
  for (auto i : sprimes) {
    bool minimal = true;
    for (auto j : sprimes)
      if (j != i && lat[j].subset_of(lat[i])) minimal = false;
    if (minimal) out.emplace_back(ring, lat[i]);
  }
  return out;
}

std::optional<std::pair<Elem, Elem>> non_prime_witness(const Ideal& p) {
  const auto& r = *p.ring();
  if (p.is_unit()) return std::pair{r.one(), r.one()};
  for (Elem a : r.all() - p.elements())
    for (Elem b : r.all() - p.elements())
      if (idx(b) >= idx(a) && p.contains(r.mul(a, b))) return std::pair{a, b};
  return std::nullopt;
}

namespace {

Json pair_json(const FiniteRing& r, std::pair<Elem, Elem> w) { return Json::array({r.format(w.first), r.format(w.second)}); }

bool is_minimal_prime_over(const IdealLattice& lat, std::size_t p, const ElemSet& base) {
  if (!lat.is_prime(p) || !base.subset_of(lat[p])) return false;
  for (auto q : lat.primes())
    if (q != p && base.subset_of(lat[q]) && lat[q].subset_of(lat[p])) return false;
  return true;
}

}  // namespace

Certificate check_s_minimal_theorem(const MultiplicativeSet& s) {
  const auto& ring = s.ring();
  const auto& r = *ring;
  const auto& lat = r.lattice();
  Certificate cert;
  cert.claim_id = "thm.s-minimal";
  cert.instance = r.expression() + " | " + s.format();

  const auto mins = s_minimal_primes(s);
  ElemSet meet_sr = r.all();
  for (Elem x : s.elements()) meet_sr &= r.principal(x);

  bool stable = true;
  Json stable_w;
  bool inside = true;
  for (const auto& p : mins) {
    for (Elem x : s.elements())
      if (scale(x, p) != p && stable) {
        stable = false;
        stable_w = Json{{"ideal", p.format()}, {"s", r.format(x)}};
      }
    if (!p.elements().subset_of(meet_sr)) inside = false;
  }
  cert.add("sP = P for every S-minimal prime P and s in S", stable, stable_w);
  cert.add("P ⊆ ∩ sR", inside);

  const bool in_units = s.subset_of_units();
  if (!in_units) {
    cert.add("S-minimal primes exist", !mins.empty(), Json{{"count", mins.size()}});
    const auto t = s.max_multiple();
    const Elem e = r.idempotent_of(*t);
    const Elem f = r.sub(r.one(), e);
    Json w = Json::array();
    bool none_prime = true;
    for (const auto& p : mins) {
      // The idempotent pair (1 - e, e) multiplies to 0 and avoids P.
      std::optional<std::pair<Elem, Elem>> pair;
      if (!p.contains(f) && !p.contains(e)) pair = std::pair{f, e};
      else pair = non_prime_witness(p);
      if (!pair) {
        none_prime = false;
        w.push_back(Json{{"ideal", p.format()}, {"prime", true}});
      } else {
        w.push_back(Json{{"ideal", p.format()}, {"witness", pair_json(r, *pair)}});
      }
    }
    cert.add("no S-minimal prime is prime (S not inside u(R))", none_prime, std::move(w));
  } else {
    bool all_prime = true;
    Json w;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (lat[i].intersects(s.elements())) continue;
      if (definitional_witness_table(r)[i].intersects(s.elements()) && !lat.is_prime(i)) {
        all_prime = false;
        w = r.format(lat[i]);
      }
    }
    cert.add("every S-prime ideal is prime (S inside u(R))", all_prime, w);
    bool minimal = true;
    for (const auto& p : mins)
      if (!is_minimal_prime_over(lat, *lat.index_of(p.elements()), ElemSet{r.zero()})) minimal = false;
    cert.add("every S-minimal prime is a minimal prime", minimal);
  }

  // Relative version over each ideal I disjoint from S.
  bool relative = true;
  Json rel_w;
  for (std::size_t i = 0; i < lat.size() && relative; ++i) {
    if (lat[i].intersects(s.elements())) continue;
    const Ideal base(ring, lat[i]);
    const auto over = s_minimal_primes(s, base);
    const bool comaximal = sum_set(r, meet_sr, lat[i]) == r.all();
    if (over.empty()) {
      relative = false;
      rel_w = Json{{"over", base.format()}, {"reason", "no minimal S-prime over I"}};
    }
    for (const auto& p : over) {
      const std::size_t pi = *lat.index_of(p.elements());
      const bool ok = comaximal ? is_minimal_prime_over(lat, pi, lat[i]) : !lat.is_prime(pi);
      if (!ok) {
        relative = false;
        rel_w = Json{{"over", base.format()}, {"ideal", p.format()}, {"comaximal", comaximal}};
        break;
      }
    }
  }
  cert.add("minimal S-primes over I: minimal primes if (∩Rs)+I = R, else not prime", relative, rel_w);
  return cert;
}

std::vector<Algorithm1Entry> algorithm1(const MultiplicativeSet& s) {
  const auto& ring = s.ring();
  const auto& r = *ring;
  const auto* p = r.as<ProductNode>();
  if (p == nullptr) throw Error(ErrorKind::NotApplicable, "ring is not a product R1 x R2");
  if (p->left->is_field() || p->right->is_field())
    throw Error(ErrorKind::NotApplicable, "a factor is a field");
  if (s.subset_of_units()) throw Error(ErrorKind::NotApplicable, "S consists of units");
  const auto sat = saturation(s);
  if (!sat.form || sat.form->kind != SaturationKind::UnitsTimesFactor || sat.form->side == FactorSide::Peirce)
    throw Error(ErrorKind::NotApplicable, "saturation is neither u(R1) x R2 nor R1 x u(R2)");

  const bool left = sat.form->side == FactorSide::Left;
  const RingPtr& factor = left ? p->left : p->right;
  const Elem zero_l = p->left->zero(), zero_r = p->right->zero();
  const std::pair<Elem, Elem> witness{r.pair(zero_l, p->right->one()), r.pair(p->left->one(), zero_r)};

  std::vector<Algorithm1Entry> out;
  for (const auto& q : minimal_primes(factor)) {
    ElemSet lifted;
    for (Elem x : q.elements()) lifted.insert(left ? r.pair(x, zero_r) : r.pair(zero_l, x));
    out.push_back(Algorithm1Entry{Ideal(ring, lifted), witness});
  }
  std::sort(out.begin(), out.end(),
            [](const Algorithm1Entry& a, const Algorithm1Entry& b) { return canonical_less(a.ideal.elements(), b.ideal.elements()); });
  return out;
}

KrullResult strong_krull(const MultiplicativeSet& s, const Ideal& i) {
  if (i.ring() != s.ring()) throw Error(ErrorKind::InvalidArgument, "ideal and set over different rings");
  if (i.elements().intersects(s.elements())) throw Error(ErrorKind::NotDisjoint, i.format() + " meets " + s.format());
  const auto& ring = s.ring();
  const auto& r = *ring;
  KrullResult out{i, false, {i}, {}};
  ElemSet cur = i.elements();
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x : r.all() - cur) {
      const ElemSet next = sum_set(r, cur, r.principal(x));
      if (!next.intersects(s.elements())) {
        cur = next;
        out.chain.emplace_back(ring, cur);
        grew = true;
        break;
      }
    }
  }
  out.found = Ideal(ring, cur);
  out.is_maximal_ideal = is_maximal_set(r, cur);

  const auto& lat = r.lattice();
  std::vector<std::size_t> omega;
  for (std::size_t j = 0; j < lat.size(); ++j)
    if (i.elements().subset_of(lat[j]) && !lat[j].intersects(s.elements())) omega.push_back(j);
  for (auto j : omega) {
    bool maximal = true;
    for (auto k : omega)
      if (k != j && lat[j].subset_of(lat[k])) maximal = false;
    if (maximal) out.omega_maximal.emplace_back(ring, lat[j]);
  }
  return out;
}

Certificate check_descending_chain(const Ideal& p, const MultiplicativeSet& s, Elem multiplier) {
  const auto& r = *p.ring();
  Certificate cert;
  cert.claim_id = "chain.s-prime-intersection";
  cert.instance = r.expression() + " | " + s.format() + " | " + p.format() + " | s = " + r.format(multiplier);
  if (!s.contains(multiplier)) throw Error(ErrorKind::InvalidArgument, "multiplier is not in S");
  std::vector<Ideal> chain{p};
  while (true) {
    Ideal next = scale(multiplier, chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  bool descending = true;
  bool all_sprime = true;
  Json w = Json::array();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0 && !chain[k].subset_of(chain[k - 1])) descending = false;
    const auto wit = is_s_prime(chain[k], s);
    if (!wit) all_sprime = false;
    w.push_back(Json{{"ideal", chain[k].format()}, {"s", wit ? Json(r.format(wit->s)) : Json(nullptr)}});
  }
  cert.add("chain descends", descending);
  cert.add("each s^k P is S-prime", all_sprime, std::move(w));
  // The chain stabilizes, so the intersection is its last member.
  cert.add("intersection of the chain is S-prime", is_s_prime(chain.back(), s).has_value(),
           Json{{"intersection", chain.back().format()}, {"length", chain.size()}});
  return cert;
}

}  // namespace smul

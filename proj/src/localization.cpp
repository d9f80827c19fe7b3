#include "smul/localization.hpp"

#include <array>
#include <numeric>

namespace smul {

namespace {

RingHom make_projection(const RingPtr& base, const RingPtr& corner, Elem e) {
  const auto& members = corner->as<CornerNode>()->members;
  std::vector<int> pos(base->size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[idx(members[i])] = static_cast<int>(i);
  std::vector<Elem> table;
  for (Elem r : base->elements()) table.push_back(elem(static_cast<std::size_t>(pos[idx(base->mul(e, r))])));
  return RingHom::from_table(base, corner, std::move(table));
}

Elem max_multiple_or_throw(const MultiplicativeSet& s) {
  if (!s.max_multiple()) throw Error(ErrorKind::NoIdempotent, "set has no maximal multiple");
  return *s.max_multiple();
}

Json elements_json(const FiniteRing& r, const ElemSet& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(r.format(x));
  return out;
}

}  // namespace

LocalizedRing::LocalizedRing(MultiplicativeSet s)
    : set_(std::move(s)),
      t_(max_multiple_or_throw(set_)),
      e_(set_.ring()->idempotent_of(t_)),
      corner_(FiniteRing::corner(set_.ring(), e_)),
      projection_(make_projection(set_.ring(), corner_, e_)) {}

Elem LocalizedRing::embed(Elem x) const { return corner_->as<CornerNode>()->members[idx(x)]; }

Elem LocalizedRing::fraction(Elem a, Elem s) const {
  const auto inv = corner_->inverse(project(s));
  if (!inv) throw Error(ErrorKind::InvalidArgument, "denominator does not become a unit");
  return corner_->mul(project(a), *inv);
}

std::string LocalizedRing::format(Elem x) const { return corner_->format(x); }
std::string LocalizedRing::format(const ElemSet& xs) const { return corner_->format(xs); }

LocalizedRing localize(const MultiplicativeSet& s) { return LocalizedRing(s); }

Ideal localize_ideal(const LocalizedRing& l, const Ideal& i) {
  if (i.ring() != l.base()) throw Error(ErrorKind::InvalidArgument, "ideal of a different ring");
  return Ideal(l.ring(), l.projection().image_of(i.elements()));
}

Ideal contract(const LocalizedRing& l, const Ideal& j) {
  if (j.ring() != l.ring()) throw Error(ErrorKind::InvalidArgument, "ideal is not an ideal of eR");
  ElemSet out;
  for (Elem r : l.base()->elements())
    if (j.contains(l.project(r))) out.insert(r);
  return Ideal(l.base(), out);
}

Certificate check_intersection_commutes(const LocalizedRing& l, std::span<const Ideal> family) {
  Certificate cert;
  cert.claim_id = "thm.localization-intersection";
  cert.instance = l.base()->expression() + " | " + l.set().format();
  const Ideal lhs = localize_ideal(l, intersect_family(l.base(), family));
  ElemSet rhs = l.ring()->all();
  for (const auto& j : family) rhs &= localize_ideal(l, j).elements();
  Json w;
  w["lhs"] = elements_json(*l.ring(), lhs.elements());
  w["rhs"] = elements_json(*l.ring(), rhs);
  const ElemSet diff = (lhs.elements() - rhs) | (rhs - lhs.elements());
  if (!diff.empty()) w["differs_at"] = l.format(diff.first());
  cert.add("S^-1(meet) = meet(S^-1)", diff.empty(), std::move(w));
  return cert;
}

Certificate check_colon_commutes(const LocalizedRing& l, const Ideal& i, const Ideal& j) {
  Certificate cert;
  cert.claim_id = "prop.colon";
  cert.instance = l.base()->expression() + " | " + l.set().format() + " | " + i.format() + " : " + j.format();
  const ElemSet lhs = localize_ideal(l, colon(i, j)).elements();
  const ElemSet rhs = colon_set(*l.ring(), localize_ideal(l, i).elements(), localize_ideal(l, j).elements());
  Json w;
  w["lhs"] = elements_json(*l.ring(), lhs);
  w["rhs"] = elements_json(*l.ring(), rhs);
  const ElemSet diff = (lhs - rhs) | (rhs - lhs);
  if (!diff.empty()) w["differs_at"] = l.format(diff.first());
  cert.add("S^-1(I:J) = (S^-1 I : S^-1 J)", diff.empty(), std::move(w));
  return cert;
}

Certificate check_contraction(const LocalizedRing& l, const Ideal& i) {
  Certificate cert;
  cert.claim_id = "prop.contraction";
  cert.instance = l.base()->expression() + " | " + l.set().format() + " | " + i.format();
  const ElemSet lhs = contract(l, localize_ideal(l, i)).elements();
  const ElemSet rhs = colon_by(*l.base(), i.elements(), std::array<Elem, 1>{l.t()});
  Json w;
  w["t"] = l.base()->format(l.t());
  w["contraction"] = elements_json(*l.base(), lhs);
  w["colon"] = elements_json(*l.base(), rhs);
  cert.add("S^-1 I ∩ R = (I : t)", lhs == rhs, std::move(w));
  // (I:s) ⊆ (I:t) for every s in S.
  for (Elem s : l.set().elements()) {
    const ElemSet cs = colon_by(*l.base(), i.elements(), std::array<Elem, 1>{s});
    if (!cs.subset_of(rhs)) {
      Json ws;
      ws["s"] = l.base()->format(s);
      cert.add("(I:s) ⊆ (I:t)", false, std::move(ws));
      return cert;
    }
  }
  cert.add("(I:s) ⊆ (I:t) for all s in S", true);
  return cert;
}

MultiplicativeSet localized_mulset(const LocalizedRing& l, const MultiplicativeSet& t) {
  if (t.ring() != l.base()) throw Error(ErrorKind::InvalidArgument, "set of a different ring");
  ElemSet out;
  for (Elem a : t.elements())
    for (Elem s : l.set().elements()) out.insert(l.fraction(a, s));
  return from_elements(l.ring(), out);
}

Certificate check_against_fractions(const LocalizedRing& l) {
  const auto& r = *l.base();
  const auto& corner = *l.ring();
  const auto sv = l.set().elements().to_vector();
  Certificate cert;
  cert.claim_id = "localization.fractions";
  cert.instance = r.expression() + " | " + l.set().format();

  // Pairs (a, s) indexed a * |S| + k.
  const std::size_t m = sv.size();
  const std::size_t npairs = r.size() * m;
  auto equivalent = [&](std::size_t p, std::size_t q) {
    const Elem a = elem(p / m), s = sv[p % m];
    const Elem b = elem(q / m), u = sv[q % m];
    const Elem diff = r.sub(r.mul(a, u), r.mul(b, s));
    for (Elem v : sv)
      if (r.mul(v, diff) == r.zero()) return true;
    return false;
  };
  std::vector<std::size_t> cls(npairs);
  std::iota(cls.begin(), cls.end(), std::size_t{0});
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < npairs; ++p) {
    bool placed = false;
    for (auto rep : reps)
      if (equivalent(p, rep)) {
        cls[p] = rep;
        placed = true;
        break;
      }
    if (!placed) reps.push_back(p);
  }
  auto image = [&](std::size_t p) { return l.fraction(elem(p / m), sv[p % m]); };

  bool well_defined = true;
  for (std::size_t p = 0; p < npairs; ++p)
    if (image(p) != image(cls[p])) well_defined = false;
  cert.add("a/s -> e a (e s)^-1 is well defined", well_defined);

  ElemSet hit;
  for (auto rep : reps) hit.insert(image(rep));
  Json w;
  w["fraction_classes"] = reps.size();
  w["corner_size"] = corner.size();
  cert.add("bijective onto eR", hit.size() == reps.size() && hit == corner.all(), std::move(w));

  bool hom = true;
  for (auto p : reps) {
    for (auto q : reps) {
      const Elem a = elem(p / m), s = sv[p % m];
      const Elem b = elem(q / m), u = sv[q % m];
      const Elem su = r.mul(s, u);
      const Elem sum_frac = l.fraction(r.add(r.mul(a, u), r.mul(b, s)), su);
      const Elem prod_frac = l.fraction(r.mul(a, b), su);
      if (sum_frac != corner.add(image(p), image(q)) || prod_frac != corner.mul(image(p), image(q))) hom = false;
    }
  }
  cert.add("ring homomorphism", hom);
  bool units = true;
  for (Elem s : sv)
    if (!corner.is_unit(l.project(s))) units = false;
  cert.add("every s in S becomes a unit", units);
  return cert;
}

}  // namespace smul

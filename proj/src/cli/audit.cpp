#include "smul/audit.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "smul/cxlab.hpp"
#include "smul/ideal.hpp"
#include "smul/localization.hpp"
#include "smul/mulset.hpp"
#include "smul/sprime.hpp"
#include "smul/zint.hpp"

namespace smul::cli {

namespace {

using Clock = std::chrono::steady_clock;

Json elems(const FiniteRing& r, const ElemSet& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(r.format(x));
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) h = (h ^ c) * 1099511628211ULL;
  return h;
}

class Recorder {
 public:
  Recorder(AuditReport& report, const AuditOptions& opts) : report_(report), opts_(opts) {}

  bool enabled(std::string_view id) const {
    return opts_.claims.empty() || std::find(opts_.claims.begin(), opts_.claims.end(), id) != opts_.claims.end();
  }
  void restart() { last_ = Clock::now(); }

  void add(const Certificate& c) {
    ClaimRecord rec;
    rec.claim_id = c.claim_id;
    rec.instance = c.instance;
    rec.verdict = c.verdict();
    rec.checks = c.checks.size();
    if (const auto* f = c.first_failure()) {
      rec.witness = Json{{"check", f->name}, {"witness", f->witness}};
    } else if (c.skip_reason) {
      rec.witness = Json{{"reason", *c.skip_reason}};
    } else if (!c.checks.empty()) {
      rec.witness = c.checks.front().witness;
    }
    push(std::move(rec));
  }

  void skip(std::string id, std::string instance, const std::string& reason, const std::string& doc) {
    ClaimRecord rec;
    rec.claim_id = std::move(id);
    rec.instance = std::move(instance);
    rec.verdict = Verdict::Skip;
    rec.witness = Json{{"reason", reason}};
    if (!doc.empty()) rec.witness["doc"] = doc;
    push(std::move(rec));
  }

  /// An exception inside a check is reported as a failure of that claim.
  void error(std::string id, std::string instance, const std::exception& e) {
    ClaimRecord rec;
    rec.claim_id = std::move(id);
    rec.instance = std::move(instance);
    rec.verdict = Verdict::Fail;
    rec.witness = Json{{"error", e.what()}};
    push(std::move(rec));
  }

 private:
  void push(ClaimRecord rec) {
    const auto now = Clock::now();
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    report_.claims.push_back(std::move(rec));
  }

  AuditReport& report_;
  const AuditOptions& opts_;
  Clock::time_point last_ = Clock::now();
};

struct RingCtx {
  RingCtx(const AuditOptions& o, const CorpusEntry& e)
      : opts(o),
        entry(e),
        ring(e.ring),
        r(*e.ring),
        lat(e.ring->lattice()),
        expr(e.ring->expression()),
        rng(o.seed ^ fnv1a(expr)) {}

  const AuditOptions& opts;
  const CorpusEntry& entry;
  RingPtr ring;
  const FiniteRing& r;
  const IdealLattice& lat;
  std::string expr;
  std::mt19937_64 rng;

  std::vector<MultiplicativeSet> sets;
  std::vector<bool> strong;  // definitional test per set
  std::vector<bool> heavy;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;

  const std::vector<ElemSet>& def_table() {
    if (!def_table_) def_table_ = &definitional_witness_table(r);
    return *def_table_;
  }
  const std::vector<ElemSet>& colon_table() {
    if (colon_table_.empty())
      for (std::size_t i = 0; i < lat.size(); ++i) colon_table_.push_back(s_prime_witnesses_colon(r, lat[i]));
    return colon_table_;
  }
  const RingHom& quotient_map(std::size_t ideal) {
    auto& slot = quotients_[ideal];
    if (!slot) slot = RingHom::quotient_map(FiniteRing::quotient(ring, lat[ideal]));
    return *slot;
  }

 private:
  const std::vector<ElemSet>* def_table_ = nullptr;
  std::vector<ElemSet> colon_table_;
  std::map<std::size_t, std::optional<RingHom>> quotients_;
};

struct SetCtx {
  RingCtx& rc;
  const MultiplicativeSet& s;
  bool strong;
  bool heavy;
  std::string instance;
  std::optional<LocalizedRing> loc;

  /// sat[i] = {a : sa ∈ I_i for some s ∈ S}, the contraction of S^-1 I_i read
  /// off the definition of fractions; sat_index[i] is its lattice index.
  std::vector<ElemSet> sat;
  std::vector<std::size_t> sat_index;
  bool sat_ideals = true;

  void saturate_all() {
    if (!sat.empty()) return;
    const auto& r = rc.r;
    std::vector<ElemSet> multiples(r.size());
    for (Elem a : r.elements())
      for (Elem x : s.elements()) multiples[idx(a)].insert(r.mul(x, a));
    for (std::size_t i = 0; i < rc.lat.size(); ++i) {
      ElemSet out;
      for (Elem a : r.elements())
        if (multiples[idx(a)].intersects(rc.lat[i])) out.insert(a);
      const auto k = rc.lat.index_of(out);
      sat_ideals = sat_ideals && k.has_value();
      sat.push_back(out);
      sat_index.push_back(k.value_or(rc.lat.unit_index()));
    }
  }
};

Certificate make(std::string_view id, std::string instance) {
  Certificate c;
  c.claim_id = std::string(id);
  c.instance = std::move(instance);
  return c;
}

// ---------------------------------------------------------------------------
// Ring-level claims

void ring_axioms(RingCtx& rc, Recorder& rec) {
  auto c = make("ring.axioms", rc.expr);
  c.add("commutative ring axioms on all triples", rc.r.verify_axioms(), Json{{"size", rc.r.size()}});
  bool ideals_ok = true;
  Json bad;
  for (std::size_t i = 0; i < rc.lat.size(); ++i)
    if (!is_ideal_set(rc.r, rc.lat[i])) {
      ideals_ok = false;
      bad = elems(rc.r, rc.lat[i]);
    }
  c.add("every lattice entry is an ideal", ideals_ok, bad);
  c.add("lattice runs from 0 to R", rc.lat[rc.lat.zero_index()].size() == 1 && rc.lat[rc.lat.unit_index()] == rc.r.all());
  bool units_ok = true;
  for (Elem u : rc.r.units()) units_ok = units_ok && rc.r.inverse(u).has_value();
  c.add("units are invertible", units_ok);
  rec.add(c);
}

void strongly_zero_dimensional(RingCtx& rc, Recorder& rec) {
  auto c = make("cor.strongly-zero-dimensional", rc.expr);
  const auto rep = zero_dimensional_report(rc.ring);
  static const std::array<const char*, 6> names{
      "(1) every prime is strongly prime",
      "(2) primes are maximal and maximals strongly prime",
      "(3) comaximal meet property",
      "(4) principal-family property",
      "(5) zero-dimensional and quasi semi-local",
      "(6) every R - P strongly multiplicative",
  };
  const auto conds = rep.conditions();
  for (std::size_t k = 0; k < conds.size(); ++k) c.add(names[k], conds[k]);
  c.add("conditions pairwise equivalent", rep.all_agree());
  rec.add(c);
}

void strongly_prime_multiplicative(RingCtx& rc, Recorder& rec) {
  auto c = make("thm.strongly-prime-multiplicative", rc.expr);
  for (auto pi : rc.lat.primes()) {
    const Ideal p(rc.ring, rc.lat[pi]);
    // Strongly prime, decided from ideal families without touching R - P.
    bool strongly_prime;
    if (rc.r.size() <= 16) {
      strongly_prime = is_strongly_prime_by_principal_families(p);
    } else {
      ElemSet meet = rc.r.all();
      for (std::size_t j = 0; j < rc.lat.size(); ++j)
        if (!rc.lat[j].subset_of(p.elements())) meet &= rc.lat[j];
      strongly_prime = !meet.subset_of(p.elements());
    }
    const auto comp = from_prime_complement(p);
    const bool mmc = strongly_multiplicative_mmc(comp).holds;
    const bool def = strongly_multiplicative_def(comp).holds;
    const Json w{{"prime", p.format()}, {"strongly_prime", strongly_prime}, {"complement_mmc", mmc}};
    c.add("P strongly prime => R - P strongly multiplicative", !strongly_prime || (mmc && def), w);
    c.add("R - P strongly multiplicative => P strongly prime", !(mmc || def) || strongly_prime, w);
  }
  rec.add(c);
}

void total_quotient(RingCtx& rc, Recorder& rec) {
  auto c = make("prop.total-quotient", rc.expr);
  const auto reg = from_elements(rc.ring, rc.r.regular_elements());
  const bool reg_strong = strongly_multiplicative_def(reg).holds;
  c.add("R total quotient ring <=> Reg(R) strongly multiplicative", rc.r.is_total_quotient_ring() == reg_strong,
        Json{{"total_quotient", rc.r.is_total_quotient_ring()}, {"reg_strong", reg_strong}});
  bool inside = true;
  Json w;
  for (std::size_t i = 0; i < rc.sets.size(); ++i) {
    const auto& s = rc.sets[i];
    if (rc.strong[i] && s.elements().subset_of(rc.r.regular_elements()) && !s.subset_of_units()) {
      inside = false;
      w = s.format();
    }
  }
  c.add("strongly multiplicative S inside Reg(R) lies in u(R)", inside, w);
  rec.add(c);
}

// ---------------------------------------------------------------------------
// Per multiplicative set

void max_multiple(SetCtx& sc, Recorder& rec) {
  const auto& r = sc.rc.r;
  auto c = make("prop.max-multiple", sc.instance);
  const auto def = strongly_multiplicative_def(sc.s);
  const auto mmc = strongly_multiplicative_mmc(sc.s);
  c.add("definitional test = maximal multiple test", def.holds == mmc.holds,
        Json{{"definitional", def.holds}, {"maximal_multiple", mmc.holds},
             {"t", mmc.witness ? Json(r.format(*mmc.witness)) : Json(nullptr)}});
  if (mmc.witness) {
    bool divides_all = true;
    for (Elem x : sc.s.elements()) divides_all = divides_all && r.divides(x, *mmc.witness);
    c.add("s | t for every s in S", divides_all, r.format(*mmc.witness));
    c.add("t lies in (∩ sR) ∩ S", def.intersection.contains(*mmc.witness) && sc.s.contains(*mmc.witness));
  }
  rec.add(c);
}

void finite_sets(SetCtx& sc, Recorder& rec) {
  auto c = make("ex.finite-sets", sc.instance);
  c.add("a finite multiplicative set is strongly multiplicative", sc.strong, Json{{"size", sc.s.size()}});
  if (sc.s.subset_of_units()) c.add("a set of units is strongly multiplicative", strongly_multiplicative_mmc(sc.s).holds);
  rec.add(c);
}

void jacobson_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.strong) return;
  auto c = make("prop.jacobson", sc.instance);
  const auto& jac = sc.rc.lat.jacobson();
  const ElemSet hit = jac & sc.s.elements();
  c.add("S ∩ Jac(R) = ∅", hit.empty(),
        hit.empty() ? Json(elems(sc.rc.r, jac)) : Json{{"meets_at", sc.rc.r.format(hit.first())}});
  c.add("jacobson_disjoint agrees", jacobson_disjoint(sc.s) == hit.empty());
  rec.add(c);
}

void indecomposable_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.rc.r.is_indecomposable() || !sc.strong) return;
  auto c = make("prop.indecomposable", sc.instance);
  const ElemSet outside = sc.s.elements() - sc.rc.r.units();
  c.add("S ⊆ u(R)", outside.empty(), outside.empty() ? Json(nullptr) : Json(sc.rc.r.format(outside.first())));
  rec.add(c);
}

void saturation_claim(SetCtx& sc, Recorder& rec) {
  const auto& r = sc.rc.r;
  auto c = make("thm.saturation", sc.instance);
  ElemSet brute;
  for (Elem a : r.elements())
    for (Elem x : r.elements())
      if (sc.s.contains(r.mul(a, x))) {
        brute.insert(a);
        break;
      }
  const auto sat = saturation(sc.s);
  c.add("saturation = {r : rx ∈ S for some x}", sat.elements == brute, elems(r, sat.elements));
  c.add("saturation = R minus the primes missing S", saturation_via_primes(sc.s) == brute);
  c.add("classification present iff S strongly multiplicative", sat.form.has_value() == sc.strong);
  if (sat.form) {
    const auto& f = *sat.form;
    Json w{{"kind", to_string(f.kind)}, {"idempotent", r.format(f.idempotent)}, {"side", to_string(f.side)}};
    c.add("classified form describes the saturation", saturation_from_form(r, f) == brute, w);
    if (r.is_indecomposable()) c.add("indecomposable ring: saturation = u(R)", brute == r.units(), w);
    else
      c.add("decomposable ring: u(R1) x R2, R1 x u(R2) or u(R1) x u(R2)",
            f.kind == SaturationKind::UnitsTimesFactor || brute == r.units(), w);
    const auto closed = from_elements(sc.rc.ring, brute);
    c.add("saturation is strongly multiplicative", strongly_multiplicative_def(closed).holds);
  }
  rec.add(c);
}

void localization_intersection(SetCtx& sc, Recorder& rec) {
  if (!sc.strong) return;
  auto& rc = sc.rc;
  const auto& r = rc.r;
  const auto& lat = rc.lat;
  const std::size_t n = lat.size();
  sc.saturate_all();
  auto c = make("thm.localization-intersection", sc.instance);
  c.add("S^-1 I ∩ R is an ideal for every I", sc.sat_ideals);

  // Every pair by fractions.
  Json bad;
  for (std::size_t i = 0; i < n && bad.is_null(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sc.sat[lat.meet(i, j)] != (sc.sat[i] & sc.sat[j])) {
        bad = Json{{"I", elems(r, lat[i])}, {"J", elems(r, lat[j])}};
        break;
      }
  c.add("S^-1(I ∩ J) = S^-1 I ∩ S^-1 J for all pairs, by fractions", bad.is_null(),
        bad.is_null() ? Json{{"pairs", n * n}} : bad);

  // Whole family of ideals, and {sR : s ∈ S}: 1 lies in every S^-1(sR), so
  // equality forces ∩ sR to meet S.
  ElemSet sat_meet = r.all();
  for (std::size_t k = 0; k < n; ++k) sat_meet &= sc.sat[k];
  c.add("all ideals: S^-1(∩J) = ∩S^-1 J, by fractions", sc.sat[0] == sat_meet, elems(r, sat_meet));
  ElemSet meet_sr = r.all();
  for (Elem x : sc.s.elements()) meet_sr &= r.principal(x);
  c.add("family {sR}: ∩ sR meets S", meet_sr.intersects(sc.s.elements()), elems(r, meet_sr));

  if (sc.heavy && sc.loc) {
    auto check_family = [&](const std::vector<std::size_t>& fam, const char* name) {
      std::vector<Ideal> ideals;
      for (auto k : fam) ideals.emplace_back(rc.ring, lat[k]);
      const auto lib = check_intersection_commutes(*sc.loc, ideals);
      Json w = lib.checks.front().witness;
      w["family"] = Json::array();
      for (auto k : fam) w["family"].push_back(elems(r, lat[k]));
      c.add(std::string(name) + ": S^-1(∩J) = ∩S^-1 J in eR", lib.passed(), w);
    };
    for (auto [i, j] : rc.pairs) check_family({i, j}, "pair");
    for (const auto& t : rc.triples) check_family({t[0], t[1], t[2]}, "triple");
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    check_family(all, "all ideals");
  }
  rec.add(c);
}

void colon_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.strong) return;
  auto& rc = sc.rc;
  const auto& r = rc.r;
  const auto& lat = rc.lat;
  const std::size_t n = lat.size();
  const bool mutated = rc.opts.mutate == "colon";
  sc.saturate_all();
  auto c = make("prop.colon", sc.instance);
  // Contractions to R: S^-1(I:J) ↔ sat(I:J), (S^-1 I : S^-1 J) ↔ (sat(I) : J).
  Json bad;
  for (std::size_t i = 0; i < n && bad.is_null(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ElemSet& lhs = sc.sat[mutated ? i : lat.colon(i, j)];
      const ElemSet& rhs = lat[lat.colon(sc.sat_index[i], j)];
      if (lhs != rhs) {
        const ElemSet diff = (lhs - rhs) | (rhs - lhs);
        bad = Json{{"I", elems(r, lat[i])}, {"J", elems(r, lat[j])}, {"lhs", elems(r, lhs)},
                   {"rhs", elems(r, rhs)}, {"differs_at", r.format(diff.first())}};
        break;
      }
    }
  c.add("S^-1(I:J) = (S^-1 I : S^-1 J) for all pairs, by fractions", bad.is_null(),
        bad.is_null() ? Json{{"pairs", n * n}} : bad);
  if (sc.heavy && sc.loc && !mutated) {
    for (auto [i, j] : rc.pairs) {
      const auto lib = check_colon_commutes(*sc.loc, Ideal(rc.ring, lat[i]), Ideal(rc.ring, lat[j]));
      c.add("S^-1(I:J) = (S^-1 I : S^-1 J) in eR", lib.passed(), lib.checks.front().witness);
    }
  }
  rec.add(c);
}

void contraction_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.strong) return;
  auto& rc = sc.rc;
  const auto& r = rc.r;
  sc.saturate_all();
  const Elem t = *strongly_multiplicative_mmc(sc.s).witness;
  auto c = make("prop.contraction", sc.instance);
  Json bad;
  for (std::size_t i = 0; i < rc.lat.size() && bad.is_null(); ++i)
    if (sc.sat[i] != colon_by(r, rc.lat[i], std::array<Elem, 1>{t}))
      bad = Json{{"I", elems(r, rc.lat[i])}, {"t", r.format(t)}};
  c.add("{a : sa ∈ I for some s} = (I:t) for every I", bad.is_null(),
        bad.is_null() ? Json{{"t", r.format(t)}} : bad);
  if (sc.heavy && sc.loc) {
    for (std::size_t i = 0; i < rc.lat.size(); ++i) {
      const auto lib = check_contraction(*sc.loc, Ideal(rc.ring, rc.lat[i]));
      c.add("S^-1 I ∩ R = (I:t) and (I:s) ⊆ (I:t) in eR", lib.passed(),
            lib.passed() ? lib.checks.front().witness : lib.first_failure()->witness);
    }
  }
  rec.add(c);
}

void fractions_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.heavy || !sc.loc || sc.rc.r.size() > 12) return;
  auto cert = check_against_fractions(*sc.loc);
  cert.claim_id = "localization.fractions";
  cert.instance = sc.instance;
  rec.add(cert);
}

/// A few other sets T of the same ring for the two-set claims.
std::vector<std::size_t> partner_sets(SetCtx& sc) {
  auto& rc = sc.rc;
  std::vector<std::size_t> idxs(rc.sets.size());
  for (std::size_t k = 0; k < idxs.size(); ++k) idxs[k] = k;
  std::vector<std::size_t> out;
  std::sample(idxs.begin(), idxs.end(), std::back_inserter(out), 4, rc.rng);
  return out;
}

void localization_mulset_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.heavy || !sc.loc) return;
  auto& rc = sc.rc;
  auto c = make("prop.localization", sc.instance);
  for (auto k : partner_sets(sc)) {
    const auto& t = rc.sets[k];
    if (!rc.strong[k]) continue;
    std::optional<MultiplicativeSet> st;
    try {
      st = product_set(sc.s, t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ContainsZero) throw;
      continue;
    }
    const auto img = localized_mulset(*sc.loc, t);
    c.add("S^-1 T strongly multiplicative in S^-1 R", strongly_multiplicative_def(img).holds,
          Json{{"T", t.format()}, {"image", elems(*sc.loc->ring(), img.elements())}});
  }
  if (!c.checks.empty()) rec.add(c);
}

void st_product_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.heavy || !sc.strong) return;
  auto& rc = sc.rc;
  auto c = make("prop.st-product", sc.instance);
  for (auto k : partner_sets(sc)) {
    if (!rc.strong[k]) continue;
    try {
      const auto st = product_set(sc.s, rc.sets[k]);
      c.add("ST strongly multiplicative", strongly_multiplicative_mmc(st).holds,
            Json{{"T", rc.sets[k].format()}, {"ST", st.format()}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ContainsZero) throw;
    }
  }
  if (!c.checks.empty()) rec.add(c);
}

void sprime_agreement(SetCtx& sc, Recorder& rec) {
  auto& rc = sc.rc;
  auto c = make("sprime.agreement", sc.instance);
  const auto& def = rc.def_table();
  const auto& col = rc.colon_table();
  const auto S = sc.s.elements();
  for (std::size_t i = 0; i < rc.lat.size(); ++i) {
    if (rc.lat[i].intersects(S)) continue;
    const ElemSet a = def[i] & S, b = col[i] & S;
    Json w{{"ideal", elems(rc.r, rc.lat[i])}};
    if (!a.empty()) w["s"] = rc.r.format(a.first());
    c.add("definitional and colon S-prime tests agree", a.empty() == b.empty(), std::move(w));
  }
  if (!c.checks.empty()) rec.add(c);
}

void s_minimal_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.heavy || !sc.strong) return;
  auto cert = check_s_minimal_theorem(sc.s);
  cert.instance = sc.instance;
  rec.add(cert);
}

void algorithm1_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.rc.r.as<ProductNode>() || !sc.strong) return;
  std::vector<Algorithm1Entry> entries;
  try {
    entries = algorithm1(sc.s);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotApplicable) return;
    throw;
  }
  const auto& r = sc.rc.r;
  auto c = make("alg.1", sc.instance);
  const auto brute = s_minimal_primes(sc.s);
  std::vector<ElemSet> a, b;
  for (const auto& e : entries) a.push_back(e.ideal.elements());
  for (const auto& p : brute) b.push_back(p.elements());
  Json produced = Json::array();
  for (const auto& x : a) produced.push_back(elems(r, x));
  c.add("output = brute-force S-minimal primes", a == b, produced);
  for (const auto& e : entries) {
    const auto [x, y] = e.witness;
    const bool ok = e.ideal.contains(r.mul(x, y)) && !e.ideal.contains(x) && !e.ideal.contains(y);
    c.add("output ideal is not prime", ok && !is_prime(e.ideal),
          Json{{"ideal", elems(r, e.ideal.elements())}, {"a", r.format(x)}, {"b", r.format(y)}});
  }
  rec.add(c);
}

void krull_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.strong) return;
  auto& rc = sc.rc;
  const auto& r = rc.r;
  auto c = make("thm.strong-krull", sc.instance);
  for (std::size_t i = 0; i < rc.lat.size(); ++i) {
    if (rc.lat[i].intersects(sc.s.elements())) continue;
    const Ideal base(rc.ring, rc.lat[i]);
    const auto k = strong_krull(sc.s, base);
    bool all_max = true;
    Json w{{"I", elems(r, rc.lat[i])}, {"found", elems(r, k.found.elements())}};
    for (const auto& m : k.omega_maximal)
      if (!is_maximal(m)) {
        all_max = false;
        w["not_maximal"] = elems(r, m.elements());
      }
    c.add("maximal elements of Ω are maximal ideals", all_max && !k.omega_maximal.empty(), w);
    c.add("separating ideal found is maximal", k.is_maximal_ideal, w);
  }
  rec.add(c);
}

void chain_claim(SetCtx& sc, Recorder& rec) {
  if (!sc.heavy) return;
  auto& rc = sc.rc;
  const auto& def = rc.def_table();
  std::size_t done = 0;
  for (std::size_t i = 0; i < rc.lat.size() && done < 3; ++i) {
    if (rc.lat[i].intersects(sc.s.elements()) || !def[i].intersects(sc.s.elements())) continue;
    ++done;
    for (Elem g : sc.s.generators()) {
      auto cert = check_descending_chain(Ideal(rc.ring, rc.lat[i]), sc.s, g);
      cert.claim_id = "chain.s-prime-intersection";
      cert.instance = sc.instance + " | " + rc.r.format(rc.lat[i]) + " | s = " + rc.r.format(g);
      rec.add(cert);
    }
  }
}

// ---------------------------------------------------------------------------
// Transport along constructions and maps

void trivext_claim(RingCtx& rc, Recorder& rec) {
  const auto* t = rc.r.as<TrivExtNode>();
  if (t == nullptr) return;
  const auto base_sets = enumerate_multiplicative_sets(t->base);
  const auto submodules = t->module.all_submodules();
  for (const auto& s : base_sets) {
    auto c = make("thm.trivial-extension", rc.expr + " | " + s.format());
    const bool base_def = strongly_multiplicative_def(s).holds;
    const bool base_mmc = strongly_multiplicative_mmc(s).holds;
    for (const auto& n : submodules) {
      const auto lifted = lift_to_trivext(rc.ring, s, n);
      const bool def = strongly_multiplicative_def(lifted).holds;
      const bool mmc = strongly_multiplicative_mmc(lifted).holds;
      Json w{{"N", elems(*t->module.carrier(), n)}, {"lifted", def}, {"base", base_def}};
      c.add("S ∝ N strongly multiplicative => S strongly multiplicative", !def || base_def, w);
      c.add("S strongly multiplicative => S ∝ N strongly multiplicative", !base_def || def, w);
      c.add("both tests agree on S ∝ N", def == mmc && base_def == base_mmc, w);
    }
    rec.add(c);
  }
}

void amalgam_claim(RingCtx& rc, Recorder& rec) {
  const auto* a = rc.r.as<AmalgamNode>();
  if (a == nullptr) return;
  for (const auto& s : enumerate_multiplicative_sets(a->map.source())) {
    auto c = make("prop.amalgamated", rc.expr + " | " + s.format());
    const bool base = strongly_multiplicative_def(s).holds;
    const auto lifted = lift_to_amalgam(rc.ring, s);
    const bool def = strongly_multiplicative_def(lifted).holds;
    Json w{{"S'", elems(rc.r, lifted.elements())}, {"lifted", def}, {"base", base}};
    c.add("S' strongly multiplicative => S strongly multiplicative", !def || base, w);
    c.add("S strongly multiplicative => S' strongly multiplicative", !base || def, w);
    c.add("both tests agree on S'", def == strongly_multiplicative_mmc(lifted).holds, w);
    rec.add(c);
  }
}

void product_claim(RingCtx& rc, Recorder& rec) {
  const auto* p = rc.r.as<ProductNode>();
  if (p == nullptr) return;
  const auto left = enumerate_multiplicative_sets(p->left);
  const auto right = enumerate_multiplicative_sets(p->right);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 24) {
    std::vector<std::pair<std::size_t, std::size_t>> picked;
    std::sample(pairs.begin(), pairs.end(), std::back_inserter(picked), 24, rc.rng);
    pairs = std::move(picked);
  }
  for (auto [i, j] : pairs) {
    const auto s = product_with(rc.ring, left[i], right[j]);
    auto c = make("thm.car", rc.expr + " | " + left[i].format() + " x " + right[j].format());
    const bool both = strongly_multiplicative_def(left[i]).holds && strongly_multiplicative_def(right[j]).holds;
    const bool whole = strongly_multiplicative_def(s).holds;
    Json w{{"S", elems(rc.r, s.elements())}, {"S1_and_S2", both}, {"S1_x_S2", whole}};
    c.add("S1 x S2 strongly multiplicative => S1, S2 strongly multiplicative", !whole || both, w);
    c.add("S1, S2 strongly multiplicative => S1 x S2 strongly multiplicative", !both || whole, w);
    rec.add(c);
  }
}

/// Quotient maps R -> R/I for ideals I missing S.
void factor_claim(RingCtx& rc, Recorder& rec) {
  for (std::size_t k = 0; k < rc.sets.size(); ++k) {
    if (!rc.heavy[k] || !rc.strong[k]) continue;
    const auto& s = rc.sets[k];
    auto c = make("cor.factor", rc.expr + " | " + s.format());
    for (std::size_t i = 0; i + 1 < rc.lat.size(); ++i) {
      if (rc.lat[i].intersects(s.elements())) continue;
      const auto& q = rc.quotient_map(i);
      const auto img = image_under(q, s);
      c.add("image of S in R/I strongly multiplicative", strongly_multiplicative_def(img).holds,
            Json{{"I", elems(rc.r, rc.lat[i])}, {"image", elems(*q.target(), img.elements())}});
    }
    rec.add(c);
  }
}

/// Surjections: product projections and the Peirce projections R -> eR.
void homomorphism_claim(RingCtx& rc, Recorder& rec) {
  std::vector<RingHom> maps;
  if (rc.r.as<ProductNode>()) {
    maps.push_back(RingHom::projection(rc.ring, 0));
    maps.push_back(RingHom::projection(rc.ring, 1));
  }
  for (Elem e : rc.r.idempotents()) {
    if (e == rc.r.zero() || e == rc.r.one()) continue;
    const auto corner = FiniteRing::corner(rc.ring, e);
    const auto& members = corner->as<CornerNode>()->members;
    std::vector<Elem> table;
    for (Elem x : rc.r.elements()) {
      const auto it = std::lower_bound(members.begin(), members.end(), rc.r.mul(e, x));
      table.push_back(elem(static_cast<std::size_t>(it - members.begin())));
    }
    maps.push_back(RingHom::from_table(rc.ring, corner, std::move(table)));
  }
  if (maps.empty()) return;
  for (std::size_t k = 0; k < rc.sets.size(); ++k) {
    if (!rc.heavy[k] || !rc.strong[k]) continue;
    const auto& s = rc.sets[k];
    auto c = make("prop.homomorphism", rc.expr + " | " + s.format());
    for (const auto& f : maps) {
      const ElemSet img = f.image_of(s.elements());
      if (img.contains(f.target()->zero())) continue;
      const auto fs = image_under(f, s);
      c.add("f(S) strongly multiplicative", strongly_multiplicative_def(fs).holds,
            Json{{"target", f.target()->expression()}, {"image", elems(*f.target(), fs.elements())}});
    }
    if (!c.checks.empty()) rec.add(c);
  }
}

// ---------------------------------------------------------------------------
// Registry

using RingFn = void (*)(RingCtx&, Recorder&);
using SetFn = void (*)(SetCtx&, Recorder&);
using ReplayFn = Certificate (*)(int depth);

struct Registered {
  ClaimInfo info;
  RingFn ring = nullptr;
  SetFn set = nullptr;
  ReplayFn replay = nullptr;
};

Certificate replay1(int n) { return cxlab::replay_counterexample1(n); }
Certificate replay2(int n) { return zint::replay_counterexample2(n); }
Certificate replay3(int n) { return cxlab::replay_counterexample3(n); }
Certificate replay4(int n) { return zint::replay_counterexample4(n); }
Certificate replay_colon(int n) { return cxlab::replay_colon(n); }
Certificate replay_primes(int n) { return zint::replay_prime_family(std::max(50, n)); }

const std::vector<Registered>& registry() {
  using K = ClaimKind;
  static const std::vector<Registered> table{
      {{"ring.axioms", K::Ring, "finite ring tables satisfy the commutative ring axioms", ""}, ring_axioms},
      {{"cor.strongly-zero-dimensional", K::Ring,
        "the six characterizations of strongly zero-dimensional rings agree (and hold for finite rings)", ""},
       strongly_zero_dimensional},
      {{"thm.strongly-prime-multiplicative", K::Ring, "P strongly prime <=> R - P strongly multiplicative", ""},
       strongly_prime_multiplicative},
      {{"prop.total-quotient", K::Ring,
        "R total quotient ring <=> Reg(R) strongly multiplicative; strongly multiplicative S ⊆ Reg(R) lies in u(R)",
        ""},
       total_quotient},
      {{"prop.max-multiple", K::Set, "strongly multiplicative <=> maximal multiple condition", ""}, nullptr,
       max_multiple},
      {{"ex.finite-sets", K::Set, "finite multiplicative sets and sets of units are strongly multiplicative", ""},
       nullptr, finite_sets},
      {{"prop.jacobson", K::Set, "strongly multiplicative S misses Jac(R)", ""}, nullptr, jacobson_claim},
      {{"prop.indecomposable", K::Set, "indecomposable R: strongly multiplicative S ⊆ u(R)", ""}, nullptr,
       indecomposable_claim},
      {{"thm.saturation", K::Set, "saturation of a strongly multiplicative set and its classification", ""}, nullptr,
       saturation_claim},
      {{"thm.localization-intersection", K::Set, "S^-1 commutes with intersections of ideal families", ""},
       nullptr, localization_intersection},
      {{"prop.colon", K::Set, "S^-1(I:J) = (S^-1 I : S^-1 J) for strongly multiplicative S", ""}, nullptr,
       colon_claim},
      {{"prop.contraction", K::Set, "S^-1 I ∩ R = (I:t) and (I:s) ⊆ (I:t)", ""}, nullptr, contraction_claim},
      {{"localization.fractions", K::Set, "the eR model of S^-1 R agrees with formal fractions (|R| <= 12)", ""},
       nullptr, fractions_claim},
      {{"prop.localization", K::Set, "S^-1 T strongly multiplicative when T is and 0 ∉ ST", ""}, nullptr,
       localization_mulset_claim},
      {{"prop.st-product", K::Set, "ST strongly multiplicative when S, T are and 0 ∉ ST", ""}, nullptr,
       st_product_claim},
      {{"sprime.agreement", K::Set, "definitional and colon characterizations of S-prime agree", ""}, nullptr,
       sprime_agreement},
      {{"thm.s-minimal", K::Set, "structure of S-minimal primes for strongly multiplicative S", ""}, nullptr,
       s_minimal_claim},
      {{"alg.1", K::Set, "S-minimal primes of R1 x R2 from minimal primes of one factor; none is prime", ""},
       nullptr, algorithm1_claim},
      {{"thm.strong-krull", K::Set, "ideals maximal with respect to missing S are maximal ideals", ""}, nullptr,
       krull_claim},
      {{"chain.s-prime-intersection", K::Set, "the chain P ⊇ sP ⊇ s²P ⊇ ... stays S-prime, with its intersection",
        ""},
       nullptr, chain_claim},
      {{"thm.trivial-extension", K::Transport, "S ∝ N strongly multiplicative <=> S strongly multiplicative", ""},
       trivext_claim},
      {{"prop.amalgamated", K::Transport, "S' strongly multiplicative <=> S strongly multiplicative", ""},
       amalgam_claim},
      {{"thm.car", K::Transport, "S1 x S2 strongly multiplicative <=> S1 and S2 are", ""}, product_claim},
      {{"cor.factor", K::Transport, "the image of S in R/I is strongly multiplicative when I ∩ S = ∅", ""},
       factor_claim},
      {{"prop.homomorphism", K::Transport, "surjections carry strongly multiplicative sets to such sets", ""},
       homomorphism_claim},
      {{"ex.counterexample1", K::Replay,
        "Z[X]/Q, S = {2^n}: a descending chain of S-primes whose intersection 0 is not S-prime", ""},
       nullptr, nullptr, replay1},
      {{"ex.counterexample2", K::Replay, "Z, S = Z - 2Z: I_n = 2·3^n Z are S-prime and so is their intersection",
        ""},
       nullptr, nullptr, replay2},
      {{"ex.counterexample3", K::Replay, "Z[X]/Q, S = {2^n}: no S-minimal prime", ""}, nullptr, nullptr, replay3},
      {{"ex.counterexample4", K::Replay, "Z x Z, S = Reg(Z) x {1}: unique S-minimal prime 0 x Z", ""}, nullptr,
       nullptr, replay4},
      {{"ex.colon", K::Replay, "Z[X]/Q: S^-1(I:J) ≠ (S^-1 I : S^-1 J) for non-finitely generated J", ""}, nullptr,
       nullptr, replay_colon},
      {{"ex.prime-family", K::Replay, "Z, S = Z - {0}: localization does not commute with ∩ pZ", ""}, nullptr,
       nullptr, replay_primes},
      {{"ex.c01-krull-not-strongly-prime", K::Skip,
        "C[0,1] x R: the maximal ideal given by strong Krull separation need not be strongly prime",
        "docs/out-of-scope.md#c01-times-r"}},
      {{"ex.kxy-not-maximal", K::Skip, "k[X,Y], S = R - (X): (X) is maximal missing S but not a maximal ideal",
        "docs/out-of-scope.md#kxy"}},
      {{"ex.laurent-converse", K::Skip,
        "k[X], S = T = {X^n}: S^-1 T strongly multiplicative although T is not",
        "docs/out-of-scope.md#laurent-converse"}},
      {{"ex.jacobson-zpzq", K::Skip, "Z_(p) ∩ Z_(q): a multiplicative set meeting Jac(R) is not strongly multiplicative",
        "docs/out-of-scope.md#zp-cap-zq"}},
  };
  return table;
}

void add_ring(std::vector<CorpusEntry>& out, std::set<std::string>& seen, RingPtr ring, const char* family) {
  if (seen.insert(ring->expression()).second) out.push_back({std::move(ring), family});
}

/// Base rings for the constructions: |R| <= 8.
std::vector<RingPtr> small_rings() {
  std::vector<RingPtr> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(FiniteRing::zn(n));
  for (std::size_t k = 1; k <= 3; ++k) out.push_back(FiniteRing::boolean(k));
  out.push_back(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(2)));
  out.push_back(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)));
  out.push_back(FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(4)));
  return out;
}

/// Maps out of R used to build modules and amalgamations: the identity and
/// every quotient map R -> R/I with I proper and nonzero.
std::vector<RingHom> maps_from(const RingPtr& r) {
  std::vector<RingHom> out{RingHom::identity(r)};
  const auto& lat = r->lattice();
  for (std::size_t i = 1; i + 1 < lat.size(); ++i)
    out.push_back(RingHom::quotient_map(FiniteRing::quotient(r, lat[i])));
  return out;
}

std::string_view canonical_replay(std::string_view name) {
  static const std::map<std::string_view, std::string_view> aliases{
      {"counterexample1", "ex.counterexample1"}, {"counterexample2", "ex.counterexample2"},
      {"counterexample3", "ex.counterexample3"}, {"counterexample4", "ex.counterexample4"},
      {"colon", "ex.colon"},                     {"prime-family", "ex.prime-family"},
  };
  const auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

}  // namespace

std::string_view to_string(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::Ring: return "ring";
    case ClaimKind::Set: return "set";
    case ClaimKind::Transport: return "transport";
    case ClaimKind::Replay: return "replay";
    case ClaimKind::Skip: return "skip";
  }
  return "?";
}

std::vector<ClaimInfo> claim_registry() {
  std::vector<ClaimInfo> out;
  for (const auto& r : registry()) out.push_back(r.info);
  return out;
}

std::size_t AuditReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [v](const ClaimRecord& c) { return c.verdict == v; }));
}

std::size_t AuditReport::count(std::string_view claim_id, Verdict v) const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [&](const ClaimRecord& c) {
    return c.verdict == v && c.claim_id == claim_id;
  }));
}

Json AuditReport::to_json(bool with_timing) const {
  Json out;
  out["budget"] = budget;
  out["seed"] = seed;
  out["mutate"] = mutate.empty() ? Json(nullptr) : Json(mutate);
  out["summary"] = {{"pass", count(Verdict::Pass)},
                    {"fail", count(Verdict::Fail)},
                    {"skip", count(Verdict::Skip)},
                    {"corpus_rings", corpus_rings},
                    {"set_instances", set_instances}};
  if (with_timing) out["elapsed_ms"] = elapsed_ms;
  Json per_claim = Json::object();
  for (const auto& info : claim_registry()) {
    per_claim[info.id] = {{"kind", to_string(info.kind)},
                          {"pass", count(info.id, Verdict::Pass)},
                          {"fail", count(info.id, Verdict::Fail)},
                          {"skip", count(info.id, Verdict::Skip)}};
  }
  out["claims_by_id"] = per_claim;
  Json list = Json::array();
  for (const auto& c : claims) {
    Json j;
    j["claim_id"] = c.claim_id;
    j["instance"] = c.instance;
    j["verdict"] = to_string(c.verdict);
    j["checks"] = c.checks;
    j["witness"] = c.witness;
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    list.push_back(std::move(j));
  }
  out["claims"] = std::move(list);
  return out;
}

std::vector<CorpusEntry> build_corpus(std::size_t budget) {
  const std::size_t cap = std::min(budget, kDefaultAuditBudget);
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  for (std::size_t n = 2; n <= 30 && n <= budget; ++n) add_ring(out, seen, FiniteRing::zn(n), "Zn");
  for (std::size_t k = 1; k <= 4 && (std::size_t{1} << k) <= budget; ++k)
    add_ring(out, seen, FiniteRing::boolean(k), "bool");

  std::vector<RingPtr> products;
  for (std::size_t a = 2; a * a <= cap; ++a)
    for (std::size_t b = a; a * b <= cap; ++b) {
      products.push_back(FiniteRing::product(FiniteRing::zn(a), FiniteRing::zn(b)));
      add_ring(out, seen, products.back(), "product");
    }
  for (const auto& p : products) {
    const auto& lat = p->lattice();
    for (std::size_t i = 1; i + 1 < lat.size(); ++i) add_ring(out, seen, FiniteRing::quotient(p, lat[i]), "quotient");
  }

  for (const auto& r : small_rings()) {
    if (r->size() > 8) continue;
    for (const auto& f : maps_from(r)) {
      if (r->size() * f.target()->size() > cap) continue;
      add_ring(out, seen, FiniteRing::trivial_extension(r, RingModule(f)), "trivext");
    }
  }
  for (const auto& a : small_rings()) {
    for (const auto& f : maps_from(a)) {
      const auto& lat = f.target()->lattice();
      for (std::size_t j = 0; j < lat.size(); ++j) {
        if (a->size() * lat[j].size() > cap) continue;
        add_ring(out, seen, FiniteRing::amalgamation(f, lat[j]), "amalgam");
      }
    }
  }
  return out;
}

AuditReport run_audit(const AuditOptions& opts) {
  const auto start = Clock::now();
  AuditReport report;
  report.budget = opts.budget;
  report.seed = opts.seed;
  report.mutate = opts.mutate;
  Recorder rec(report, opts);
  const auto& reg = registry();

  bool need_rings = false;
  for (const auto& c : reg)
    if ((c.ring || c.set) && rec.enabled(c.info.id)) need_rings = true;

  if (need_rings) {
    const auto corpus = build_corpus(opts.budget);
    report.corpus_rings = corpus.size();
    for (const auto& entry : corpus) {
      RingCtx rc(opts, entry);
      rec.restart();
      bool enumerated = true;
      try {
        rc.sets = enumerate_multiplicative_sets(rc.ring);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
        enumerated = false;
      }
      for (const auto& s : rc.sets) rc.strong.push_back(strongly_multiplicative_def(s).holds);
      report.set_instances += rc.sets.size();

      // Seeded sample of sets for the per-ideal claims; {1} and the largest set always included.
      rc.heavy.assign(rc.sets.size(), false);
      if (!rc.sets.empty()) {
        std::vector<std::size_t> idxs(rc.sets.size());
        for (std::size_t k = 0; k < idxs.size(); ++k) idxs[k] = k;
        std::vector<std::size_t> picked;
        std::sample(idxs.begin(), idxs.end(), std::back_inserter(picked), opts.heavy_sets, rc.rng);
        for (auto k : picked) rc.heavy[k] = true;
        rc.heavy.front() = rc.heavy.back() = true;
      }
      const std::size_t n = rc.lat.size();
      if (n <= 12) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rc.pairs.emplace_back(i, j);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int k = 0; k < 96; ++k) rc.pairs.emplace_back(pick(rc.rng), pick(rc.rng));
      }
      {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int k = 0; k < 8; ++k) rc.triples.push_back({pick(rc.rng), pick(rc.rng), pick(rc.rng)});
      }

      for (const auto& c : reg) {
        if (!c.ring || !rec.enabled(c.info.id)) continue;
        if (!enumerated && (c.info.kind == ClaimKind::Transport || c.info.id == "prop.total-quotient")) {
          rec.skip(c.info.id, rc.expr, "multiplicative-set enumeration budget exceeded", "");
          continue;
        }
        try {
          c.ring(rc, rec);
        } catch (const std::exception& e) {
          rec.error(c.info.id, rc.expr, e);
        }
      }

      if (!enumerated) {
        for (const auto& c : reg)
          if (c.set && rec.enabled(c.info.id))
            rec.skip(c.info.id, rc.expr, "multiplicative-set enumeration budget exceeded", "");
        continue;
      }
      for (std::size_t k = 0; k < rc.sets.size(); ++k) {
        SetCtx sc{rc, rc.sets[k], rc.strong[k], rc.heavy[k], rc.expr + " | " + rc.sets[k].format(), std::nullopt, {}, {}, true};
        if (sc.heavy && sc.strong) sc.loc.emplace(sc.s);
        for (const auto& c : reg) {
          if (!c.set || !rec.enabled(c.info.id)) continue;
          try {
            c.set(sc, rec);
          } catch (const std::exception& e) {
            rec.error(c.info.id, sc.instance, e);
          }
        }
      }
    }
  }

  for (const auto& c : reg) {
    if (!rec.enabled(c.info.id)) continue;
    if (c.replay) {
      rec.restart();
      try {
        rec.add(c.replay(opts.depth));
      } catch (const std::exception& e) {
        rec.error(c.info.id, "replay", e);
      }
    } else if (c.info.kind == ClaimKind::Skip) {
      rec.skip(c.info.id, c.info.statement, "not reproducible on finite or symbolic instances", c.info.doc);
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

Certificate run_audit_one(std::string_view name, int depth) {
  const auto id = canonical_replay(name);
  for (const auto& c : registry())
    if (c.info.id == id && c.replay) return c.replay(depth);
  throw Error(ErrorKind::InvalidArgument,
              "unknown replay '" + std::string(name) +
                  "'; expected counterexample1..4, colon, prime-family or an ex.* claim id");
}

}  // namespace smul::cli

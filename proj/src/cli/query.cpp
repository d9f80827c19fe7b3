#include "smul/query.hpp"

#include "smul/audit.hpp"
#include "smul/dsl.hpp"
#include "smul/elaborate.hpp"
#include "smul/localization.hpp"
#include "smul/sprime.hpp"

namespace smul::cli {

namespace {

Json elements_json(const FiniteRing& r, const ElemSet& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(r.format(x));
  return out;
}

Json opt_elem(const FiniteRing& r, const std::optional<Elem>& x) { return x ? Json(r.format(*x)) : Json(nullptr); }

Json pair_json(const FiniteRing& r, std::pair<Elem, Elem> w) { return Json::array({r.format(w.first), r.format(w.second)}); }

[[noreturn]] void needs_finite(std::string_view command) {
  throw Error(ErrorKind::NotApplicable, std::string(command) + " is only available for finite rings here");
}

void require_args(std::string_view command, const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                  const char* usage) {
  if (args.size() < lo || args.size() > hi)
    throw Error(ErrorKind::InvalidArgument, "usage: smul " + std::string(command) + " " + usage);
}

Json header(std::string_view command, const EffectiveRing& ring, const std::string& set) {
  Json out;
  out["command"] = command;
  out["ring"] = describe(ring);
  if (!set.empty()) out["set"] = set;
  return out;
}

QueryResult strongmul(const EffectiveRing& ring, const std::string& set_text, const QueryOptions& opts) {
  const auto set_expr = dsl::parse_set(set_text);
  if (const auto* p = std::get_if<RingPtr>(&ring)) {
    const auto& r = **p;
    const auto s = eval_set(*p, set_expr);
    const auto def = strongly_multiplicative_def(s);
    const auto mmc = strongly_multiplicative_mmc(s);
    Json out = header("strongmul", ring, s.format());
    out["elements"] = elements_json(r, s.elements());
    out["verdict"] = def.holds;
    out["t"] = opt_elem(r, mmc.witness);
    out["witness"] = opt_elem(r, def.witness);
    out["intersection"] = elements_json(r, def.intersection);
    out["tests_agree"] = def.holds == mmc.holds;
    return {out};
  }
  if (std::holds_alternative<ZRing>(ring)) {
    const auto s = eval_z_set(set_expr);
    const auto def = zint::strongly_multiplicative_def(s, opts.depth.value_or(zint::kDefaultDepth));
    const auto mmc = zint::strongly_multiplicative_mmc(s, opts.depth.value_or(zint::kDefaultDepth));
    Json out = header("strongmul", ring, zint::format(s));
    out["verdict"] = def.holds;
    out["definitional"] = def.evidence;
    out["maximal_multiple"] = mmc.evidence;
    out["tests_agree"] = def.holds == mmc.holds;
    return {out};
  }
  if (std::holds_alternative<ZZRing>(ring)) {
    const auto s = eval_zz_set(set_expr);
    const auto a = zint::strongly_multiplicative_def(s.first, opts.depth.value_or(zint::kDefaultDepth));
    const auto b = zint::strongly_multiplicative_def(s.second, opts.depth.value_or(zint::kDefaultDepth));
    Json out = header("strongmul", ring, zint::format(s));
    out["verdict"] = a.holds && b.holds;
    out["components"] = Json::array({a.evidence, b.evidence});
    out["note"] = "S1 x S2 is strongly multiplicative iff both factors are";
    return {out};
  }
  needs_finite("strongmul");
}

QueryResult saturate(const EffectiveRing& ring, const std::string& set_text) {
  const auto* p = std::get_if<RingPtr>(&ring);
  if (p == nullptr) needs_finite("saturate");
  const auto& r = **p;
  const auto s = eval_set(*p, dsl::parse_set(set_text));
  const auto sat = saturation(s);
  Json out = header("saturate", ring, s.format());
  out["saturation"] = elements_json(r, sat.elements);
  if (sat.form) {
    out["form"] = {{"kind", to_string(sat.form->kind)},
                   {"idempotent", r.format(sat.form->idempotent)},
                   {"side", to_string(sat.form->side)}};
    out["form_matches"] = saturation_from_form(r, *sat.form) == sat.elements;
  } else {
    out["form"] = nullptr;
  }
  out["prime_union_matches"] = saturation_via_primes(s) == sat.elements;
  return {out};
}

QueryResult sprime(const EffectiveRing& ring, const std::string& set_text, const std::string& ideal_text) {
  const auto set_expr = dsl::parse_set(set_text);
  const auto gens = dsl::parse_ideal(ideal_text);
  if (const auto* p = std::get_if<RingPtr>(&ring)) {
    const auto& r = **p;
    const auto s = eval_set(*p, set_expr);
    const Ideal i(*p, eval_ideal(*p, gens));
    const auto def = is_s_prime(i, s, SPrimeMode::Definitional);
    const auto col = is_s_prime(i, s, SPrimeMode::ColonPrime);
    Json out = header("sprime", ring, s.format());
    out["ideal"] = name_ideal(r, i.elements());
    out["s_prime"] = def.has_value();
    out["witness"] = def ? Json(r.format(def->s)) : Json(nullptr);
    out["colon_witness"] = col ? Json(r.format(col->s)) : Json(nullptr);
    out["prime"] = is_prime(i);
    return {out};
  }
  if (std::holds_alternative<ZRing>(ring)) {
    const auto s = eval_z_set(set_expr);
    const auto i = eval_z_ideal(gens);
    const auto w = zint::is_s_prime_z(i, s);
    Json out = header("sprime", ring, zint::format(s));
    out["ideal"] = i.format();
    out["s_prime"] = w.has_value();
    out["witness"] = w ? Json(w->s) : Json(nullptr);
    out["colon"] = w ? Json(w->colon.format()) : Json(nullptr);
    out["prime"] = i.is_prime();
    return {out};
  }
  if (std::holds_alternative<ZZRing>(ring)) {
    const auto s = eval_zz_set(set_expr);
    const auto i = eval_zz_ideal(gens);
    const auto w = zint::is_s_prime_zz(i, s);
    Json out = header("sprime", ring, zint::format(s));
    out["ideal"] = i.format();
    out["s_prime"] = w.has_value();
    out["witness"] = w ? Json("(" + std::to_string(w->first) + "," + std::to_string(w->second) + ")") : Json(nullptr);
    return {out};
  }
  needs_finite("sprime");
}

QueryResult sminimal(const EffectiveRing& ring, const std::string& set_text, const QueryOptions& opts) {
  const auto set_expr = dsl::parse_set(set_text);
  if (const auto* p = std::get_if<RingPtr>(&ring)) {
    const auto& r = **p;
    const auto s = eval_set(*p, set_expr);
    std::optional<std::vector<Algorithm1Entry>> alg;
    try {
      alg = algorithm1(s);
    } catch (const Error&) {
    }
    Json list = Json::array();
    for (const auto& m : s_minimal_primes(s)) {
      Json entry;
      entry["ideal"] = name_ideal(r, m.elements());
      const bool prime = is_prime(m);
      entry["prime"] = prime;
      std::optional<std::pair<Elem, Elem>> w;
      if (!prime && alg) {
        const auto [a, b] = alg->front().witness;
        if (m.contains(r.mul(a, b)) && !m.contains(a) && !m.contains(b)) w = alg->front().witness;
      }
      if (!prime && !w) w = non_prime_witness(m);
      entry["witness"] = w ? pair_json(r, *w) : Json(nullptr);
      list.push_back(entry);
    }
    Json out = header("sminimal", ring, s.format());
    out["s_minimal_primes"] = list;
    return {out};
  }
  if (std::holds_alternative<ZRing>(ring)) {
    const auto s = eval_z_set(set_expr);
    Json out = header("sminimal", ring, zint::format(s));
    out["s_minimal_primes"] = Json::array({{{"ideal", "0"}, {"prime", true}, {"witness", nullptr}}});
    out["note"] = "0 is prime and misses S, so it is the unique S-minimal prime of Z";
    return {out};
  }
  if (std::holds_alternative<ZZRing>(ring)) {
    const auto s = eval_zz_set(set_expr);
    const auto c = zint::s_minimal_primes_zz(s, opts.depth.value_or(zint::kDefaultDepth));
    Json list = Json::array();
    for (const auto& m : c.minimal) {
      const bool prime = (m.first.is_unit() && m.second.is_prime()) || (m.second.is_unit() && m.first.is_prime());
      const auto w = zint::is_s_prime_zz(m, s);
      list.push_back({{"ideal", m.format()},
                      {"prime", prime},
                      {"s_witness", "(" + std::to_string(w->first) + "," + std::to_string(w->second) + ")"}});
    }
    Json out = header("sminimal", ring, zint::format(s));
    out["s_minimal_primes"] = list;
    out["window"] = opts.depth.value_or(zint::kDefaultDepth);
    return {out};
  }
  needs_finite("sminimal");
}

QueryResult run_algorithm1(const EffectiveRing& ring, const std::string& set_text) {
  const auto* p = std::get_if<RingPtr>(&ring);
  if (p == nullptr) needs_finite("algorithm1");
  const auto& r = **p;
  const auto s = eval_set(*p, dsl::parse_set(set_text));
  Json out = header("algorithm1", ring, s.format());
  std::vector<Algorithm1Entry> entries;
  try {
    entries = algorithm1(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotApplicable) throw;
    out["applicable"] = false;
    out["reason"] = e.what();
    return {out};
  }
  out["applicable"] = true;
  Json list = Json::array();
  std::vector<ElemSet> produced;
  for (const auto& e : entries) {
    list.push_back({{"ideal", name_ideal(r, e.ideal.elements())}, {"witness", pair_json(r, e.witness)}});
    produced.push_back(e.ideal.elements());
  }
  std::vector<ElemSet> brute;
  for (const auto& m : s_minimal_primes(s)) brute.push_back(m.elements());
  out["ideals"] = list;
  out["matches_brute_force"] = produced == brute;
  return {out};
}

QueryResult krull(const EffectiveRing& ring, const std::string& set_text, const std::string* ideal_text) {
  const auto* p = std::get_if<RingPtr>(&ring);
  if (p == nullptr) needs_finite("krull");
  const auto& r = **p;
  const auto s = eval_set(*p, dsl::parse_set(set_text));
  const Ideal i(*p, ideal_text ? eval_ideal(*p, dsl::parse_ideal(*ideal_text)) : ElemSet{r.zero()});
  const auto k = strong_krull(s, i);
  Json out = header("krull", ring, s.format());
  out["ideal"] = elements_json(r, i.elements());
  out["strongly_multiplicative"] = strongly_multiplicative_mmc(s).holds;
  out["found"] = elements_json(r, k.found.elements());
  out["maximal"] = k.is_maximal_ideal;
  Json chain = Json::array();
  for (const auto& c : k.chain) chain.push_back(elements_json(r, c.elements()));
  out["chain"] = chain;
  Json omega = Json::array();
  bool all_maximal = true;
  for (const auto& m : k.omega_maximal) {
    omega.push_back(elements_json(r, m.elements()));
    all_maximal = all_maximal && is_maximal(m);
  }
  out["omega_maximal"] = omega;
  out["omega_maximal_all_maximal"] = all_maximal;
  return {out};
}

QueryResult localize_query(const EffectiveRing& ring, const std::string& set_text, const std::string* ideal_text) {
  const auto set_expr = dsl::parse_set(set_text);
  if (const auto* p = std::get_if<RingPtr>(&ring)) {
    const auto& r = **p;
    const auto s = eval_set(*p, set_expr);
    const LocalizedRing l(s);
    Json out = header("localize", ring, s.format());
    out["t"] = r.format(l.t());
    out["idempotent"] = r.format(l.idempotent());
    out["localized_ring"] = l.ring()->expression();
    out["elements"] = elements_json(*l.ring(), l.ring()->all());
    if (ideal_text) {
      const Ideal i(*p, eval_ideal(*p, dsl::parse_ideal(*ideal_text)));
      const auto li = localize_ideal(l, i);
      out["ideal"] = elements_json(r, i.elements());
      out["localized_ideal"] = elements_json(*l.ring(), li.elements());
      out["contraction"] = elements_json(r, contract(l, li).elements());
    }
    return {out};
  }
  if (std::holds_alternative<ZRing>(ring)) {
    const auto s = eval_z_set(set_expr);
    Json out = header("localize", ring, zint::format(s));
    const auto inv = zint::inverted_primes(s);
    Json primes = Json::array();
    for (auto q : inv.listed) primes.push_back(q);
    out[inv.cofinite ? "primes_not_inverted" : "inverted_primes"] = primes;
    if (ideal_text) {
      const auto i = eval_z_ideal(dsl::parse_ideal(*ideal_text));
      out["ideal"] = i.format();
      out["contraction"] = zint::localized_contraction(i, s).format();
    }
    return {out};
  }
  needs_finite("localize");
}

QueryResult divides_query(const EffectiveRing& ring, const std::string& a, const std::string& b) {
  const auto ae = dsl::parse_elem(a);
  const auto be = dsl::parse_elem(b);
  const auto d = divides(ring, ae, be);
  Json out = header("divides", ring, "");
  out["a"] = dsl::print(ae);
  out["b"] = dsl::print(be);
  out["divides"] = d.divides;
  out["quotient"] = d.quotient.empty() ? Json(nullptr) : Json(d.quotient);
  return {out};
}

}  // namespace

const std::vector<std::string>& query_commands() {
  static const std::vector<std::string> commands{"strongmul", "saturate", "sprime",   "sminimal", "algorithm1",
                                                 "krull",     "localize", "divides", "audit-one"};
  return commands;
}

std::string name_ideal(const FiniteRing& r, const ElemSet& ideal) {
  if (const auto* z = r.as<ZnNode>()) {
    if (ideal.size() == 1) return "0";
    const auto n = std::to_string(z->modulus);
    const auto d = idx((ideal - ElemSet{r.zero()}).first());
    return d == 1 ? "Z" + n : std::to_string(d) + "Z" + n;
  }
  if (const auto* p = r.as<ProductNode>()) {
    ElemSet left, right;
    for (Elem x : ideal) {
      left.insert(r.component(x, 0));
      right.insert(r.component(x, 1));
    }
    const auto rs = name_ideal(*p->right, right);
    return name_ideal(*p->left, left) + " x " + (p->right->as<ProductNode>() ? "(" + rs + ")" : rs);
  }
  return Ideal(r.shared_from_this(), ideal).format();
}

QueryResult run_query(std::string_view command, const std::vector<std::string>& args, const QueryOptions& opts) {
  if (command == "audit-one") {
    require_args(command, args, 1, 1, "NAME");
    const auto cert = run_audit_one(args[0], opts.depth.value_or(kReplayDepth));
    return {cert.to_json(), cert.passed()};
  }
  if (args.empty()) throw Error(ErrorKind::InvalidArgument, "missing ring expression");
  const auto ring = elaborate(dsl::parse_ring(args[0]), opts.budget);
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  const std::string* third = rest.size() > 1 ? &rest[1] : nullptr;
  if (command == "strongmul") {
    require_args(command, rest, 1, 1, "RING SET");
    return strongmul(ring, rest[0], opts);
  }
  if (command == "saturate") {
    require_args(command, rest, 1, 1, "RING SET");
    return saturate(ring, rest[0]);
  }
  if (command == "sprime") {
    require_args(command, rest, 2, 2, "RING SET IDEAL");
    return sprime(ring, rest[0], rest[1]);
  }
  if (command == "sminimal") {
    require_args(command, rest, 1, 1, "RING SET");
    return sminimal(ring, rest[0], opts);
  }
  if (command == "algorithm1") {
    require_args(command, rest, 1, 1, "RING SET");
    return run_algorithm1(ring, rest[0]);
  }
  if (command == "krull") {
    require_args(command, rest, 1, 2, "RING SET [IDEAL]");
    return krull(ring, rest[0], third);
  }
  if (command == "localize") {
    require_args(command, rest, 1, 2, "RING SET [IDEAL]");
    return localize_query(ring, rest[0], third);
  }
  if (command == "divides") {
    require_args(command, rest, 2, 2, "RING A B");
    return divides_query(ring, rest[0], rest[1]);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + std::string(command) + "'");
}

}  // namespace smul::cli

#include "smul/elaborate.hpp"

#include <numeric>

namespace smul::cli {

using dsl::ElemExpr;
using dsl::RingExpr;
using dsl::SetExpr;

namespace {

void check_budget(std::size_t size, std::size_t budget, const std::string& what) {
  if (size > budget || size > kMaxRingSize)
    throw Error(ErrorKind::TooLarge, what + " has " + std::to_string(size) + " elements; budget is " +
                                         std::to_string(std::min(budget, kMaxRingSize)));
}

std::size_t to_size(std::int64_t n, const char* what) {
  if (n < 0 || n > static_cast<std::int64_t>(kMaxRingSize) * 4)
    throw Error(ErrorKind::TooLarge, std::string(what) + " " + std::to_string(n) + " is out of range");
  return static_cast<std::size_t>(n);
}

RingHom elaborate_map(const RingPtr& source, const RingPtr& target, const dsl::MapExpr& map) {
  std::vector<std::pair<Elem, Elem>> assignments;
  for (const auto& [a, b] : map) assignments.emplace_back(eval_elem(source, a), eval_elem(target, b));
  return RingHom::from_assignments(source, target, assignments);
}

/// Literal elements of a corner ring are written as base-ring elements.
Elem into_corner(const FiniteRing& r, const CornerNode& c, Elem base_value) {
  const auto it = std::lower_bound(c.members.begin(), c.members.end(), base_value);
  if (it == c.members.end() || *it != base_value)
    throw Error(ErrorKind::InvalidArgument, c.base->format(base_value) + " does not lie in " + r.expression());
  return elem(static_cast<std::size_t>(it - c.members.begin()));
}

Elem eval_tuple(const RingPtr& ring, const ElemExpr& e) {
  const auto& r = *ring;
  const auto& kids = e.kids;
  auto need = [&](std::size_t n) {
    if (kids.size() != n)
      throw Error(ErrorKind::InvalidArgument, "expected a " + std::to_string(n) + "-tuple in " + r.expression());
  };
  if (const auto* b = r.as<BooleanNode>()) {
    need(b->width);
    std::size_t bits = 0;
    for (const auto& k : kids) {
      const auto v = eval_int(k);
      bits = (bits << 1) | static_cast<std::size_t>(((v % 2) + 2) % 2);
    }
    return elem(bits);
  }
  if (const auto* p = r.as<ProductNode>()) {
    need(2);
    return r.pair(eval_elem(p->left, kids[0]), eval_elem(p->right, kids[1]));
  }
  if (const auto* t = r.as<TrivExtNode>()) {
    need(2);
    return r.pair(eval_elem(t->base, kids[0]), eval_elem(t->module.carrier(), kids[1]));
  }
  if (const auto* a = r.as<AmalgamNode>()) {
    need(2);
    return r.pair(eval_elem(a->map.source(), kids[0]), eval_elem(a->map.target(), kids[1]));
  }
  if (const auto* q = r.as<QuotientNode>()) return r.coset(eval_elem(q->base, e));
  if (const auto* c = r.as<CornerNode>()) return into_corner(r, *c, eval_elem(c->base, e));
  throw Error(ErrorKind::InvalidArgument, "tuples are not elements of " + r.expression());
}

zint::Int checked_add(zint::Int a, zint::Int b) {
  zint::Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer overflow");
  return out;
}

zint::Int checked_sub(zint::Int a, zint::Int b) {
  zint::Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer overflow");
  return out;
}

int exponent(const ElemExpr& e) {
  if (e.value > 4096) throw Error(ErrorKind::Overflow, "exponent too large");
  return static_cast<int>(e.value);
}

}  // namespace

EffectiveRing elaborate(const RingExpr& e, std::size_t budget) {
  switch (e.kind) {
    case RingExpr::Kind::Z: return ZRing{};
    case RingExpr::Kind::QPoly:
      if (e.n < 1 || e.n > 62) throw Error(ErrorKind::IndexOutOfBound, "qpoly index bound must lie in 1..62");
      return QPolyRing{static_cast<int>(e.n)};
    case RingExpr::Kind::Product: {
      const auto left = elaborate(e.kids[0], budget);
      const auto right = elaborate(e.kids[1], budget);
      if (std::holds_alternative<ZRing>(left) && std::holds_alternative<ZRing>(right)) return ZZRing{};
      const auto* l = std::get_if<RingPtr>(&left);
      const auto* r = std::get_if<RingPtr>(&right);
      if (l == nullptr || r == nullptr)
        throw Error(ErrorKind::UnsupportedFamily, "the only infinite product supported is Z x Z");
      check_budget((*l)->size() * (*r)->size(), budget, dsl::print(e));
      return FiniteRing::product(*l, *r);
    }
    default: return elaborate_finite(e, budget);
  }
}

RingPtr elaborate_finite(const RingExpr& e, std::size_t budget) {
  const auto finite = [&](const RingExpr& k) {
    const auto r = elaborate(k, budget);
    if (const auto* p = std::get_if<RingPtr>(&r)) return *p;
    throw Error(ErrorKind::InvalidArgument, dsl::print(k) + " is not a finite ring");
  };
  switch (e.kind) {
    case RingExpr::Kind::Zn: {
      const auto n = to_size(e.n, "modulus");
      check_budget(n, budget, dsl::print(e));
      return FiniteRing::zn(n);
    }
    case RingExpr::Kind::Bool: {
      if (e.n < 1) throw Error(ErrorKind::ZeroRing, "bool needs k >= 1");
      if (e.n > 8) throw Error(ErrorKind::TooLarge, "bool k > 8");
      check_budget(std::size_t{1} << e.n, budget, dsl::print(e));
      return FiniteRing::boolean(static_cast<std::size_t>(e.n));
    }
    case RingExpr::Kind::Product:
    case RingExpr::Kind::Z:
    case RingExpr::Kind::QPoly: {
      const auto r = elaborate(e, budget);
      if (const auto* p = std::get_if<RingPtr>(&r)) return *p;
      throw Error(ErrorKind::InvalidArgument, dsl::print(e) + " is not a finite ring");
    }
    case RingExpr::Kind::Quotient: {
      const auto base = finite(e.kids[0]);
      return FiniteRing::quotient(base, eval_ideal(base, e.ideal));
    }
    case RingExpr::Kind::TrivExt: {
      const auto base = finite(e.kids[0]);
      const auto carrier = finite(e.kids[1]);
      check_budget(base->size() * carrier->size(), budget, dsl::print(e));
      return FiniteRing::trivial_extension(base, RingModule(elaborate_map(base, carrier, e.map)));
    }
    case RingExpr::Kind::Amalg: {
      const auto a = finite(e.kids[0]);
      const auto b = finite(e.kids[1]);
      const auto j = eval_ideal(b, e.ideal);
      check_budget(a->size() * j.size(), budget, dsl::print(e));
      return FiniteRing::amalgamation(elaborate_map(a, b, e.map), j);
    }
    case RingExpr::Kind::Corner: {
      const auto base = finite(e.kids[0]);
      return FiniteRing::corner(base, eval_elem(base, e.element));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ring expression");
}

std::string describe(const EffectiveRing& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RingPtr>) return v->expression();
        else if constexpr (std::is_same_v<T, ZRing>) return "Z";
        else if constexpr (std::is_same_v<T, ZZRing>) return "Z x Z";
        else return "qpoly " + std::to_string(v.index_bound);
      },
      r);
}

Elem eval_elem(const RingPtr& ring, const ElemExpr& e) {
  const auto& r = *ring;
  switch (e.kind) {
    case ElemExpr::Kind::Integer:
      return r.from_integer(e.value);
    case ElemExpr::Kind::Variable:
      throw Error(ErrorKind::InvalidArgument, "variables only exist in qpoly rings");
    case ElemExpr::Kind::Tuple: return eval_tuple(ring, e);
    case ElemExpr::Kind::Coset: {
      const auto* q = r.as<QuotientNode>();
      if (q == nullptr) throw Error(ErrorKind::InvalidArgument, "[...] needs a quotient ring, got " + r.expression());
      return r.coset(eval_elem(q->base, e.kids[0]));
    }
    case ElemExpr::Kind::Add: return r.add(eval_elem(ring, e.kids[0]), eval_elem(ring, e.kids[1]));
    case ElemExpr::Kind::Sub: return r.sub(eval_elem(ring, e.kids[0]), eval_elem(ring, e.kids[1]));
    case ElemExpr::Kind::Mul: return r.mul(eval_elem(ring, e.kids[0]), eval_elem(ring, e.kids[1]));
    case ElemExpr::Kind::Neg: return r.neg(eval_elem(ring, e.kids[0]));
    case ElemExpr::Kind::Pow: return r.pow(eval_elem(ring, e.kids[0]), static_cast<std::uint64_t>(e.value));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown element expression");
}

ElemSet eval_ideal(const RingPtr& ring, const dsl::ElemList& gens) {
  std::vector<Elem> xs;
  for (const auto& g : gens) xs.push_back(eval_elem(ring, g));
  return span_set(*ring, xs);
}

MultiplicativeSet eval_set(const RingPtr& ring, const SetExpr& s) {
  const auto& r = *ring;
  switch (s.kind) {
    case SetExpr::Kind::Generated: {
      std::vector<Elem> xs;
      for (const auto& g : s.elems) xs.push_back(eval_elem(ring, g));
      return close(ring, xs);
    }
    case SetExpr::Kind::Complement: return from_prime_complement(Ideal(ring, eval_ideal(ring, s.elems)));
    case SetExpr::Kind::Regular: return from_elements(ring, r.regular_elements());
    case SetExpr::Kind::Units: return from_elements(ring, r.units());
    case SetExpr::Kind::Product: {
      const auto* p = r.as<ProductNode>();
      if (p == nullptr) throw Error(ErrorKind::InvalidArgument, "S1 x S2 needs a product ring, got " + r.expression());
      return product_with(ring, eval_set(p->left, s.kids[0]), eval_set(p->right, s.kids[1]));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown set expression");
}

zint::Int eval_int(const ElemExpr& e) {
  switch (e.kind) {
    case ElemExpr::Kind::Integer: return e.value;
    case ElemExpr::Kind::Add: return checked_add(eval_int(e.kids[0]), eval_int(e.kids[1]));
    case ElemExpr::Kind::Sub: return checked_sub(eval_int(e.kids[0]), eval_int(e.kids[1]));
    case ElemExpr::Kind::Mul: return zint::checked_mul(eval_int(e.kids[0]), eval_int(e.kids[1]));
    case ElemExpr::Kind::Neg: return checked_sub(0, eval_int(e.kids[0]));
    case ElemExpr::Kind::Pow: return zint::checked_pow(eval_int(e.kids[0]), exponent(e));
    default: throw Error(ErrorKind::InvalidArgument, dsl::print(e) + " is not an integer");
  }
}

std::pair<zint::Int, zint::Int> eval_int_pair(const ElemExpr& e) {
  using P = std::pair<zint::Int, zint::Int>;
  const auto bin = [&](auto op) {
    const P a = eval_int_pair(e.kids[0]);
    const P b = eval_int_pair(e.kids[1]);
    return P{op(a.first, b.first), op(a.second, b.second)};
  };
  switch (e.kind) {
    case ElemExpr::Kind::Integer: return {e.value, e.value};
    case ElemExpr::Kind::Tuple:
      if (e.kids.size() != 2) throw Error(ErrorKind::InvalidArgument, "elements of Z x Z are pairs");
      return {eval_int(e.kids[0]), eval_int(e.kids[1])};
    case ElemExpr::Kind::Add: return bin(checked_add);
    case ElemExpr::Kind::Sub: return bin(checked_sub);
    case ElemExpr::Kind::Mul: return bin(zint::checked_mul);
    case ElemExpr::Kind::Neg: {
      const P a = eval_int_pair(e.kids[0]);
      return {checked_sub(0, a.first), checked_sub(0, a.second)};
    }
    case ElemExpr::Kind::Pow: {
      const P a = eval_int_pair(e.kids[0]);
      return {zint::checked_pow(a.first, exponent(e)), zint::checked_pow(a.second, exponent(e))};
    }
    default: throw Error(ErrorKind::InvalidArgument, dsl::print(e) + " is not an element of Z x Z");
  }
}

zint::PrincipalIdeal eval_z_ideal(const dsl::ElemList& gens) {
  zint::Int g = 0;
  for (const auto& x : gens) g = zint::gcd(g, eval_int(x));
  return zint::PrincipalIdeal(g);
}

zint::ProductIdeal eval_zz_ideal(const dsl::ElemList& gens) {
  zint::Int a = 0, b = 0;
  for (const auto& x : gens) {
    const auto [u, v] = eval_int_pair(x);
    a = zint::gcd(a, u);
    b = zint::gcd(b, v);
  }
  return {zint::PrincipalIdeal(a), zint::PrincipalIdeal(b)};
}

zint::ZSet eval_z_set(const SetExpr& s) {
  switch (s.kind) {
    case SetExpr::Kind::Generated: {
      zint::IntMonoid m;
      for (const auto& g : s.elems) {
        const auto v = eval_int(g);
        if (v == 0) throw Error(ErrorKind::ContainsZero, "0 cannot generate a multiplicative set");
        if (v == 1) continue;
        if (v == -1) {
          m.sign_closure = true;
          continue;
        }
        m.generators.push_back(v);
      }
      return zint::checked_set(m);
    }
    case SetExpr::Kind::Complement: {
      const auto p = eval_z_ideal(s.elems);
      if (p.n == 0) return zint::Nonzero{};
      return zint::checked_set(zint::PrimeComplement{p.n});
    }
    case SetExpr::Kind::Regular: return zint::Nonzero{};
    case SetExpr::Kind::Units: return zint::IntMonoid{{}, true};
    case SetExpr::Kind::Product: break;
  }
  throw Error(ErrorKind::InvalidArgument, "S1 x S2 is not a subset of Z");
}

zint::ProductSet eval_zz_set(const SetExpr& s) {
  switch (s.kind) {
    case SetExpr::Kind::Product: return {eval_z_set(s.kids[0]), eval_z_set(s.kids[1])};
    case SetExpr::Kind::Regular: return {zint::Nonzero{}, zint::Nonzero{}};
    case SetExpr::Kind::Units: return {zint::IntMonoid{{}, true}, zint::IntMonoid{{}, true}};
    default: throw Error(ErrorKind::UnsupportedFamily, "sets of Z x Z must be written S1 x S2");
  }
}

cxlab::QPolyNF eval_qpoly(const ElemExpr& e, int index_bound) {
  using cxlab::QPolyNF;
  switch (e.kind) {
    case ElemExpr::Kind::Integer: return QPolyNF::constant(e.value, index_bound);
    case ElemExpr::Kind::Variable:
      if (e.value > index_bound) throw Error(ErrorKind::IndexOutOfBound, "X" + std::to_string(e.value) + " exceeds the index bound");
      return QPolyNF::variable(static_cast<int>(e.value), index_bound);
    case ElemExpr::Kind::Add: return cxlab::add(eval_qpoly(e.kids[0], index_bound), eval_qpoly(e.kids[1], index_bound));
    case ElemExpr::Kind::Sub: return cxlab::sub(eval_qpoly(e.kids[0], index_bound), eval_qpoly(e.kids[1], index_bound));
    case ElemExpr::Kind::Mul: return cxlab::mul(eval_qpoly(e.kids[0], index_bound), eval_qpoly(e.kids[1], index_bound));
    case ElemExpr::Kind::Neg: return cxlab::sub(QPolyNF::constant(0, index_bound), eval_qpoly(e.kids[0], index_bound));
    case ElemExpr::Kind::Pow: {
      const auto base = eval_qpoly(e.kids[0], index_bound);
      auto out = QPolyNF::constant(1, index_bound);
      for (int k = exponent(e); k > 0; --k) out = cxlab::mul(out, base);
      return out;
    }
    default: throw Error(ErrorKind::InvalidArgument, dsl::print(e) + " is not an element of qpoly");
  }
}

Divisibility divides(const EffectiveRing& ring, const ElemExpr& a_expr, const ElemExpr& b_expr) {
  if (const auto* p = std::get_if<RingPtr>(&ring)) {
    const auto& r = **p;
    const Elem a = eval_elem(*p, a_expr), b = eval_elem(*p, b_expr);
    for (Elem c : r.elements())
      if (r.mul(a, c) == b) return {true, r.format(c)};
    return {false, ""};
  }
  const auto z_divides = [](zint::Int a, zint::Int b) -> std::optional<zint::Int> {
    if (a == 0) return b == 0 ? std::optional<zint::Int>(0) : std::nullopt;
    if (b % a != 0) return std::nullopt;
    return b / a;
  };
  if (std::holds_alternative<ZRing>(ring)) {
    const auto q = z_divides(eval_int(a_expr), eval_int(b_expr));
    return q ? Divisibility{true, std::to_string(*q)} : Divisibility{};
  }
  if (std::holds_alternative<ZZRing>(ring)) {
    const auto a = eval_int_pair(a_expr), b = eval_int_pair(b_expr);
    const auto q1 = z_divides(a.first, b.first), q2 = z_divides(a.second, b.second);
    if (!q1 || !q2) return {};
    return {true, "(" + std::to_string(*q1) + "," + std::to_string(*q2) + ")"};
  }
  const int bound = std::get<QPolyRing>(ring).index_bound;
  const auto a = eval_qpoly(a_expr, bound);
  const auto b = eval_qpoly(b_expr, bound);
  for (int k = 0; k <= bound; ++k)
    if (a == cxlab::pow2(k, bound)) return {cxlab::member_pow2_principal(b, k), ""};
  throw Error(ErrorKind::UnsupportedDivisibility,
              "over qpoly only divisors 2^k with k <= " + std::to_string(bound) + " are decided");
}

}  // namespace smul::cli

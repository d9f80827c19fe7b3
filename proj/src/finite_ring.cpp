#include "smul/finite_ring.hpp"

#include <algorithm>
#include <sstream>

#include "smul/ideal.hpp"

namespace smul {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedDivisibility: return "UnsupportedDivisibility";
    case ErrorKind::NoIdempotent: return "NoIdempotent";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ZeroRing: return "ZeroRing";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ContainsZero: return "ContainsZero";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateChain: return "DegenerateChain";
    case ErrorKind::IndexOutOfBound: return "IndexOutOfBound";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void check_size(std::size_t n) {
  if (n > kMaxRingSize)
    throw Error(ErrorKind::TooLarge, "ring of size " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxRingSize));
}

using Table = std::vector<Elem>;

Table make_table(std::size_t n, auto&& op) {
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = op(elem(a), elem(b));
  return t;
}

bool closed_ideal(const FiniteRing& r, const ElemSet& xs) {
  if (!xs.contains(r.zero())) return false;
  for (Elem a : xs) {
    for (Elem b : xs)
      if (!xs.contains(r.add(a, b))) return false;
    for (Elem s : r.elements())
      if (!xs.contains(r.mul(s, a))) return false;
  }
  return true;
}

std::string paren_if_product(const RingPtr& r) {
  if (r->as<ProductNode>() != nullptr) return "(" + r->expression() + ")";
  return r->expression();
}

std::string atom(const RingPtr& r) {
  if (r->as<ProductNode>() != nullptr || r->as<QuotientNode>() != nullptr) return "(" + r->expression() + ")";
  return r->expression();
}

std::string format_map(const RingHom& f) {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : f.generating_assignments()) {
    if (!first) out += ", ";
    first = false;
    out += f.source()->format(x) + "->" + f.target()->format(y);
  }
  return out + "}";
}

std::string format_generators(const RingPtr& r, const ElemSet& ideal) {
  std::string out = "(";
  bool first = true;
  for (Elem g : ideal_generators(*r, ideal)) {
    if (!first) out += ", ";
    first = false;
    out += r->format(g);
  }
  return out + ")";
}

}  // namespace

// ---------------------------------------------------------------- RingHom

RingHom RingHom::from_table(RingPtr source, RingPtr target, std::vector<Elem> image) {
  const auto& a = *source;
  const auto& b = *target;
  if (image.size() != a.size()) throw Error(ErrorKind::NotAHomomorphism, "table size mismatch");
  for (Elem y : image)
    if (idx(y) >= b.size()) throw Error(ErrorKind::NotAHomomorphism, "image outside target");
  if (image[idx(a.one())] != b.one()) throw Error(ErrorKind::NotAHomomorphism, "1 does not map to 1");
  for (Elem x : a.elements()) {
    for (Elem y : a.elements()) {
      if (image[idx(a.add(x, y))] != b.add(image[idx(x)], image[idx(y)]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "not additive at (" + a.format(x) + ", " + a.format(y) + ")");
      if (image[idx(a.mul(x, y))] != b.mul(image[idx(x)], image[idx(y)]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "not multiplicative at (" + a.format(x) + ", " + a.format(y) + ")");
    }
  }
  return RingHom(std::move(source), std::move(target), std::move(image));
}

namespace {

// Closure of a partial assignment under +, * and negation. Returns the
// (possibly partial) table; -1 marks unassigned source elements.
std::vector<int> close_assignments(const FiniteRing& a, const FiniteRing& b,
                                   std::span<const std::pair<Elem, Elem>> assignments) {
  std::vector<int> img(a.size(), -1);
  std::vector<Elem> known;
  auto assign = [&](Elem x, Elem y) {
    if (img[idx(x)] == -1) {
      img[idx(x)] = static_cast<int>(idx(y));
      known.push_back(x);
    } else if (img[idx(x)] != static_cast<int>(idx(y))) {
      throw Error(ErrorKind::NotAHomomorphism,
                  "conflicting images for " + a.format(x) + ": " + b.format(elem(img[idx(x)])) + " and " +
                      b.format(y));
    }
  };
  assign(a.zero(), b.zero());
  assign(a.one(), b.one());
  for (auto [x, y] : assignments) {
    if (idx(x) >= a.size() || idx(y) >= b.size())
      throw Error(ErrorKind::NotAHomomorphism, "assignment outside the rings");
    assign(x, y);
  }
  for (std::size_t i = 0; i < known.size(); ++i) {
    const Elem x = known[i];
    const Elem fx = elem(img[idx(x)]);
    assign(a.neg(x), b.neg(fx));
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = known[j];
      const Elem fy = elem(img[idx(y)]);
      assign(a.add(x, y), b.add(fx, fy));
      assign(a.mul(x, y), b.mul(fx, fy));
    }
  }
  return img;
}

}  // namespace

RingHom RingHom::from_assignments(RingPtr source, RingPtr target,
                                  std::span<const std::pair<Elem, Elem>> assignments) {
  auto img = close_assignments(*source, *target, assignments);
  std::vector<Elem> table;
  table.reserve(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 0)
      throw Error(ErrorKind::NotAHomomorphism,
                  "assignments do not determine the image of " + source->format(elem(i)));
    table.push_back(elem(static_cast<std::size_t>(img[i])));
  }
  return from_table(std::move(source), std::move(target), std::move(table));
}

RingHom RingHom::identity(RingPtr ring) {
  std::vector<Elem> t;
  for (Elem x : ring->elements()) t.push_back(x);
  return RingHom(ring, ring, std::move(t));
}

RingHom RingHom::projection(RingPtr product, int side) {
  const auto* node = product->as<ProductNode>();
  if (node == nullptr) throw Error(ErrorKind::InvalidArgument, "projection needs a product ring");
  std::vector<Elem> t;
  for (Elem x : product->elements()) t.push_back(product->component(x, side));
  RingPtr target = side == 0 ? node->left : node->right;
  return RingHom(std::move(product), std::move(target), std::move(t));
}

RingHom RingHom::quotient_map(RingPtr quotient) {
  const auto* node = quotient->as<QuotientNode>();
  if (node == nullptr) throw Error(ErrorKind::InvalidArgument, "quotient_map needs a quotient ring");
  return RingHom(node->base, quotient, node->coset_of);
}

bool RingHom::is_surjective() const {
  ElemSet hit;
  for (Elem y : image_) hit.insert(y);
  return hit == target_->all();
}

ElemSet RingHom::image_of(const ElemSet& xs) const {
  ElemSet out;
  for (Elem x : xs) out.insert(image_[idx(x)]);
  return out;
}

std::vector<std::pair<Elem, Elem>> RingHom::generating_assignments() const {
  std::vector<std::pair<Elem, Elem>> chosen;
  for (;;) {
    auto img = close_assignments(*source_, *target_, chosen);
    auto missing = std::find(img.begin(), img.end(), -1);
    if (missing == img.end()) return chosen;
    const Elem x = elem(static_cast<std::size_t>(missing - img.begin()));
    chosen.emplace_back(x, image_[idx(x)]);
  }
}

// ---------------------------------------------------------------- RingModule

std::size_t RingModule::size() const { return carrier()->size(); }
Elem RingModule::add(Elem m, Elem n) const { return carrier()->add(m, n); }
Elem RingModule::act(Elem r, Elem m) const { return carrier()->mul(action_(r), m); }

ElemSet RingModule::span(std::span<const Elem> generators) const {
  ElemSet out{carrier()->zero()};
  for (Elem g : generators) {
    ElemSet cyclic;
    for (Elem r : scalars()->elements()) cyclic.insert(act(r, g));
    ElemSet grown = out;
    for (Elem c : cyclic) {
      if (grown.contains(c)) continue;
      for (Elem x : out) grown.insert(add(x, c));
    }
    out = grown;
  }
  return out;
}

bool RingModule::is_submodule(const ElemSet& xs) const {
  if (!xs.contains(carrier()->zero())) return false;
  for (Elem a : xs) {
    for (Elem b : xs)
      if (!xs.contains(add(a, b))) return false;
    for (Elem r : scalars()->elements())
      if (!xs.contains(act(r, a))) return false;
  }
  return true;
}

std::vector<ElemSet> RingModule::all_submodules() const {
  std::vector<ElemSet> cyclic;
  for (Elem m : carrier()->elements()) {
    std::array<Elem, 1> g{m};
    auto c = span(g);
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) cyclic.push_back(c);
  }
  std::vector<ElemSet> out = cyclic;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& c : cyclic) {
      ElemSet sum = out[i];
      for (Elem y : c) {
        if (sum.contains(y)) continue;
        for (Elem x : out[i]) sum.insert(add(x, y));
      }
      if (std::find(out.begin(), out.end(), sum) == out.end()) out.push_back(sum);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool RingModule::verify_axioms() const {
  const auto& r = *scalars();
  for (Elem m : carrier()->elements()) {
    if (act(r.one(), m) != m) return false;
    for (Elem a : r.elements()) {
      for (Elem b : r.elements()) {
        if (act(r.add(a, b), m) != add(act(a, m), act(b, m))) return false;
        if (act(r.mul(a, b), m) != act(a, act(b, m))) return false;
      }
      for (Elem n : carrier()->elements())
        if (act(a, add(m, n)) != add(act(a, m), act(a, n))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(Key, Descriptor desc, std::size_t n, Elem one, std::vector<Elem> add,
                       std::vector<Elem> mul)
    : desc_(std::move(desc)), n_(n), one_(one), add_(std::move(add)), mul_(std::move(mul)) {
  if (n_ < 2 || one_ == zero()) throw Error(ErrorKind::ZeroRing, "rings must satisfy 1 != 0");
  neg_.resize(n_);
  for (Elem a : elements())
    for (Elem b : elements())
      if (this->add(a, b) == zero()) {
        neg_[idx(a)] = b;
        break;
      }
  principal_.resize(n_);
  for (Elem a : elements()) {
    ElemSet p;
    for (Elem r : elements()) p.insert(this->mul(a, r));
    principal_[idx(a)] = p;
    if (p.contains(one_)) units_.insert(a);
    if (this->mul(a, a) == a) idempotents_.insert(a);
    bool regular = true;
    for (Elem r : elements())
      if (r != zero() && this->mul(a, r) == zero()) {
        regular = false;
        break;
      }
    if (regular) regular_.insert(a);
  }
}

FiniteRing::~FiniteRing() = default;

RingPtr FiniteRing::zn(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::ZeroRing, "Zn needs n >= 2");
  check_size(n);
  auto add = make_table(n, [n](Elem a, Elem b) { return elem((idx(a) + idx(b)) % n); });
  auto mul = make_table(n, [n](Elem a, Elem b) { return elem((idx(a) * idx(b)) % n); });
  return std::make_shared<const FiniteRing>(Key{}, ZnNode{n}, n, elem(1), std::move(add), std::move(mul));
}

RingPtr FiniteRing::boolean(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::ZeroRing, "bool needs k >= 1");
  if (k > 8) throw Error(ErrorKind::TooLarge, "bool k > 8");
  const std::size_t n = std::size_t{1} << k;
  auto add = make_table(n, [](Elem a, Elem b) { return elem(idx(a) ^ idx(b)); });
  auto mul = make_table(n, [](Elem a, Elem b) { return elem(idx(a) & idx(b)); });
  return std::make_shared<const FiniteRing>(Key{}, BooleanNode{k}, n, elem(n - 1), std::move(add),
                                            std::move(mul));
}

RingPtr FiniteRing::product(RingPtr left, RingPtr right) {
  const std::size_t m = right->size();
  const std::size_t n = left->size() * m;
  check_size(n);
  const auto& l = *left;
  const auto& r = *right;
  auto add = make_table(n, [&](Elem a, Elem b) {
    return elem(idx(l.add(elem(idx(a) / m), elem(idx(b) / m))) * m + idx(r.add(elem(idx(a) % m), elem(idx(b) % m))));
  });
  auto mul = make_table(n, [&](Elem a, Elem b) {
    return elem(idx(l.mul(elem(idx(a) / m), elem(idx(b) / m))) * m + idx(r.mul(elem(idx(a) % m), elem(idx(b) % m))));
  });
  const Elem one = elem(idx(l.one()) * m + idx(r.one()));
  return std::make_shared<const FiniteRing>(Key{}, ProductNode{std::move(left), std::move(right)}, n, one,
                                            std::move(add), std::move(mul));
}

RingPtr FiniteRing::quotient(RingPtr base, const ElemSet& ideal) {
  const auto& b = *base;
  if (!ideal.subset_of(b.all()) || !closed_ideal(b, ideal))
    throw Error(ErrorKind::NotAnIdeal, "quotient by a set that is not an ideal");
  if (ideal.contains(b.one())) throw Error(ErrorKind::ZeroRing, "quotient by the unit ideal");
  QuotientNode node{base, ideal, {}, std::vector<Elem>(b.size(), elem(0))};
  std::vector<bool> seen(b.size(), false);
  for (Elem x : b.elements()) {
    if (seen[idx(x)]) continue;
    const Elem c = elem(node.representative.size());
    node.representative.push_back(x);
    for (Elem i : ideal) {
      const Elem y = b.add(x, i);
      seen[idx(y)] = true;
      node.coset_of[idx(y)] = c;
    }
  }
  const std::size_t n = node.representative.size();
  auto add = make_table(n, [&](Elem p, Elem q) {
    return node.coset_of[idx(b.add(node.representative[idx(p)], node.representative[idx(q)]))];
  });
  auto mul = make_table(n, [&](Elem p, Elem q) {
    return node.coset_of[idx(b.mul(node.representative[idx(p)], node.representative[idx(q)]))];
  });
  const Elem one = node.coset_of[idx(b.one())];
  return std::make_shared<const FiniteRing>(Key{}, std::move(node), n, one, std::move(add), std::move(mul));
}

RingPtr FiniteRing::trivial_extension(RingPtr base, RingModule module) {
  if (module.scalars().get() != base.get())
    throw Error(ErrorKind::InvalidArgument, "module is not over the base ring");
  const std::size_t m = module.size();
  const std::size_t n = base->size() * m;
  check_size(n);
  const auto& r = *base;
  auto add = make_table(n, [&](Elem x, Elem y) {
    return elem(idx(r.add(elem(idx(x) / m), elem(idx(y) / m))) * m + idx(module.add(elem(idx(x) % m), elem(idx(y) % m))));
  });
  auto mul = make_table(n, [&](Elem x, Elem y) {
    const Elem a = elem(idx(x) / m);
    const Elem mm = elem(idx(x) % m);
    const Elem b = elem(idx(y) / m);
    const Elem nn = elem(idx(y) % m);
    return elem(idx(r.mul(a, b)) * m + idx(module.add(module.act(a, nn), module.act(b, mm))));
  });
  const Elem one = elem(idx(r.one()) * m);
  return std::make_shared<const FiniteRing>(Key{}, TrivExtNode{std::move(base), std::move(module)}, n, one,
                                            std::move(add), std::move(mul));
}

RingPtr FiniteRing::amalgamation(RingHom map, const ElemSet& ideal_of_target) {
  const auto& a = *map.source();
  const auto& b = *map.target();
  if (!ideal_of_target.subset_of(b.all()) || !closed_ideal(b, ideal_of_target))
    throw Error(ErrorKind::NotAnIdeal, "amalgamation needs an ideal of the target ring");
  AmalgamNode node{map, ideal_of_target, {}, std::vector<int>(a.size() * b.size(), -1)};
  for (Elem x : a.elements()) {
    ElemSet fibre;
    for (Elem j : ideal_of_target) fibre.insert(b.add(map(x), j));
    for (Elem y : fibre) node.pairs.emplace_back(x, y);
  }
  // pairs are already in lexicographic order: x ascending, fibre ascending.
  const std::size_t n = node.pairs.size();
  check_size(n);
  for (std::size_t i = 0; i < n; ++i)
    node.index_of_pair[idx(node.pairs[i].first) * b.size() + idx(node.pairs[i].second)] = static_cast<int>(i);
  auto lookup = [&](Elem x, Elem y) { return elem(static_cast<std::size_t>(node.index_of_pair[idx(x) * b.size() + idx(y)])); };
  auto add = make_table(n, [&](Elem p, Elem q) {
    auto [x1, y1] = node.pairs[idx(p)];
    auto [x2, y2] = node.pairs[idx(q)];
    return lookup(a.add(x1, x2), b.add(y1, y2));
  });
  auto mul = make_table(n, [&](Elem p, Elem q) {
    auto [x1, y1] = node.pairs[idx(p)];
    auto [x2, y2] = node.pairs[idx(q)];
    return lookup(a.mul(x1, x2), b.mul(y1, y2));
  });
  const Elem one = lookup(a.one(), b.one());
  return std::make_shared<const FiniteRing>(Key{}, std::move(node), n, one, std::move(add), std::move(mul));
}

RingPtr FiniteRing::corner(RingPtr base, Elem e) {
  const auto& b = *base;
  if (b.mul(e, e) != e) throw Error(ErrorKind::InvalidArgument, "corner ring needs an idempotent");
  if (e == b.zero()) throw Error(ErrorKind::ZeroRing, "corner ring at e = 0");
  CornerNode node{base, e, b.principal(e).to_vector()};
  const std::size_t n = node.members.size();
  std::vector<int> pos(b.size(), -1);
  for (std::size_t i = 0; i < n; ++i) pos[idx(node.members[i])] = static_cast<int>(i);
  auto at = [&](Elem x) { return elem(static_cast<std::size_t>(pos[idx(x)])); };
  auto add = make_table(n, [&](Elem p, Elem q) { return at(b.add(node.members[idx(p)], node.members[idx(q)])); });
  auto mul = make_table(n, [&](Elem p, Elem q) { return at(b.mul(node.members[idx(p)], node.members[idx(q)])); });
  const Elem one = at(e);
  return std::make_shared<const FiniteRing>(Key{}, std::move(node), n, one, std::move(add), std::move(mul));
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Elem FiniteRing::from_integer(std::int64_t k) const {
  const bool negative = k < 0;
  std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Elem result = zero();
  Elem step = one_;
  while (m > 0) {
    if (m & 1U) result = add(result, step);
    step = add(step, step);
    m >>= 1U;
  }
  return negative ? neg(result) : result;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  for (Elem b : elements())
    if (mul(a, b) == one_) return b;
  return std::nullopt;
}

bool FiniteRing::is_field() const { return units_.size() + 1 == n_; }

Elem FiniteRing::idempotent_of(Elem t) const {
  if (principal(t) != principal(mul(t, t)))
    throw Error(ErrorKind::NoIdempotent, "Rt != Rt^2 for t = " + format(t));
  Elem p = t;
  for (std::size_t k = 0; k <= n_; ++k) {
    if (mul(p, p) == p) return p;
    p = mul(p, t);
  }
  throw Error(ErrorKind::NoIdempotent, "no idempotent power of " + format(t));
}

Elem FiniteRing::pair(Elem first, Elem second) const {
  if (const auto* p = as<ProductNode>()) {
    return elem(idx(first) * p->right->size() + idx(second));
  }
  if (const auto* t = as<TrivExtNode>()) {
    return elem(idx(first) * t->module.size() + idx(second));
  }
  if (const auto* a = as<AmalgamNode>()) {
    const int i = a->index_of_pair[idx(first) * a->map.target()->size() + idx(second)];
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "pair is not in the amalgamation");
    return elem(static_cast<std::size_t>(i));
  }
  throw Error(ErrorKind::InvalidArgument, "ring has no pair structure");
}

Elem FiniteRing::component(Elem a, int side) const {
  if (const auto* p = as<ProductNode>()) {
    const std::size_t m = p->right->size();
    return side == 0 ? elem(idx(a) / m) : elem(idx(a) % m);
  }
  if (const auto* t = as<TrivExtNode>()) {
    const std::size_t m = t->module.size();
    return side == 0 ? elem(idx(a) / m) : elem(idx(a) % m);
  }
  if (const auto* am = as<AmalgamNode>()) {
    return side == 0 ? am->pairs[idx(a)].first : am->pairs[idx(a)].second;
  }
  throw Error(ErrorKind::InvalidArgument, "ring has no pair structure");
}

Elem FiniteRing::coset(Elem base_element) const {
  const auto* q = as<QuotientNode>();
  if (q == nullptr) throw Error(ErrorKind::InvalidArgument, "not a quotient ring");
  return q->coset_of[idx(base_element)];
}

std::string FiniteRing::format(Elem a) const {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          return std::to_string(idx(a));
        } else if constexpr (std::is_same_v<T, BooleanNode>) {
          std::string out = "(";
          for (std::size_t i = 0; i < node.width; ++i) {
            if (i > 0) out += ",";
            out += ((idx(a) >> (node.width - 1 - i)) & 1U) ? "1" : "0";
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          return "(" + node.left->format(component(a, 0)) + "," + node.right->format(component(a, 1)) + ")";
        } else if constexpr (std::is_same_v<T, QuotientNode>) {
          return "[" + node.base->format(node.representative[idx(a)]) + "]";
        } else if constexpr (std::is_same_v<T, TrivExtNode>) {
          return "(" + node.base->format(component(a, 0)) + "," + node.module.carrier()->format(component(a, 1)) +
                 ")";
        } else if constexpr (std::is_same_v<T, AmalgamNode>) {
          return "(" + node.map.source()->format(node.pairs[idx(a)].first) + "," +
                 node.map.target()->format(node.pairs[idx(a)].second) + ")";
        } else {
          return node.base->format(node.members[idx(a)]);
        }
      },
      desc_);
}

std::string FiniteRing::format(const ElemSet& xs) const {
  std::string out = "{";
  bool first = true;
  for (Elem x : xs) {
    if (!first) out += ",";
    first = false;
    out += format(x);
  }
  return out + "}";
}

std::string FiniteRing::expression() const {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          return "Zn " + std::to_string(node.modulus);
        } else if constexpr (std::is_same_v<T, BooleanNode>) {
          return "bool " + std::to_string(node.width);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          return node.left->expression() + " x " + paren_if_product(node.right);
        } else if constexpr (std::is_same_v<T, QuotientNode>) {
          return atom(node.base) + " / " + format_generators(node.base, node.ideal);
        } else if constexpr (std::is_same_v<T, TrivExtNode>) {
          std::string module = node.module.carrier()->expression();
          auto gens = node.module.action().generating_assignments();
          if (!gens.empty()) module += " via " + format_map(node.module.action());
          return "trivext(" + node.base->expression() + ", " + module + ")";
        } else if constexpr (std::is_same_v<T, AmalgamNode>) {
          return "amalg(" + node.map.source()->expression() + ", " + node.map.target()->expression() + ", " +
                 format_map(node.map) + ", " + format_generators(node.map.target(), node.ideal) + ")";
        } else {
          return "corner(" + node.base->expression() + ", " + node.base->format(node.idempotent) + ")";
        }
      },
      desc_);
}

bool FiniteRing::verify_axioms() const {
  for (Elem a : elements()) {
    if (add(a, zero()) != a || mul(a, one_) != a || add(a, neg(a)) != zero()) return false;
    for (Elem b : elements()) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (Elem c : elements()) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return one_ != zero();
}

const IdealLattice& FiniteRing::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_ = std::make_unique<IdealLattice>(*this); });
  return *lattice_;
}

std::optional<RingHom> isomorphism_from_zn(const RingPtr& ring) {
  auto zn = FiniteRing::zn(ring->size());
  std::vector<Elem> table;
  ElemSet hit;
  for (Elem k : zn->elements()) {
    const Elem y = ring->from_integer(static_cast<std::int64_t>(idx(k)));
    table.push_back(y);
    hit.insert(y);
  }
  if (hit != ring->all()) return std::nullopt;
  return RingHom::from_table(zn, ring, std::move(table));
}

}  // namespace smul

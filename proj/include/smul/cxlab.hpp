#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/error.hpp"

/// R = Z[X1, X2, ...]/Q with Q = (2 X1, 4 X2, ..., 2^n Xn, ...), computed in
/// monomial normal form. c M lies in Q exactly when 2^i divides c, where i is
/// the smallest variable index in M; constants are never reduced.
namespace smul::cxlab {

inline constexpr int kDefaultIndexBound = 16;

using Coeff = std::int64_t;
/// (variable index >= 1, exponent >= 1), strictly increasing in the index.
/// The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<int, int>>;
using Terms = std::map<Monomial, Coeff>;

int min_index(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string format(const Monomial& m);

class QPolyNF {
 public:
  QPolyNF() = default;

  static QPolyNF constant(Coeff c, int index_bound = kDefaultIndexBound);
  /// X_i.
  static QPolyNF variable(int i, int index_bound = kDefaultIndexBound);
  static QPolyNF term(Coeff c, Monomial m, int index_bound = kDefaultIndexBound);
  /// Normalizes arbitrary terms; IndexOutOfBound for indices outside 1..bound.
  static QPolyNF normalize(const Terms& raw, int index_bound = kDefaultIndexBound);

  const Terms& terms() const noexcept { return terms_; }
  int index_bound() const noexcept { return bound_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff constant_term() const;
  std::string format() const;

  friend bool operator==(const QPolyNF& a, const QPolyNF& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
  int bound_ = kDefaultIndexBound;
};

QPolyNF normalize(const QPolyNF& p);
QPolyNF add(const QPolyNF& a, const QPolyNF& b);
QPolyNF sub(const QPolyNF& a, const QPolyNF& b);
QPolyNF mul(const QPolyNF& a, const QPolyNF& b);
/// 2^k as a constant.
QPolyNF pow2(int k, int index_bound = kDefaultIndexBound);

/// Membership of raw (unreduced) terms in Q by the coefficient rule.
bool in_q(const Terms& raw);
/// f ∈ 2^m R: 2^m divides the constant term and 2^min(m, i) divides the
/// coefficient of each monomial with smallest index i.
bool member_pow2_principal(const QPolyNF& f, int m);
/// Some m with f ∉ 2^m R, for f != 0 (the intersection of all 2^m R is 0).
int escape_exponent(const QPolyNF& f);

Certificate replay_counterexample1(int index_bound = kDefaultIndexBound);
Certificate replay_counterexample3(int index_bound = kDefaultIndexBound);
Certificate replay_colon(int index_bound = kDefaultIndexBound);

}  // namespace smul::cxlab

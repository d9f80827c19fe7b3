#include <doctest.h>

#include <numeric>
#include <random>

#include "smul/cxlab.hpp"
#include "support/z_lattice.hpp"

using namespace smul;
using namespace smul::cxlab;

namespace {

using namespace smul::testing;

QPolyNF random_poly(std::mt19937_64& rng, int bound, int max_index, Coeff cmax) {
  std::uniform_int_distribution<int> nterms(0, 4), idx(1, max_index), exp(1, 2), nvars(0, 2);
  std::uniform_int_distribution<Coeff> coeff(-cmax, cmax);
  Terms raw;
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    for (int v = nvars(rng); v > 0; --v) m.emplace_back(idx(rng), exp(rng));
    std::sort(m.begin(), m.end());
    Monomial merged;
    for (auto [i, e] : m) {
      if (!merged.empty() && merged.back().first == i)
        merged.back().second += e;
      else
        merged.emplace_back(i, e);
    }
    raw[merged] += coeff(rng);
  }
  return QPolyNF::normalize(raw, bound);
}

}  // namespace

TEST_CASE("coefficient rule for Q against lattice membership in a truncated ring") {
  const auto basis = small_basis();
  const auto q_lattice = echelon(generators(basis, std::nullopt), basis.size());
  std::vector<std::vector<Vec>> pow_lattices;
  for (int m = 0; m <= 3; ++m) pow_lattices.push_back(echelon(generators(basis, m), basis.size()));

  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> coeff(-64, 64);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int trial = 0; trial < 3000; ++trial) {
    Vec v(basis.size(), 0);
    Terms raw;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      // Mix in multiples of the generator coefficients so that members occur often.
      long long c = coeff(rng);
      if (sparse(rng) == 0) c = 0;
      if (!basis[k].empty() && sparse(rng) == 1) c = (c / 8) * (1LL << basis[k].front().first);
      v[k] = c;
      if (c != 0) raw[basis[k]] = c;
    }
    const bool oracle = in_lattice(q_lattice, v);
    CHECK(in_q(raw) == oracle);
    const auto f = QPolyNF::normalize(raw, 3);
    CHECK(f.is_zero() == oracle);
    for (int m = 0; m <= 3; ++m) CHECK(member_pow2_principal(f, m) == in_lattice(pow_lattices[static_cast<std::size_t>(m)], v));
  }
}

TEST_CASE("normal form examples") {
  CHECK(QPolyNF::term(4, {{2, 1}}).is_zero());
  CHECK(QPolyNF::term(2, {{2, 1}}).format() == "2*X2");
  CHECK(QPolyNF::constant(8).format() == "8");
  CHECK(QPolyNF::constant(-8).format() == "-8");
  CHECK(QPolyNF::term(-1, {{3, 1}}).format() == "7*X3");
  CHECK(QPolyNF::term(3, {{1, 2}, {4, 1}}).format() == "X1^2*X4");
  CHECK_THROWS_AS(QPolyNF::variable(17), Error);
  try {
    QPolyNF::variable(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfBound);
  }
}

TEST_CASE("ring laws and normalization") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_poly(rng, 16, 6, 50);
    const auto b = random_poly(rng, 16, 6, 50);
    const auto c = random_poly(rng, 16, 6, 50);
    CHECK(normalize(a) == a);
    CHECK(normalize(normalize(a)) == normalize(a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(sub(a, a).is_zero());
    CHECK(mul(a, QPolyNF::constant(1)) == a);
    // is_zero iff in every 2^m R iff raw lift in Q.
    bool all = true;
    for (int m = 0; m <= 16; ++m) all = all && member_pow2_principal(a, m);
    CHECK(a.is_zero() == all);
    CHECK(a.is_zero() == in_q(a.terms()));
  }
  for (int x = 0; x <= 20; ++x)
    for (int y = 0; y <= 20; ++y) CHECK(mul(pow2(x), pow2(y)) == pow2(x + y));
}

TEST_CASE("product identities and principal membership") {
  const int bound = 16;
  for (int n = 0; n <= bound - 2; ++n) {
    CHECK(mul(pow2(n + 2), QPolyNF::variable(n + 2)).is_zero());
    const auto p = mul(pow2(n), QPolyNF::variable(n + 2));
    CHECK_FALSE(p.is_zero());
    CHECK(p == QPolyNF::term(Coeff{1} << n, {{n + 2, 1}}));
    const auto q = mul(pow2(n), pow2(n + 2));
    CHECK(q == pow2(2 * n + 2));
    CHECK_FALSE(q.is_zero());
  }
  for (int k = 0; k < bound; ++k) CHECK_FALSE(member_pow2_principal(pow2(k), k + 1));
  // 2 X2 = 32 g + q would need 2 in 32Z + 4Z.
  CHECK_FALSE(member_pow2_principal(QPolyNF::term(2, {{2, 1}}), 5));
  CHECK(member_pow2_principal(QPolyNF::term(2, {{2, 1}}), 1));
  CHECK(member_pow2_principal(QPolyNF::term(16, {{5, 1}}), 4));
  CHECK_FALSE(member_pow2_principal(QPolyNF::term(4, {{3, 1}}), 5));
  for (int m = 0; m <= bound; ++m) CHECK(member_pow2_principal(QPolyNF(), m));
  CHECK_THROWS_AS(member_pow2_principal(pow2(1), 17), Error);
  CHECK(escape_exponent(pow2(5)) == 6);
  CHECK_FALSE(member_pow2_principal(pow2(5), escape_exponent(pow2(5))));
}

TEST_CASE("replays over Z[X]/Q") {
  const auto c1 = replay_counterexample1();
  CHECK(c1.passed());
  CHECK(c1.checks.size() == 3 * (16 - 2));
  const auto c3 = replay_counterexample3();
  CHECK(c3.passed());
  const auto cc = replay_colon();
  CHECK(cc.passed());
  CHECK(c1.to_json().dump() == replay_counterexample1().to_json().dump());
  CHECK(c3.to_json().dump() == replay_counterexample3().to_json().dump());
  CHECK(cc.to_json().dump() == replay_colon().to_json().dump());
  for (int bound : {4, 8, 24}) {
    CHECK(replay_counterexample1(bound).passed());
    CHECK(replay_counterexample3(bound).passed());
    CHECK(replay_colon(bound).passed());
  }
}

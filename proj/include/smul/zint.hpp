#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/error.hpp"

/// The ring of integers and Z x Z: principal ideals, symbolic multiplicative
/// sets and decision procedures that reduce infinite searches to finitely
/// many divisibility patterns.
namespace smul::zint {

using Int = std::int64_t;

/// Largest generator magnitude accepted from user input.
inline constexpr Int kMaxGenerator = 1'000'000;
/// Default depth for bounded evidence.
inline constexpr int kDefaultDepth = 12;

Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exp);
Int gcd(Int a, Int b);
/// Throws Overflow.
Int lcm(Int a, Int b);
bool is_prime_number(Int n);
/// Distinct primes of |n| in increasing order (n != 0).
std::vector<Int> prime_factors(Int n);
/// Exponent of p in n (n != 0).
int valuation(Int n, Int p);

/// nZ with n >= 0; 0 is the zero ideal.
struct PrincipalIdeal {
  Int n = 0;
  PrincipalIdeal() = default;
  explicit PrincipalIdeal(Int value);
  bool contains(Int x) const { return n == 0 ? x == 0 : x % n == 0; }
  bool is_unit() const { return n == 1; }
  bool is_prime() const { return n == 0 || is_prime_number(n); }
  bool subset_of(const PrincipalIdeal& o) const { return o.contains(n); }
  std::string format() const;
  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

PrincipalIdeal meet(PrincipalIdeal a, PrincipalIdeal b);
PrincipalIdeal join(PrincipalIdeal a, PrincipalIdeal b);
/// (aZ : bZ).
PrincipalIdeal colon(PrincipalIdeal a, PrincipalIdeal b);
/// (nZ : s) = (n / gcd(n, s))Z.
PrincipalIdeal colon(PrincipalIdeal a, Int s);

/// Monoid generated by nonzero integers, optionally with -1.
struct IntMonoid {
  std::vector<Int> generators;
  bool sign_closure = false;
};
/// Z - pZ.
struct PrimeComplement {
  Int p;
};
/// Z - {0}, the regular elements of Z.
struct Nonzero {};

using ZSet = std::variant<IntMonoid, PrimeComplement, Nonzero>;

/// Validates generator magnitudes and primality of the excluded prime.
ZSet checked_set(ZSet s);
bool contains(const ZSet& s, Int m);
std::string format(const ZSet& s);
/// Every element lies in {1, -1}.
bool is_unit_set(const ZSet& s);

/// Primes q such that S contains a multiple of every power of q: all primes
/// of the generators for a monoid, all primes but p for Z - pZ, all primes
/// for Z - {0}.
struct InvertedPrimes {
  bool cofinite = false;
  std::set<Int> listed;  // inverted primes, or the excluded ones when cofinite
  bool inverted(Int q) const { return cofinite ? listed.count(q) == 0 : listed.count(q) > 0; }
};
InvertedPrimes inverted_primes(const ZSet& s);

/// S contains a multiple of k (k != 0).
bool has_multiple(const ZSet& s, Int k);
/// nZ ∩ S nonempty.
bool meets(const PrincipalIdeal& i, const ZSet& s);
/// Smallest positive |s| with s in S and n | s (n >= 1).
std::optional<Int> smallest_multiple_in(const ZSet& s, Int n);

struct StrongEvidence {
  bool holds = false;
  Json evidence;
};
/// Definitional test, decided analytically: a nonunit g in S gives
/// ∩ g^k Z = 0, which misses S; sets inside {±1} have witness 1.
StrongEvidence strongly_multiplicative_def(const ZSet& s, int depth = kDefaultDepth);
/// Maximal-multiple test: a t with g^k | t for all k forces t = 0.
StrongEvidence strongly_multiplicative_mmc(const ZSet& s, int depth = kDefaultDepth);

/// The family {c k^n Z : n >= 0}.
struct ParametricChain {
  Int c = 1;
  Int k = 2;
};
/// Always 0Z; DegenerateChain when |k| <= 1 or c == 0. Records bounded
/// evidence c k^n ∉ c k^(n+1) Z for n <= depth.
PrincipalIdeal chain_intersection(const ParametricChain& ch, Json* evidence = nullptr, int depth = kDefaultDepth);

/// a/b ∈ S^{-1}(nZ): some s in S with n | s a.
bool localized_contains(const PrincipalIdeal& i, const ZSet& s, Int a);
/// S^{-1}(nZ) ∩ Z; localized ideals are compared through this.
PrincipalIdeal localized_contraction(const PrincipalIdeal& i, const ZSet& s);

/// S^{-1}(∩ J_i) = ∩ S^{-1} J_i for an explicit finite family.
Certificate check_intersection_commutes(const ZSet& s, const std::vector<PrincipalIdeal>& family);
/// Same for a parametric chain, decided symbolically.
Certificate check_intersection_commutes(const ZSet& s, const ParametricChain& ch, int depth = kDefaultDepth);
/// The family {pZ : p prime} with S = Z - {0}: bounded primes plus the
/// symbolic tail. Passes when the inequality is reproduced.
Certificate replay_prime_family(int bound = 50);

struct ZWitness {
  Int s;
  PrincipalIdeal colon;  // (nZ : s), prime
};

/// Colon-characterization search over gcd classes: smallest positive |s| in
/// S with (nZ : s) prime. Does not check disjointness.
std::optional<ZWitness> colon_prime_witness(const PrincipalIdeal& i, const ZSet& s);
/// NotDisjoint if nZ meets S.
std::optional<ZWitness> is_s_prime_z(const PrincipalIdeal& i, const ZSet& s);
/// Prime ideals of Z are never strongly prime: the complement contains a nonunit.
bool is_strongly_prime_z(const PrincipalIdeal& p);

/// nZ x mZ.
struct ProductIdeal {
  PrincipalIdeal first;
  PrincipalIdeal second;
  std::string format() const;
  bool subset_of(const ProductIdeal& o) const { return first.subset_of(o.first) && second.subset_of(o.second); }
  friend bool operator==(const ProductIdeal&, const ProductIdeal&) = default;
};
struct ProductSet {
  ZSet first;
  ZSet second;
};
std::string format(const ProductSet& s);
bool meets(const ProductIdeal& i, const ProductSet& s);
/// Witness (s1, s2) with (P : s) prime, or nullopt. NotDisjoint if P meets S.
std::optional<std::pair<Int, Int>> is_s_prime_zz(const ProductIdeal& i, const ProductSet& s);

struct ClassifiedMinimal {
  std::vector<ProductIdeal> s_primes;   // S-prime ideals in the window
  std::vector<ProductIdeal> minimal;    // those with no smaller S-prime found
};
/// Enumerates nZ x mZ for 0 <= n, m <= bound and, for each S-prime one,
/// searches sub-ideals (multiples up to `bound` times, and 0) for a smaller
/// S-prime ideal.
ClassifiedMinimal s_minimal_primes_zz(const ProductSet& s, Int bound = kDefaultDepth);

Certificate replay_counterexample2(int depth = kDefaultDepth);
Certificate replay_counterexample4(int depth = kDefaultDepth);

}  // namespace smul::zint

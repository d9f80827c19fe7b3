#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/finite_ring.hpp"

/// Corpus-wide verification of the registered claims.
namespace smul::cli {

/// Largest corpus ring by default; SMUL_BUDGET overrides it in the CLI.
inline constexpr std::size_t kDefaultAuditBudget = 64;
/// N for the example replays.
inline constexpr int kReplayDepth = 16;

struct AuditOptions {
  /// Corpus rings have at most this many elements.
  std::size_t budget = kDefaultAuditBudget;
  int depth = kReplayDepth;
  std::uint64_t seed = 1;
  /// "" or "colon": replace (I:J) by I inside the colon claim.
  std::string mutate;
  /// Per ring, how many multiplicative sets get the per-ideal claims.
  std::size_t heavy_sets = 8;
  /// Restrict to these claim ids (all when empty).
  std::vector<std::string> claims;
};

enum class ClaimKind { Ring, Set, Transport, Replay, Skip };
std::string_view to_string(ClaimKind k) noexcept;

struct ClaimInfo {
  std::string id;
  ClaimKind kind;
  std::string statement;
  /// Documentation pointer for SKIP entries.
  std::string doc;
};
/// Every claim the audit knows about, in evaluation order.
std::vector<ClaimInfo> claim_registry();

struct ClaimRecord {
  std::string claim_id;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::size_t checks = 0;
  /// On FAIL: the failing check and its witness. On SKIP: reason and doc.
  Json witness;
  double elapsed_ms = 0;
};

struct AuditReport {
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::string mutate;
  std::size_t corpus_rings = 0;
  std::size_t set_instances = 0;
  std::vector<ClaimRecord> claims;
  double elapsed_ms = 0;

  std::size_t count(Verdict v) const;
  std::size_t count(std::string_view claim_id, Verdict v) const;
  bool any_fail() const { return count(Verdict::Fail) > 0; }
  /// Timing fields are omitted when `with_timing` is false; the rest is a
  /// function of (seed, budget, mutate, claims).
  Json to_json(bool with_timing = true) const;
};

struct CorpusEntry {
  RingPtr ring;
  /// "Zn", "bool", "product", "quotient", "trivext" or "amalgam".
  std::string family;
};
std::vector<CorpusEntry> build_corpus(std::size_t budget);

AuditReport run_audit(const AuditOptions& opts = {});

/// counterexample1..4, colon, prime-family, or the matching ex.* claim id.
Certificate run_audit_one(std::string_view name, int depth = kReplayDepth);

}  // namespace smul::cli

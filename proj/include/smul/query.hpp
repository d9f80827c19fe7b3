#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smul/certificate.hpp"
#include "smul/finite_ring.hpp"
#include "smul/zint.hpp"

namespace smul::cli {

struct QueryOptions {
  std::size_t budget = kMaxRingSize;
  /// Search depth; Z queries default to zint::kDefaultDepth, audit-one to kReplayDepth.
  std::optional<int> depth;
};

struct QueryResult {
  Json body;
  /// False when the command verified something and it failed (audit-one).
  bool ok = true;
};

/// Commands taking a ring expression:
///   strongmul RING SET        saturate RING SET        sprime RING SET IDEAL
///   sminimal RING SET         algorithm1 RING SET      krull RING SET [IDEAL]
///   localize RING SET [IDEAL] divides RING A B
/// and `audit-one NAME`. Throws dsl::ParseError or Error on bad input.
QueryResult run_query(std::string_view command, const std::vector<std::string>& args, const QueryOptions& opts = {});
const std::vector<std::string>& query_commands();

/// "2Z4 x 0" for ideals of products of Zn, "(g1, g2)" otherwise.
std::string name_ideal(const FiniteRing& r, const ElemSet& ideal);

}  // namespace smul::cli

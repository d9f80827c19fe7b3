#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace smul {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Skip };
std::string_view to_string(Verdict v) noexcept;

/// One verified sub-claim: a named predicate, whether it held, and the
/// elements that witness it (or refute it).
struct Check {
  std::string name;
  bool holds = false;
  Json witness;
};

/// The serialization unit for verification results.
struct Certificate {
  std::string claim_id;
  std::string instance;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  /// Set for claims that are recorded but not executed.
  std::optional<std::string> skip_reason;

  Check& add(std::string name, bool holds, Json witness = nullptr);
  void note(std::string text) { notes.push_back(std::move(text)); }

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  /// First failing check, if any.
  const Check* first_failure() const;

  Json to_json() const;
};

}  // namespace smul

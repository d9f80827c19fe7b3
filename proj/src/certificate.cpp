#include "smul/certificate.hpp"

namespace smul {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

Check& Certificate::add(std::string name, bool holds, Json witness) {
  checks.push_back(Check{std::move(name), holds, std::move(witness)});
  return checks.back();
}

Verdict Certificate::verdict() const {
  if (skip_reason) return Verdict::Skip;
  for (const auto& c : checks)
    if (!c.holds) return Verdict::Fail;
  return Verdict::Pass;
}

const Check* Certificate::first_failure() const {
  for (const auto& c : checks)
    if (!c.holds) return &c;
  return nullptr;
}

Json Certificate::to_json() const {
  Json out;
  out["claim_id"] = claim_id;
  out["instance"] = instance;
  out["verdict"] = std::string(to_string(verdict()));
  if (skip_reason) out["skip_reason"] = *skip_reason;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["holds"] = c.holds;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

}  // namespace smul

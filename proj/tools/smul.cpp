#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "smul/audit.hpp"
#include "smul/dsl.hpp"
#include "smul/error.hpp"
#include "smul/query.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::optional<std::size_t> env_budget() {
  const char* v = std::getenv("SMUL_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const auto n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw smul::Error(smul::ErrorKind::InvalidArgument, "SMUL_BUDGET must be a positive integer");
  return static_cast<std::size_t>(n);
}

void write_json(const std::string& path, const smul::Json& j) {
  std::ofstream out(path);
  if (!out) throw smul::Error(smul::ErrorKind::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

struct Options {
  std::vector<std::string> args;
  std::optional<std::size_t> budget;
  std::optional<int> depth;
  std::uint64_t seed = 1;
  std::string mutate;
  std::string json_path;
  std::vector<std::string> claims;
  bool no_timing = false;
};

int run_audit(const Options& o) {
  smul::cli::AuditOptions opts;
  if (o.budget) opts.budget = *o.budget;
  else if (auto b = env_budget()) opts.budget = *b;
  if (o.depth) opts.depth = *o.depth;
  opts.seed = o.seed;
  opts.mutate = o.mutate;
  opts.claims = o.claims;
  const auto report = smul::cli::run_audit(opts);

  for (const auto& c : report.claims) {
    if (c.verdict == smul::Verdict::Pass) continue;
    std::cout << smul::to_string(c.verdict) << "  " << c.claim_id << "  " << c.instance << "  " << c.witness.dump()
              << '\n';
  }
  std::cout << "rings " << report.corpus_rings << ", set instances " << report.set_instances << ", claims "
            << report.claims.size() << ": " << report.count(smul::Verdict::Pass) << " PASS, "
            << report.count(smul::Verdict::Fail) << " FAIL, " << report.count(smul::Verdict::Skip) << " SKIP";
  if (!o.no_timing) std::cout << " in " << static_cast<long>(report.elapsed_ms) << " ms";
  std::cout << '\n';
  if (!o.json_path.empty()) write_json(o.json_path, report.to_json(!o.no_timing));
  return report.any_fail() ? kExitFail : kExitOk;
}

int run_claims() {
  for (const auto& c : smul::cli::claim_registry()) {
    std::cout << c.id << "  [" << smul::cli::to_string(c.kind) << "]  " << c.statement;
    if (!c.doc.empty()) std::cout << "  (" << c.doc << ")";
    std::cout << '\n';
  }
  return kExitOk;
}

int run_query(const std::string& command, const Options& o) {
  smul::cli::QueryOptions opts;
  if (o.budget) opts.budget = *o.budget;
  else if (auto b = env_budget()) opts.budget = *b;
  opts.depth = o.depth;
  const auto result = smul::cli::run_query(command, o.args, opts);
  std::cout << result.body.dump(2) << '\n';
  if (!o.json_path.empty()) write_json(o.json_path, result.body);
  return result.ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly multiplicative sets in finite rings, Z, Z x Z and Z[X]/Q"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "largest ring size (default: SMUL_BUDGET, else 256; audit: 64)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--depth", o.depth, "search depth for infinite rings and replays")->check(CLI::PositiveNumber);
    sub->add_option("--json", o.json_path, "also write the JSON result to this file");
  };

  std::string command;
  for (const auto& name : smul::cli::query_commands()) {
    auto* sub = app.add_subcommand(name, "query: " + name);
    sub->add_option("args", o.args, "ring, set, ideal or element expressions")->required();
    common(sub);
    sub->callback([&command, name] { command = name; });
  }
  auto* audit = app.add_subcommand("audit", "verify every registered claim over the finite corpus");
  common(audit);
  audit->add_option("--seed", o.seed, "sampling seed");
  audit->add_option("--mutate", o.mutate, "deliberately break one oracle")->check(CLI::IsMember({"colon"}));
  audit->add_option("--claims", o.claims, "restrict to these claim ids")->delimiter(',');
  audit->add_flag("--no-timing", o.no_timing, "omit timings so the JSON is reproducible byte for byte");
  audit->callback([&command] { command = "audit"; });
  app.add_subcommand("claims", "list the registered claims")->callback([&command] { command = "claims"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (command == "audit") return run_audit(o);
    if (command == "claims") return run_claims();
    return run_query(command, o);
  } catch (const smul::dsl::ParseError& e) {
    std::cerr << "smul: parse error: " << e.what() << '\n';
  } catch (const smul::Error& e) {
    std::cerr << "smul: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "smul: " << e.what() << '\n';
  }
  return kExitUsage;
}

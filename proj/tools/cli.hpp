#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ssetkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "sset-kit/1";

enum ExitCode : int { exit_ok = 0, exit_malformed = 1, exit_verification = 2, exit_capacity = 3 };

struct FamilySpec {
  /// "interaction" (hierarchical model over `arities`) or "ngon".
  std::string kind = "interaction";
  std::vector<int> arities;
  /// Delta_k when `delta` is empty.
  int k = 1;
  /// Explicit interaction sets, 1-based variables.
  std::vector<std::vector<int>> delta;
  int ngon = 0;
};

struct JobSpec {
  std::string command;
  /// Sub-mode: cover min|cylinder|lines|recursive|packing, bounds gv|singleton|parity|marking.
  std::string mode;
  std::optional<FamilySpec> family;
  /// Digit strings.
  std::vector<std::string> subset;
  /// uniform | point:<digits> | random | <path to distribution file>.
  std::string dist;
  /// Cover used by decompose; defaults by family.
  std::string cover;
  /// Cover report to re-check (verify).
  std::string input;
  int q = 2, n = 0, d = 2, r = 1;
  std::string t = "8";
  std::size_t guard = 16;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string output;
};

Json to_json(const JobSpec& job);
JobSpec job_from_json(const Json& j);

/// Parses argv into a job; throws ParseError on malformed input. `--job file` loads a JSON spec.
JobSpec parse_arguments(int argc, const char* const* argv);

struct RunResult {
  int exit_code = exit_ok;
  Json report;
};

/// Dispatches a job. Never throws: errors become exit codes with a diagnostic in the report.
RunResult run(const JobSpec& job);

/// run() plus writing the report to job.output or `out`.
int execute(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace ssetkit::cli

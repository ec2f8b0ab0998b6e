#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"

namespace copsrobber {

struct VerifyFailure {
  /// Edge-list serialization of the counterexample (empty for non-graph cases).
  std::string graph;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct VerifySuiteReport {
  std::string suite;
  std::uint64_t checked = 0;
  std::vector<VerifyFailure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Corpus: all connected labelled graphs on 2..max_n vertices.
  int max_n = 6;
  /// Extra random connected graphs on 7 vertices (characterization only).
  int sample7 = 0;
  Seed seed = 1;
  /// Random larger-m cases for the subset-pick suite.
  int subset_random_cases = 1000;
  SolveOptions solve;
  /// Worker threads for corpus loops; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Record wall time in elapsed_ms (otherwise 0, for byte-stable output).
  bool timing = false;
};

VerifySuiteReport verify_characterization(const VerifyOptions& options);
VerifySuiteReport verify_sandwich(const VerifyOptions& options);
VerifySuiteReport verify_bounds(const VerifyOptions& options);
VerifySuiteReport verify_escape(const VerifyOptions& options);
VerifySuiteReport verify_powergraph(const VerifyOptions& options);
VerifySuiteReport verify_products(const VerifyOptions& options);
VerifySuiteReport verify_subsetpick(const VerifyOptions& options);

const std::vector<std::string>& verify_suite_names();
/// Dispatches by name; throws PreconditionError for unknown suites.
VerifySuiteReport run_verify_suite(const std::string& name, const VerifyOptions& options);

nlohmann::json to_json(const VerifySuiteReport& report);

}  // namespace copsrobber

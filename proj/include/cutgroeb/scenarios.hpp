#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cutgroeb {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ScenarioReport {
  std::string id;
  std::string description;
  /// Non-binding scenarios are reported but never fail.
  bool binding = true;
  std::vector<Check> checks;
  /// Extra lines (histograms, positional tables) for the text report.
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const;
  /// Deterministic text: no timings.
  std::string to_text() const;
  /// One line per check: "<id> <check> pass|fail <seconds>".
  std::string summary_lines() const;
};

struct ScenarioOptions {
  /// Seed of the order samples in revlex-squarefree.
  std::uint64_t seed = 20100107;
  int samples = 20;
  /// Order for table1 in CLI syntax (see parse_order); empty means the default lex.
  std::string table1_order;
};

/// Scenario ids in report order.
const std::vector<std::string>& scenario_ids();
/// Throws Error for an unknown id.
ScenarioReport run_scenario(const std::string& id, const ScenarioOptions& options = {});

/// Random permutation of 0..n-1 from a 64-bit Mersenne Twister via an
/// explicit Fisher-Yates pass, identical on every platform.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace cutgroeb

#ifndef RELLOC_VERIFY_HPP
#define RELLOC_VERIFY_HPP

// Named verification suites. Each suite samples seeded random inputs and
// reports the worst observed error for every property it checks.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace relloc {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::uint64_t seed = 42;
  int samples = 100;
  /// Suite name -> replacement for every upper-bound threshold in that suite.
  std::map<std::string, double> tolerance_overrides;
  OutputFormat format = OutputFormat::Csv;
  /// Used for every sampled system.
  double c = 1.0;
};

struct Check {
  enum class Bound { AtMost, AtLeast };

  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::AtMost;

  /// NaN values fail.
  bool passed() const { return bound == Bound::AtMost ? value <= threshold : value >= threshold; }
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<Check> checks;

  bool passed() const;
  std::string to_csv() const;
  std::string to_json() const;
};

const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite or an invalid config.
Report run_suite(const std::string& name, const RunConfig& config);

}  // namespace relloc

#endif  // RELLOC_VERIFY_HPP

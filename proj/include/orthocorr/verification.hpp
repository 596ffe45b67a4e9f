#pragma once

// Self-checks run by `orthocorr verify` and the acceptance harness.
//
// Each suite compares the closed forms against an independent computation
// (Gauss quadrature, the difference equation, exact moments, direct series
// summation) and counts the checks whose deviation exceeds the tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthocorr/family.hpp"

namespace orthocorr {

struct VerifyOptions {
  std::optional<FamilyKind> family;  ///< restrict family-dependent suites
  std::optional<double> tolerance;   ///< overrides every suite tolerance
  std::uint64_t seed = 20170405;     ///< randomised parameter draws
};

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  double worst = 0.0;      ///< largest normalised deviation seen
  double tolerance = 0.0;  ///< headline tolerance of the suite
  std::vector<std::string> notes;
  std::vector<std::string> failure_samples;  ///< first few failures
  bool not_applicable = false;  ///< the family filter left nothing to check

  bool passed() const { return failures == 0 && (checks > 0 || not_applicable); }
};

/// fixtures, oracle, recurrence, specialization, lemmas, structure, quadrature
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

/// Parameter grid for alpha (and beta): {-0.4, 0.3, 1, 2.5}.
const std::vector<double>& parameter_grid();

/// Every family instance of the sweep grid: the four parameter-free families,
/// Gegenbauer and Laguerre over the grid, Jacobi over grid x grid.
std::vector<Family> sweep_families(std::optional<FamilyKind> only = std::nullopt);

/// Shifts of the oracle sweep: +-0.1, +-0.5, +-1, +-2, +-4.
const std::vector<double>& sweep_shifts();

inline constexpr int kSweepMaxM = 12;
inline constexpr int kSweepMaxN = 12;

/// |closed - oracle| / max(|oracle|, 1e-3 * sum_j |c_j| |y|^j).
double normalized_deviation(double closed, double oracle, double scale);

/// Printable multi-line summary of a report.
std::string format_report(const SuiteReport& report);

}  // namespace orthocorr

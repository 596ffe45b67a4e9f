#pragma once

// The second-order difference equation in m and n satisfied by R_{m,n}(y):
//
//   R_{m+1,n+1} = (A_{n+m+1}/A_{n+1}) R_{m-1,n+2}
//               + (A_{n+m+1} C_{n+1}/A_{n+1}) R_{m+1,n}
//               + (B_{n+m+1} + y A_{n+m+1} - (A_{n+m+1}/A_{n+1}) B_{n+1}) R_{m,n+1}
//               - C_{n+m+1} R_{m-1,n+1}

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "orthocorr/family.hpp"

namespace orthocorr {

/// Returns R_{m,n} or nullopt when the value is not available.
using CorrLookup = std::function<std::optional<double>(int m, int n)>;

struct Residual {
  double normalized = 0.0;  ///< raw / max |term|
  double raw = 0.0;
};

/// Residual of the difference equation at (m, n), m >= 1. Throws
/// IncompleteStencilError when the lookup lacks a stencil entry.
Residual recurrence_residual(const Family& family, int m, int n, double y,
                             const CorrLookup& lookup);

enum class Provenance { seed, propagated };

struct TableEntry {
  double value = 0.0;
  Provenance provenance = Provenance::seed;
  double est_error = 0.0;  ///< first-order propagated bound
};

struct CorrTable {
  Family family;
  double y = 0.0;
  std::map<std::pair<int, int>, TableEntry> values;  ///< keyed (m, n)

  std::optional<double> get(int m, int n) const;
  void set_seed(int m, int n, double value, double est_error = 0.0);
};

/// Seed entries propagate_table needs: rows m = 0 and m = 1 for
/// n = 0..n_max+m_max, and column n = 0 for m = 2..m_max.
std::vector<std::pair<int, int>> required_seeds(int m_max, int n_max);

/// Fills R_{M,N} for 2 <= M <= m_max and 1 <= N <= n_max + m_max - M by
/// solving the difference equation for R_{m+1,n+1}, sweeping M upwards and,
/// within a row, N upwards. The result holds the seeds plus every propagated
/// entry. Throws IncompleteStencilError when a required seed is missing.
CorrTable propagate_table(const Family& family, double y, int m_max, int n_max,
                          const CorrTable& seeds);

}  // namespace orthocorr

#include "orthocorr/difference_equation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace orthocorr {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Coefficients of the right-hand side, in stencil order
// R_{m-1,n+2}, R_{m+1,n}, R_{m,n+1}, R_{m-1,n+1}.
std::array<double, 4> stencil_weights(const Family& family, int m, int n, double y) {
  const auto top = recurrence_coeffs(family, n + m + 1);
  const auto low = recurrence_coeffs(family, n + 1);
  const double ratio = top.a / low.a;
  return {ratio, ratio * low.c, top.b + y * top.a - ratio * low.b, -top.c};
}

constexpr std::array<std::pair<int, int>, 4> kStencil = {
    std::pair{-1, 2}, std::pair{1, 0}, std::pair{0, 1}, std::pair{-1, 1}};

std::string entry_name(int m, int n) {
  return "R_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

}  // namespace

Residual recurrence_residual(const Family& family, int m, int n, double y,
                             const CorrLookup& lookup) {
  if (m < 1 || n < 0) throw ParameterDomainError("recurrence_residual needs m >= 1, n >= 0");
  auto fetch = [&](int mm, int nn) {
    const auto v = lookup(mm, nn);
    if (!v) throw IncompleteStencilError("stencil entry " + entry_name(mm, nn) + " missing");
    return *v;
  };
  const auto w = stencil_weights(family, m, n, y);
  const double lhs = fetch(m + 1, n + 1);
  double scale = std::fabs(lhs);
  double rhs = 0.0;
  for (std::size_t i = 0; i < kStencil.size(); ++i) {
    const double term = w[i] * fetch(m + kStencil[i].first, n + kStencil[i].second);
    scale = std::max(scale, std::fabs(term));
    rhs += term;
  }
  const double raw = lhs - rhs;
  return {scale > 0.0 ? raw / scale : 0.0, raw};
}

std::optional<double> CorrTable::get(int m, int n) const {
  if (auto it = values.find({m, n}); it != values.end()) return it->second.value;
  return std::nullopt;
}

void CorrTable::set_seed(int m, int n, double value, double est_error) {
  values[{m, n}] = TableEntry{value, Provenance::seed, est_error};
}

std::vector<std::pair<int, int>> required_seeds(int m_max, int n_max) {
  if (m_max < 0 || n_max < 0) throw ParameterDomainError("table bounds must be non-negative");
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= std::min(1, m_max); ++m) {
    for (int n = 0; n <= n_max + m_max; ++n) out.emplace_back(m, n);
  }
  for (int m = 2; m <= m_max; ++m) out.emplace_back(m, 0);
  return out;
}

CorrTable propagate_table(const Family& family, double y, int m_max, int n_max,
                          const CorrTable& seeds) {
  CorrTable table{family, y, {}};
  for (const auto& [m, n] : required_seeds(m_max, n_max)) {
    auto it = seeds.values.find({m, n});
    if (it == seeds.values.end()) {
      throw IncompleteStencilError("seed " + entry_name(m, n) + " missing");
    }
    table.values[{m, n}] = TableEntry{it->second.value, Provenance::seed, it->second.est_error};
  }

  for (int row = 2; row <= m_max; ++row) {
    for (int col = 1; col <= n_max + m_max - row; ++col) {
      // Solve the equation at (m, n) = (row-1, col-1) for R_{row,col}.
      const int m = row - 1, n = col - 1;
      const auto w = stencil_weights(family, m, n, y);
      double value = 0.0, error = 0.0, magnitude = 0.0;
      for (std::size_t i = 0; i < kStencil.size(); ++i) {
        const TableEntry& e = table.values.at({m + kStencil[i].first, n + kStencil[i].second});
        const double term = w[i] * e.value;
        value += term;
        magnitude += std::fabs(term);
        error += std::fabs(w[i]) * e.est_error;
      }
      error += 4.0 * kEps * magnitude;
      table.values[{row, col}] = TableEntry{value, Provenance::propagated, error};
    }
  }
  return table;
}

}  // namespace orthocorr

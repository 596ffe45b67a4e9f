#pragma once

// Gamma/Pochhammer machinery, terminating generalized hypergeometric series,
// the series-reversal and negative-lower-parameter transformations, and the
// terminating Appell F2 function.

#include <cmath>
#include <optional>
#include <vector>

#include "orthocorr/errors.hpp"
#include "orthocorr/summation.hpp"

namespace orthocorr {

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x);

struct SignedLogGamma {
  double log_abs;  ///< ln|Gamma(x)|
  int sign;        ///< sign of Gamma(x)
};

/// ln|Gamma(x)| and the sign of Gamma(x).
///
/// 15-term Lanczos approximation (g = 607/128) evaluated in extended
/// precision, with the reflection formula for x < 1/2. The reconstructed
/// sign * exp(log_abs) has relative error below 1e-13 on [-50, 170].
/// Throws PoleError at non-positive integers.
SignedLogGamma ln_gamma_signed(double x);

/// prod Gamma(nums) / prod Gamma(dens), accumulated in log space.
///
/// A denominator argument at a pole makes the whole ratio exactly 0
/// (1/Gamma(-k) = 0); a numerator argument at a pole throws PoleError.
double gamma_ratio(const std::vector<double>& nums, const std::vector<double>& dens);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
template <typename Real = double>
Real pochhammer(Real a, int k) {
  Real p = Real(1);
  for (int i = 0; i < k; ++i) p *= a + Real(i);
  return p;
}

/// Parameters of a terminating pFq series
///   sum_{k=0}^{K} prod (upper)_k / prod (lower)_k * argument^k / k!.
///
/// With `terms` unset the series terminates at the smallest K such that some
/// upper parameter equals -K. A lower parameter -M with M < K makes the series
/// ill-posed; such series must be regularized with lemma2_shift first.
struct HypSeriesSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double argument = 0.0;
  std::optional<int> terms;  ///< explicit K; nullopt means "auto"
};

/// K of the series; throws NotTerminatingError when "auto" finds no
/// non-positive integer upper parameter.
int termination_index(const HypSeriesSpec& spec);

/// Throws IllPosedSeriesError / NotTerminatingError when the spec cannot be
/// summed as a terminating series.
void validate(const HypSeriesSpec& spec);

/// Result of a series summation together with the sum of term magnitudes.
struct SeriesValue {
  double value = 0.0;
  double magnitude = 0.0;  ///< sum |term_k|
  int terms = 0;

  /// A-posteriori bound on the rounding error of `value`.
  double error_estimate() const;
};

/// Sums the terminating series with ratio-updated terms and Neumaier
/// accumulation. Returns exactly 1 when K = 0.
SeriesValue sum_terminating(const HypSeriesSpec& spec);

double pfq_terminating(const HypSeriesSpec& spec);

/// 1 + sum(upper) == sum(lower) within `tolerance` relative to the parameter
/// magnitudes.
bool is_saalschutzian(const HypSeriesSpec& spec, double tolerance = 1e-12);

/// A transformed series: original value = prefactor * F(series).
struct TransformedSeries {
  double prefactor = 1.0;
  HypSeriesSpec series;
};

/// Reverses the order of summation of a series terminating at K = n:
///
///   F(-n, a; b; x) = prod(a)_n / prod(b)_n (-x)^n
///                    F(-n, 1-b-n; 1-a-n; (-1)^{p-q} / x)
///
/// where p, q count the non-terminating upper and the lower parameters
/// (p = q is the usual p+1Fp case, giving argument 1/x). Throws
/// TransformInapplicableError for x = 0 or when some (b)_n or (a)_n vanishes.
TransformedSeries lemma1_reverse(const HypSeriesSpec& spec);

/// Removes a lower parameter -M (M a non-negative integer) in the regularized
/// sense:
///
///   F(a; -M, b; x) / Gamma(-M)
///     = x^{M+1} prod(a)_{M+1} / (Gamma(M+2) prod(b)_{M+1})
///       F(a+M+1; M+2, b+M+1; x).
///
/// Exactly one lower parameter must be a non-positive integer. The returned
/// series terminates when the input does. Throws TransformInapplicableError
/// when some (b)_{M+1} vanishes or the pattern is not matched.
TransformedSeries lemma2_shift(const HypSeriesSpec& spec);

/// Appell F2(a; b1, b2; c1, c2; x, y) with a = -m, so the double series
///   sum_{j+k<=m} (a)_{j+k} (b1)_j (b2)_k / ((c1)_j (c2)_k j! k!) x^j y^k
/// is finite and converges for all x, y.
struct AppellF2Spec {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double x = 0.0;
  double y = 0.0;
};

/// m = -a; throws NotTerminatingError when a is not a non-positive integer.
int appell_order(const AppellF2Spec& spec);

namespace detail {
void check_appell_lower(double c, int m, const char* which);
}

/// Sums of the F2 terms along the anti-diagonals j + k = s, s = 0..m, with
/// ratio-updated terms accumulated in `Real`. F2 is the sum of the returned
/// entries; when x = -u and y = u each entry is u^s times a coefficient, so
/// the same routine yields the expansion of F2 in powers of u.
template <typename Real = double>
std::vector<Real> appell_f2_diagonals(const AppellF2Spec& spec) {
  const int m = appell_order(spec);
  detail::check_appell_lower(spec.c1, m, "c1");
  detail::check_appell_lower(spec.c2, m, "c2");
  const Real a = Real(spec.a), b1 = Real(spec.b1), b2 = Real(spec.b2);
  const Real c1 = Real(spec.c1), c2 = Real(spec.c2);
  const Real x = Real(spec.x), y = Real(spec.y);

  std::vector<NeumaierSum<Real>> diagonals(static_cast<std::size_t>(m) + 1);
  Real row_head = Real(1);  // term (j, 0)
  for (int j = 0; j <= m; ++j) {
    Real term = row_head;
    for (int k = 0; j + k <= m; ++k) {
      diagonals[static_cast<std::size_t>(j + k)].add(term);
      term *= (a + Real(j + k)) * (b2 + Real(k)) / ((c2 + Real(k)) * Real(k + 1)) * y;
    }
    row_head *= (a + Real(j)) * (b1 + Real(j)) / ((c1 + Real(j)) * Real(j + 1)) * x;
  }
  std::vector<Real> out;
  out.reserve(diagonals.size());
  for (const auto& d : diagonals) out.push_back(d.value());
  return out;
}

/// Direct double-sum evaluation of the terminating F2.
SeriesValue appell_f2_sum(const AppellF2Spec& spec);

double appell_f2_terminating(const AppellF2Spec& spec);

/// The symmetric case F2(a; b1, b2; c1, c2; -u, u) evaluated as the single sum
///   sum_k (a)_k (b2)_k / (c2)_k u^k / k! 3F2(-k, b1, 1-c2-k; c1, 1-b2-k; 1).
/// Requires spec.x == -spec.y.
double appell_f2_symmetric_sum(const AppellF2Spec& spec);

/// Reduction F2(a; b1, b2; 2 b1, 2 b2; -u, u)
///   = 4F3(a/2, (a+1)/2, (b1+b2)/2, (b1+b2+1)/2;
///         (1+2 b1)/2, (1+2 b2)/2, b1+b2; u^2).
/// Throws TransformInapplicableError unless c1 = 2 b1, c2 = 2 b2, x = -y.
HypSeriesSpec f2_symmetric_to_4f3(const AppellF2Spec& spec);

}  // namespace orthocorr

#pragma once

// Closed-form evaluation of the correlation function
//
//   R_{m,n}(y) = \int p_n(x) p_{n+m}(x+y) w(x) dx
//
// for the seven classical families. R_{m,n} is a polynomial of degree m in y.

#include <string_view>
#include <vector>

#include "orthocorr/family.hpp"
#include "orthocorr/hypergeometric.hpp"

namespace orthocorr {

struct CorrelationQuery {
  Family family;
  int m = 0;
  int n = 0;
  double y = 0.0;
};

enum class Representation {
  hyp_form,             ///< 4F3 / F2 / 1F1 closed form
  coeff_form,           ///< finite sum in powers of y
  monomial,             ///< single-term result (Hermite)
  norm_constant,        ///< m = 0, R = h_n
  oracle_interpolated,  ///< Jacobi fallback when the F2 lower parameter degenerates
};

std::string_view to_string(Representation r);

struct CorrResult {
  double value = 0.0;
  Representation representation = Representation::coeff_form;
  double est_error = 0.0;  ///< a-posteriori bound, always >= 0
};

/// c_0 ... c_m with R_{m,n}(y) = sum_j c_j y^j.
struct CoeffVector {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double y) const;
};

/// Which closed form to evaluate. `automatic` uses the coefficient sums for
/// |y| < kYSwitch and the hypergeometric 4/y^2 (or 2/y) forms above it.
enum class Form {
  automatic,
  hypergeometric,
  coefficients,
  reversed,  ///< summation-reversed 4F3 in y^2/4 (Gegenbauer, Chebyshev, Legendre)
};

inline constexpr double kYSwitch = 2.0;

/// R_{m,n}(y). For m = 0 returns h_n for every y.
CorrResult corr(const CorrelationQuery& query, Form form = Form::automatic);

/// F2 form of the Jacobi correlation; needs m >= 1 and y != 0.
CorrResult corr_jacobi_f2(double alpha, double beta, int m, int n, double y);

CorrResult corr_jacobi(double alpha, double beta, int m, int n, double y,
                       Form form = Form::automatic);
CorrResult corr_gegenbauer(double alpha, int m, int n, double y, Form form = Form::automatic);
CorrResult corr_gegenbauer_reversed(double alpha, int m, int n, double y);
CorrResult corr_chebyshev_t(int m, int n, double y, Form form = Form::automatic);
CorrResult corr_chebyshev_u(int m, int n, double y, Form form = Form::automatic);
CorrResult corr_legendre(int m, int n, double y, Form form = Form::automatic);
CorrResult corr_laguerre(double alpha, int m, int n, double y, Form form = Form::automatic);
CorrResult corr_hermite(int m, int n, double y);

/// The equivalent Legendre expressions, all of which must agree.
enum class LegendreVariant {
  gamma_sum,         ///< sum of Gamma ratios times (2y)^{m-2k}
  hypergeometric,    ///< Gamma prefactor times 4F3(4/y^2)
  pochhammer,        ///< (2n+2)_{2m-1} / (n+1)_m prefactor times the same 4F3
  binomial_sum,      ///< sum of binomials times (2y)^{m-2k} / (m-2k)
  reversed,          ///< 4F3(y^2/4)
};

double corr_legendre_variant(LegendreVariant variant, int m, int n, double y);

/// Exact coefficient list of R_{m,n} (length m+1). Coefficients that vanish by
/// parity are exactly zero.
CoeffVector coefficient_vector(const Family& family, int m, int n);

/// Every 4F3 the closed forms build for (family, m, n, y), hypergeometric and
/// reversed forms alike; used to check the Saalschutz balance.
std::vector<HypSeriesSpec> hypergeometric_specs(const Family& family, int m, int n, double y);

}  // namespace orthocorr

#include "orthocorr/correlation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "orthocorr/precision.hpp"
#include "orthocorr/quadrature.hpp"

#ifndef ORTHOCORR_MUTATION
#define ORTHOCORR_MUTATION 0
#endif

namespace orthocorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Documented accuracy of gamma_ratio.
constexpr double kGammaRelError = 1e-13;

void require_degrees(int m, int n) {
  if (m < 0 || n < 0) throw ParameterDomainError("m and n must be non-negative");
  if (n + m > kMaxDegree) {
    throw ParameterDomainError("n + m exceeds the supported degree " +
                               std::to_string(kMaxDegree));
  }
}

void require_positive_m(int m, const char* what) {
  if (m < 1) throw ParameterDomainError(std::string(what) + " needs m >= 1");
}

void require_nonzero_y(double y) {
  if (y == 0.0) throw DomainError("the 4/y^2 closed form needs y != 0");
}

bool use_hypergeometric(Form form, double y) {
  if (form == Form::automatic) return std::fabs(y) >= kYSwitch;
  return form == Form::hypergeometric;
}

CorrResult evaluate_coefficients(const std::vector<double>& c, double y) {
  NeumaierSum<double> sum;
  double power = 1.0;
  for (double cj : c) {
    if (cj != 0.0) sum.add(cj * power);
    power *= y;
  }
  const double terms = static_cast<double>(c.size()) + 2.0;
  return {sum.value(), Representation::coeff_form,
          (2.0 * terms * kEps + kGammaRelError) * sum.magnitude()};
}

CorrResult evaluate_series(double prefactor, const HypSeriesSpec& spec) {
  const SeriesValue s = sum_terminating(spec);
  const double value = prefactor * s.value;
  return {value, Representation::hyp_form,
          std::fabs(prefactor) * s.error_estimate() + kGammaRelError * std::fabs(value)};
}

// Shared pieces of the 4F3 closed forms.

HypSeriesSpec leading_4f3(int m, double lower2, double lower3, double y) {
  const double md = m;
  return {{-md / 2.0, (1.0 - md) / 2.0, (1.0 - md) / 2.0, (2.0 - md) / 2.0},
          {1.0 - md, lower2, lower3},
          4.0 / (y * y),
          std::nullopt};
}

// Reversed 4F3 in y^2/4 with upper {(e-m)/2, (e+m)/2, (e-m)/2 - s, (e+m)/2 + s}
// where e = 2 for even m and e = 1 for odd m.
HypSeriesSpec reversed_4f3(int m, double shift, double y) {
  const double md = m;
  const double e = (m % 2 == 0) ? 2.0 : 1.0;
  HypSeriesSpec spec{{(e - md) / 2.0, (e + md) / 2.0, (e - md) / 2.0 - shift,
                      (e + md) / 2.0 + shift},
                     {},
                     y * y / 4.0,
                     std::nullopt};
  if (m % 2 == 0) {
    spec.lower = {1.5, 1.5, 2.0};
  } else {
    spec.lower = {0.5, 1.0, 1.5};
  }
  return spec;
}

HypSeriesSpec gegenbauer_hyp_spec(double alpha, int m, int n, double y) {
#if ORTHOCORR_MUTATION == 3
  const double last = n + alpha + 2.0;
#else
  const double last = n + alpha + 1.0;
#endif
  return leading_4f3(m, 1.0 - m - n - alpha, last, y);
}

HypSeriesSpec chebyshev_t_hyp_spec(int m, int n, double y) {
  return leading_4f3(m, 1.0 - m - n, n + 1.0, y);
}

HypSeriesSpec legendre_hyp_spec(int m, int n, double y) {
  return leading_4f3(m, 0.5 - m - n, n + 1.5, y);
}

// Reversed Legendre series: the shift (n + 1/2) enters as (3+m)/2 + n and
// (1-m)/2 - n for even m, m/2 + n + 1 and -m/2 - n for odd m.
HypSeriesSpec legendre_reversed_spec(int m, int n, double y) {
  return reversed_4f3(m, n + 0.5, y);
}

// Gegenbauer family constant pi 2^{1-2a} Gamma(n+2a) / (n! Gamma(a)^2).
CorrResult gegenbauer_hyp(double alpha, int m, int n, double y) {
  require_nonzero_y(y);
  const double prefactor = kPi * std::exp2(1.0 - 2.0 * alpha + m) *
                           gamma_ratio({2.0 * alpha + n, alpha + m + n},
                                       {alpha, alpha, alpha + n + 1.0, n + 1.0, m + 1.0}) *
                           std::pow(y, m);
  return evaluate_series(prefactor, gegenbauer_hyp_spec(alpha, m, n, y));
}

CorrResult chebyshev_t_hyp(int m, int n, double y) {
  require_nonzero_y(y);
  const double prefactor = kPi * gamma_ratio({m + n + 1.0}, {m + 1.0, n + 1.0}) *
                           std::exp2(m - 1.0) * std::pow(y, m);
  return evaluate_series(prefactor, chebyshev_t_hyp_spec(m, n, y));
}

CorrResult chebyshev_t_reversed(int m, int n, double y) {
  const double md = m, nd = n;
  const double prefactor = (m % 2 == 0) ? kPi * md * (md + nd) * (md + 2.0 * nd) * y * y / 4.0
                                        : kPi * (md + nd) * y;
  return evaluate_series(prefactor, reversed_4f3(m, nd, y));
}

CorrResult legendre_hyp(int m, int n, double y) {
  require_nonzero_y(y);
  const double prefactor =
      gamma_ratio({m + n + 0.5}, {m + 1.0, n + 1.5}) * std::pow(2.0 * y, m);
  return evaluate_series(prefactor, legendre_hyp_spec(m, n, y));
}

CorrResult legendre_reversed(int m, int n, double y) {
  const double md = m, nd = n;
  const double prefactor = (m % 2 == 0) ? md / 2.0 * (md + 2.0 * nd + 1.0) * y * y : 2.0 * y;
  return evaluate_series(prefactor, legendre_reversed_spec(m, n, y));
}

// Coefficient sums. Terms with m - 2k <= 0 vanish through 1/Gamma(m-2k) = 0,
// which gamma_ratio applies.

std::vector<double> gegenbauer_coefficients(double alpha, int m, int n) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  const double scale = kPi * std::exp2(1.0 - 2.0 * alpha);
  for (int k = 0; k < m; ++k) {
    const double g = gamma_ratio(
        {n + 2.0 * alpha, m + n + alpha - k, static_cast<double>(m - k)},
        {n + 1.0, alpha, alpha, n + alpha + 1.0 + k, m + 1.0 - 2 * k,
         static_cast<double>(m - 2 * k), k + 1.0});
    if (g == 0.0) continue;
    c[static_cast<std::size_t>(m - 2 * k)] += scale * g * std::ldexp(1.0, m - 2 * k);
  }
  return c;
}

std::vector<double> chebyshev_t_coefficients(int m, int n) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  const double scale = kPi * (n + m) / 2.0;
  for (int k = 0; k < m; ++k) {
    const double g = gamma_ratio({m + n - k + 0.0, m - k + 0.0},
                                 {n + 1.0 + k, m + 1.0 - 2 * k, m - 2.0 * k, k + 1.0});
    if (g == 0.0) continue;
    c[static_cast<std::size_t>(m - 2 * k)] += scale * g * std::ldexp(1.0, m - 2 * k);
  }
  return c;
}

std::vector<double> chebyshev_u_coefficients(int m, int n) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  const double scale = kPi * (n + 1.0) / 2.0;
  for (int k = 0; k < m; ++k) {
    const double g = gamma_ratio({m + n + 1.0 - k, m - k + 0.0},
                                 {n + 2.0 + k, m + 1.0 - 2 * k, m - 2.0 * k, k + 1.0});
    if (g == 0.0) continue;
    c[static_cast<std::size_t>(m - 2 * k)] += scale * g * std::ldexp(1.0, m - 2 * k);
  }
  return c;
}

std::vector<double> legendre_coefficients(int m, int n) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 0; k < m; ++k) {
    const double g = gamma_ratio({n + m + 0.5 - k, m - k + 0.0},
                                 {n + 1.5 + k, m + 1.0 - 2 * k, m - 2.0 * k, k + 1.0});
    if (g == 0.0) continue;
    c[static_cast<std::size_t>(m - 2 * k)] += g * std::ldexp(1.0, m - 2 * k);
  }
  return c;
}

// -Gamma(n+1+alpha) / n!
double laguerre_scale(double alpha, int n) {
#if ORTHOCORR_MUTATION == 1
  return gamma_ratio({n + 1.0 + alpha}, {n + 1.0});
#else
  return -gamma_ratio({n + 1.0 + alpha}, {n + 1.0});
#endif
}

std::vector<double> laguerre_coefficients(double alpha, int m, int n) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  // (1-m)_k / ((2)_k k!) by ratio updates
  double term = laguerre_scale(alpha, n);
  for (int k = 0; k < m; ++k) {
    c[static_cast<std::size_t>(k) + 1] = term;
    term *= (1.0 - m + k) / ((2.0 + k) * (k + 1.0));
  }
  return c;
}

double hermite_coefficient(int m, int n) {
#if ORTHOCORR_MUTATION == 2
  const double rising = pochhammer(m + 2.0, n);
#else
  const double rising = pochhammer(m + 1.0, n);
#endif
  return std::ldexp(std::sqrt(kPi), n + m) * rising;
}

struct JacobiF2 {
  double prefactor;  ///< everything in front of (y/2)^m F2
  AppellF2Spec f2;
};

JacobiF2 jacobi_f2_setup(double alpha, double beta, int m, int n) {
  const double s = alpha + beta;
  const double prefactor =
      std::exp2(s + 1.0) * gamma_ratio({alpha + n + 1.0, beta + n + 1.0, s + 2.0 * m + 2.0 * n + 1.0},
                                       {s + 2.0 * n + 2.0, s + m + n + 1.0, n + 1.0, m + 1.0});
  AppellF2Spec f2{-static_cast<double>(m), beta + n + 1.0, -beta - m - n, s + 2.0 * n + 2.0,
                  -s - 2.0 * m - 2.0 * n, 0.0, 0.0};
  return {prefactor, f2};
}

bool jacobi_degenerate(const AppellF2Spec& f2, int m) {
  try {
    detail::check_appell_lower(f2.c1, m, "c1");
    detail::check_appell_lower(f2.c2, m, "c2");
  } catch (const IllPosedSeriesError&) {
    return true;
  }
  return false;
}

std::vector<double> jacobi_coefficients(double alpha, double beta, int m, int n) {
  JacobiF2 setup = jacobi_f2_setup(alpha, beta, m, n);
  if (jacobi_degenerate(setup.f2, m)) {
    return oracle_coefficients(Family::jacobi(alpha, beta), m, n).coeffs;
  }
  // With arguments (-2, 2) the anti-diagonal s carries y^{-s}; the expansion
  // cancels heavily, hence the extended precision.
  setup.f2.x = -2.0;
  setup.f2.y = 2.0;
  const std::vector<quad> diagonals = appell_f2_diagonals<quad>(setup.f2);
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  const quad scale = quad(setup.prefactor) * ldexp(quad(1), -m);
  const bool symmetric = alpha == beta;
  for (int s = 0; s <= m; ++s) {
    if (symmetric && s % 2 == 1) continue;
    c[static_cast<std::size_t>(m - s)] = static_cast<double>(scale * diagonals[s]);
  }
  return c;
}

CorrResult jacobi_hyp(double alpha, double beta, int m, int n, double y) {
  require_nonzero_y(y);
  const JacobiF2 setup = jacobi_f2_setup(alpha, beta, m, n);
  if (alpha != beta) return corr_jacobi_f2(alpha, beta, m, n, y);
  if (jacobi_degenerate(setup.f2, m)) return corr_jacobi_f2(alpha, beta, m, n, y);
  AppellF2Spec f2 = setup.f2;
  f2.x = -2.0 / y;
  f2.y = 2.0 / y;
  const double prefactor = setup.prefactor * std::pow(y / 2.0, m);
  return evaluate_series(prefactor, f2_symmetric_to_4f3(f2));
}

CorrResult oracle_fallback(const Family& family, int m, int n, double y) {
  CorrResult r = evaluate_coefficients(oracle_coefficients(family, m, n).coeffs, y);
  r.representation = Representation::oracle_interpolated;
  r.est_error += 1e-9 * std::fabs(r.value);
  return r;
}

}  // namespace

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::hyp_form: return "hyp_form";
    case Representation::coeff_form: return "coeff_form";
    case Representation::monomial: return "monomial";
    case Representation::norm_constant: return "norm_constant";
    case Representation::oracle_interpolated: return "oracle_interpolated";
  }
  return "unknown";
}

double CoeffVector::operator()(double y) const { return evaluate_coefficients(coeffs, y).value; }

CorrResult corr_jacobi_f2(double alpha, double beta, int m, int n, double y) {
  const Family family = Family::jacobi(alpha, beta);
  require_degrees(m, n);
  require_positive_m(m, "the Jacobi F2 form");
  require_nonzero_y(y);
  JacobiF2 setup = jacobi_f2_setup(alpha, beta, m, n);
  if (jacobi_degenerate(setup.f2, m)) return oracle_fallback(family, m, n, y);
  setup.f2.x = -2.0 / y;
  setup.f2.y = 2.0 / y;
  const SeriesValue s = appell_f2_sum(setup.f2);
  const double prefactor = setup.prefactor * std::pow(y / 2.0, m);
  const double value = prefactor * s.value;
  return {value, Representation::hyp_form,
          std::fabs(prefactor) * s.error_estimate() + kGammaRelError * std::fabs(value)};
}

CorrResult corr_jacobi(double alpha, double beta, int m, int n, double y, Form form) {
  const Family family = Family::jacobi(alpha, beta);
  require_degrees(m, n);
  if (m == 0) return corr({family, m, n, y}, form);
  if (form == Form::reversed) {
    throw TransformInapplicableError("the Jacobi correlation has no reversed form");
  }
  if (use_hypergeometric(form, y)) return jacobi_hyp(alpha, beta, m, n, y);
  if (jacobi_degenerate(jacobi_f2_setup(alpha, beta, m, n).f2, m)) {
    return oracle_fallback(family, m, n, y);
  }
  return evaluate_coefficients(jacobi_coefficients(alpha, beta, m, n), y);
}

CorrResult corr_gegenbauer(double alpha, int m, int n, double y, Form form) {
  const Family family = Family::gegenbauer(alpha);
  require_degrees(m, n);
  if (m == 0) return corr({family, m, n, y}, form);
  if (form == Form::reversed) return corr_gegenbauer_reversed(alpha, m, n, y);
  if (use_hypergeometric(form, y)) return gegenbauer_hyp(alpha, m, n, y);
  return evaluate_coefficients(gegenbauer_coefficients(alpha, m, n), y);
}

CorrResult corr_gegenbauer_reversed(double alpha, int m, int n, double y) {
  Family::gegenbauer(alpha);
  require_degrees(m, n);
  require_positive_m(m, "the reversed Gegenbauer form");
  const double md = m;
  const double scale = kPi * std::exp2(-2.0 * alpha) *
                       gamma_ratio({n + 2.0 * alpha}, {alpha, alpha, n + 1.0});
  const double prefactor =
      (m % 2 == 0) ? scale * md * (md + 2.0 * n + 2.0 * alpha) * y * y : 4.0 * scale * y;
  return evaluate_series(prefactor, reversed_4f3(m, n + alpha, y));
}

CorrResult corr_chebyshev_t(int m, int n, double y, Form form) {
  require_degrees(m, n);
  if (m == 0) return corr({Family::chebyshev_t(), m, n, y}, form);
  if (form == Form::reversed) return chebyshev_t_reversed(m, n, y);
  if (use_hypergeometric(form, y)) return chebyshev_t_hyp(m, n, y);
  return evaluate_coefficients(chebyshev_t_coefficients(m, n), y);
}

CorrResult corr_chebyshev_u(int m, int n, double y, Form form) {
  require_degrees(m, n);
  if (m == 0) return corr({Family::chebyshev_u(), m, n, y}, form);
  if (form == Form::reversed) return corr_gegenbauer_reversed(1.0, m, n, y);
  if (use_hypergeometric(form, y)) return gegenbauer_hyp(1.0, m, n, y);
  return evaluate_coefficients(chebyshev_u_coefficients(m, n), y);
}

CorrResult corr_legendre(int m, int n, double y, Form form) {
  require_degrees(m, n);
  if (m == 0) return corr({Family::legendre(), m, n, y}, form);
  if (form == Form::reversed) return legendre_reversed(m, n, y);
  if (use_hypergeometric(form, y)) return legendre_hyp(m, n, y);
  return evaluate_coefficients(legendre_coefficients(m, n), y);
}

double corr_legendre_variant(LegendreVariant variant, int m, int n, double y) {
  require_degrees(m, n);
  require_positive_m(m, "the Legendre closed forms");
  switch (variant) {
    case LegendreVariant::gamma_sum:
      return evaluate_coefficients(legendre_coefficients(m, n), y).value;
    case LegendreVariant::hypergeometric:
      return legendre_hyp(m, n, y).value;
    case LegendreVariant::pochhammer: {
      require_nonzero_y(y);
      const double prefactor = 2.0 * pochhammer(2.0 * n + 2.0, 2 * m - 1) /
                               pochhammer(n + 1.0, m) / std::tgamma(m + 1.0) *
                               std::pow(y / 2.0, m);
      return prefactor * pfq_terminating(legendre_hyp_spec(m, n, y));
    }
    case LegendreVariant::binomial_sum: {
      auto binom = [](double top, double bottom) {
        return gamma_ratio({top + 1.0}, {bottom + 1.0, top - bottom + 1.0});
      };
      NeumaierSum<double> sum;
      for (int k = 0; 2 * k < m; ++k) {
        const int power = m - 2 * k;
        sum.add(binom(n + 0.5 + m - 1.0 - k, n + 0.5 + k) * binom(m - 1.0 - k, k) / power *
                std::pow(2.0 * y, power));
      }
      return sum.value();
    }
    case LegendreVariant::reversed:
      return legendre_reversed(m, n, y).value;
  }
  throw InternalConsistencyError("corr_legendre_variant: unknown variant");
}

CorrResult corr_laguerre(double alpha, int m, int n, double y, Form form) {
  Family::laguerre(alpha);
  require_degrees(m, n);
  if (m == 0) return corr({Family::laguerre(alpha), m, n, y}, form);
  if (form == Form::reversed) {
    throw TransformInapplicableError("the Laguerre correlation has no reversed form");
  }
  if (form == Form::hypergeometric) {
    const HypSeriesSpec spec{{1.0 - m}, {2.0}, y, std::nullopt};
    return evaluate_series(laguerre_scale(alpha, n) * y, spec);
  }
  return evaluate_coefficients(laguerre_coefficients(alpha, m, n), y);
}

CorrResult corr_hermite(int m, int n, double y) {
  require_degrees(m, n);
  const double value = hermite_coefficient(m, n) * std::pow(y, m);
  return {value, Representation::monomial, 2.0 * (m + n + 2) * kEps * std::fabs(value)};
}

CorrResult corr(const CorrelationQuery& q, Form form) {
  require_degrees(q.m, q.n);
  const Family& f = q.family;
  if (q.m == 0) {
    const double h = norm_h(f, q.n);
    return {h, Representation::norm_constant, kGammaRelError * std::fabs(h)};
  }
  switch (f.kind()) {
    case FamilyKind::legendre: return corr_legendre(q.m, q.n, q.y, form);
    case FamilyKind::chebyshev_t: return corr_chebyshev_t(q.m, q.n, q.y, form);
    case FamilyKind::chebyshev_u: return corr_chebyshev_u(q.m, q.n, q.y, form);
    case FamilyKind::gegenbauer: return corr_gegenbauer(f.alpha(), q.m, q.n, q.y, form);
    case FamilyKind::jacobi: return corr_jacobi(f.alpha(), f.beta(), q.m, q.n, q.y, form);
    case FamilyKind::laguerre: return corr_laguerre(f.alpha(), q.m, q.n, q.y, form);
    case FamilyKind::hermite: return corr_hermite(q.m, q.n, q.y);
  }
  throw InternalConsistencyError("corr: unknown family");
}

CoeffVector coefficient_vector(const Family& family, int m, int n) {
  require_degrees(m, n);
  if (m == 0) return {{norm_h(family, n)}};
  switch (family.kind()) {
    case FamilyKind::legendre: return {legendre_coefficients(m, n)};
    case FamilyKind::chebyshev_t: return {chebyshev_t_coefficients(m, n)};
    case FamilyKind::chebyshev_u: return {chebyshev_u_coefficients(m, n)};
    case FamilyKind::gegenbauer: return {gegenbauer_coefficients(family.alpha(), m, n)};
    case FamilyKind::jacobi: return {jacobi_coefficients(family.alpha(), family.beta(), m, n)};
    case FamilyKind::laguerre: return {laguerre_coefficients(family.alpha(), m, n)};
    case FamilyKind::hermite: {
      std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
      c.back() = hermite_coefficient(m, n);
      return {c};
    }
  }
  throw InternalConsistencyError("coefficient_vector: unknown family");
}

std::vector<HypSeriesSpec> hypergeometric_specs(const Family& family, int m, int n, double y) {
  require_degrees(m, n);
  if (m == 0 || y == 0.0) return {};
  switch (family.kind()) {
    case FamilyKind::gegenbauer:
      return {gegenbauer_hyp_spec(family.alpha(), m, n, y),
              reversed_4f3(m, n + family.alpha(), y)};
    case FamilyKind::chebyshev_u:
      return {gegenbauer_hyp_spec(1.0, m, n, y), reversed_4f3(m, n + 1.0, y)};
    case FamilyKind::chebyshev_t:
      return {chebyshev_t_hyp_spec(m, n, y), reversed_4f3(m, n, y)};
    case FamilyKind::legendre:
      return {legendre_hyp_spec(m, n, y), legendre_reversed_spec(m, n, y)};
    case FamilyKind::jacobi: {
      if (family.alpha() != family.beta()) return {};
      AppellF2Spec f2 = jacobi_f2_setup(family.alpha(), family.beta(), m, n).f2;
      f2.x = -2.0 / y;
      f2.y = 2.0 / y;
      return {f2_symmetric_to_4f3(f2)};
    }
    case FamilyKind::laguerre:
    case FamilyKind::hermite:
      return {};
  }
  return {};
}

}  // namespace orthocorr

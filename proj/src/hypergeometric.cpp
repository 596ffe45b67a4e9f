#include "orthocorr/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <string>

namespace orthocorr {

namespace {

// Godfrey's coefficients for g = 607/128.
constexpr long double kLanczosG = 607.0L / 128.0L;
constexpr std::array<long double, 15> kLanczos = {
    0.99999999999999709182L,     57.156235665862923517L,     -59.597960355475491248L,
    14.136097974741747174L,      -0.49191381609762019978L,   .33994649984811888699e-4L,
    .46523628927048575665e-4L,   -.98374475304879564677e-4L, .15808870322491248884e-3L,
    -.21026444172410488319e-3L,  .21743961811521264320e-3L,  -.16431810653676389022e-3L,
    .84418223983852743293e-4L,   -.26190838401581408670e-4L, .36899182659531622704e-5L,
};

// ln Gamma(x) for x >= 1/2.
long double lanczos_log_gamma(long double x) {
  const long double z = x - 1.0L;
  long double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<long double>(i));
  }
  const long double t = z + kLanczosG + 0.5L;
  constexpr long double half_log_two_pi = 0.91893853320467274178032973640562L;
  return half_log_two_pi + (z + 0.5L) * std::log(t) - t + std::log(series);
}

// sin(pi x) with exact argument reduction.
long double sin_pi(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  constexpr long double pi = 3.14159265358979323846264338327950288L;
  if (r > 0.5) return std::sin(pi * (1.0L - r));
  if (r < -0.5) return -std::sin(pi * (1.0L + r));
  return std::sin(pi * static_cast<long double>(r));
}

// Smallest index at which (b)_k vanishes, or nullopt.
std::optional<int> pochhammer_zero_index(double b) {
  if (!is_nonpositive_integer(b)) return std::nullopt;
  return static_cast<int>(-b) + 1;
}

std::optional<int> nonpositive_integer_value(double x) {
  if (!is_nonpositive_integer(x)) return std::nullopt;
  return static_cast<int>(-x);
}

}  // namespace

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x) && x > -1e9;
}

namespace {

struct ExtendedLogGamma {
  long double log_abs;
  int sign;
};

ExtendedLogGamma ln_gamma_extended(double x) {
  if (std::isnan(x)) throw DomainError("ln_gamma_signed: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("Gamma has a pole at " + std::to_string(x));
  }
  if (x >= 0.5) return {lanczos_log_gamma(x), 1};
  // Gamma(x) Gamma(1-x) = pi / sin(pi x); Gamma(1-x) > 0 here.
  const long double s = sin_pi(x);
  constexpr long double log_pi = 1.14472988584940017414342735135305871L;
  return {log_pi - std::log(std::fabs(s)) - lanczos_log_gamma(1.0L - static_cast<long double>(x)),
          s < 0 ? -1 : 1};
}

}  // namespace

SignedLogGamma ln_gamma_signed(double x) {
  const auto g = ln_gamma_extended(x);
  return {static_cast<double>(g.log_abs), g.sign};
}

double gamma_ratio(const std::vector<double>& nums, const std::vector<double>& dens) {
  for (double v : nums) {
    if (is_nonpositive_integer(v)) {
      throw PoleError("gamma_ratio: numerator Gamma at pole " + std::to_string(v));
    }
  }
  for (double v : dens) {
    if (is_nonpositive_integer(v)) return 0.0;
  }
  long double log_sum = 0.0L;
  int sign = 1;
  for (double v : nums) {
    const auto g = ln_gamma_extended(v);
    log_sum += g.log_abs;
    sign *= g.sign;
  }
  for (double v : dens) {
    const auto g = ln_gamma_extended(v);
    log_sum -= g.log_abs;
    sign *= g.sign;
  }
  return sign * static_cast<double>(std::exp(log_sum));
}

double SeriesValue::error_estimate() const {
  return 2.0 * (terms + 2) * std::numeric_limits<double>::epsilon() * magnitude;
}

int termination_index(const HypSeriesSpec& spec) {
  if (spec.terms) {
    if (*spec.terms < 0) throw IllPosedSeriesError("explicit termination index must be >= 0");
    return *spec.terms;
  }
  std::optional<int> k;
  for (double a : spec.upper) {
    if (auto v = nonpositive_integer_value(a)) k = k ? std::min(*k, *v) : *v;
  }
  if (!k) throw NotTerminatingError("series has no non-positive integer upper parameter");
  return *k;
}

void validate(const HypSeriesSpec& spec) {
  const int k_max = termination_index(spec);
  for (double b : spec.lower) {
    if (auto zero_at = pochhammer_zero_index(b); zero_at && *zero_at <= k_max) {
      throw IllPosedSeriesError("lower parameter " + std::to_string(b) +
                                " vanishes before the series terminates at K=" +
                                std::to_string(k_max));
    }
  }
  if (!std::isfinite(spec.argument)) throw IllPosedSeriesError("series argument is not finite");
}

SeriesValue sum_terminating(const HypSeriesSpec& spec) {
  validate(spec);
  const int k_max = termination_index(spec);
  NeumaierSum<double> sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 0; k < k_max; ++k) {
    double ratio = spec.argument / (k + 1.0);
    for (double a : spec.upper) ratio *= a + k;
    for (double b : spec.lower) ratio /= b + k;
    term *= ratio;
    if (term == 0.0) break;
    sum.add(term);
  }
  return {sum.value(), sum.magnitude(), k_max + 1};
}

double pfq_terminating(const HypSeriesSpec& spec) { return sum_terminating(spec).value; }

bool is_saalschutzian(const HypSeriesSpec& spec, double tolerance) {
  double upper = 1.0, lower = 0.0, scale = 1.0;
  for (double a : spec.upper) {
    upper += a;
    scale += std::fabs(a);
  }
  for (double b : spec.lower) {
    lower += b;
    scale += std::fabs(b);
  }
  return std::fabs(upper - lower) <= tolerance * scale;
}

TransformedSeries lemma1_reverse(const HypSeriesSpec& spec) {
  const int n = termination_index(spec);
  const double x = spec.argument;
  if (x == 0.0) throw TransformInapplicableError("series reversal needs a non-zero argument");

  std::vector<double> rest = spec.upper;
  auto it = std::find(rest.begin(), rest.end(), -static_cast<double>(n));
  if (it == rest.end()) {
    throw TransformInapplicableError("series reversal needs the upper parameter -" +
                                     std::to_string(n));
  }
  rest.erase(it);

  TransformedSeries out;
  double prefactor = std::pow(-x, n);
  out.series.upper.push_back(-static_cast<double>(n));
  for (double b : spec.lower) {
    const double p = pochhammer(b, n);
    if (p == 0.0) throw TransformInapplicableError("(b)_n vanishes; reversal undefined");
    prefactor /= p;
    out.series.upper.push_back(1.0 - b - n);
  }
  for (double a : rest) {
    const double p = pochhammer(a, n);
    if (p == 0.0) throw TransformInapplicableError("(a)_n vanishes; reversal undefined");
    prefactor *= p;
    out.series.lower.push_back(1.0 - a - n);
  }
  const bool odd_excess = (rest.size() + spec.lower.size()) % 2 == 1;
  out.series.argument = (odd_excess ? -1.0 : 1.0) / x;
  if (spec.terms) out.series.terms = n;
  out.prefactor = prefactor;
  return out;
}

TransformedSeries lemma2_shift(const HypSeriesSpec& spec) {
  std::optional<std::size_t> pole;
  for (std::size_t i = 0; i < spec.lower.size(); ++i) {
    if (is_nonpositive_integer(spec.lower[i])) {
      if (pole) {
        throw TransformInapplicableError("more than one non-positive integer lower parameter");
      }
      pole = i;
    }
  }
  if (!pole) throw TransformInapplicableError("no non-positive integer lower parameter");
  const int shift = static_cast<int>(-spec.lower[*pole]) + 1;  // M + 1
  const double x = spec.argument;

  TransformedSeries out;
  double prefactor = std::pow(x, shift) / std::exp(std::lgamma(shift + 1.0));
  for (double a : spec.upper) {
    prefactor *= pochhammer(a, shift);
    out.series.upper.push_back(a + shift);
  }
  out.series.lower.push_back(shift + 1.0);
  for (std::size_t i = 0; i < spec.lower.size(); ++i) {
    if (i == *pole) continue;
    const double b = spec.lower[i];
    const double p = pochhammer(b, shift);
    if (p == 0.0) throw TransformInapplicableError("(b)_{M+1} vanishes; shift undefined");
    prefactor /= p;
    out.series.lower.push_back(b + shift);
  }
  out.series.argument = x;
  if (spec.terms) out.series.terms = std::max(0, *spec.terms - shift);
  out.prefactor = prefactor;
  return out;
}

int appell_order(const AppellF2Spec& spec) {
  auto m = nonpositive_integer_value(spec.a);
  if (!m) throw NotTerminatingError("Appell F2 needs a = -m with integer m >= 0");
  return *m;
}

namespace detail {
void check_appell_lower(double c, int m, const char* which) {
  if (auto zero_at = pochhammer_zero_index(c); zero_at && *zero_at <= m) {
    throw IllPosedSeriesError(std::string("Appell F2 lower parameter ") + which +
                              " vanishes inside the summation range");
  }
}
}  // namespace detail

SeriesValue appell_f2_sum(const AppellF2Spec& spec) {
  const int m = appell_order(spec);
  detail::check_appell_lower(spec.c1, m, "c1");
  detail::check_appell_lower(spec.c2, m, "c2");
  NeumaierSum<double> sum;
  double row_head = 1.0;
  for (int j = 0; j <= m; ++j) {
    double term = row_head;
    for (int k = 0; j + k <= m; ++k) {
      sum.add(term);
      term *= (spec.a + j + k) * (spec.b2 + k) / ((spec.c2 + k) * (k + 1.0)) * spec.y;
    }
    row_head *= (spec.a + j) * (spec.b1 + j) / ((spec.c1 + j) * (j + 1.0)) * spec.x;
  }
  return {sum.value(), sum.magnitude(), sum.count()};
}

double appell_f2_terminating(const AppellF2Spec& spec) { return appell_f2_sum(spec).value; }

double appell_f2_symmetric_sum(const AppellF2Spec& spec) {
  if (spec.x != -spec.y) {
    throw TransformInapplicableError("symmetric F2 expansion needs x = -y");
  }
  const int m = appell_order(spec);
  const double u = spec.y;
  NeumaierSum<double> sum;
  double outer = 1.0;  // (a)_k (b2)_k / (c2)_k u^k / k!
  for (int k = 0; k <= m; ++k) {
    if (outer != 0.0) {
      HypSeriesSpec inner{{-static_cast<double>(k), spec.b1, 1.0 - spec.c2 - k},
                          {spec.c1, 1.0 - spec.b2 - k},
                          1.0,
                          k};
      sum.add(outer * pfq_terminating(inner));
    }
    outer *= (spec.a + k) * (spec.b2 + k) / ((spec.c2 + k) * (k + 1.0)) * u;
  }
  return sum.value();
}

HypSeriesSpec f2_symmetric_to_4f3(const AppellF2Spec& spec) {
  auto close = [](double p, double q) {
    return std::fabs(p - q) <= 1e-14 * std::max({1.0, std::fabs(p), std::fabs(q)});
  };
  if (!close(spec.c1, 2.0 * spec.b1) || !close(spec.c2, 2.0 * spec.b2) ||
      spec.x != -spec.y) {
    throw TransformInapplicableError(
        "F2 -> 4F3 reduction needs c1 = 2 b1, c2 = 2 b2 and x = -y");
  }
  const double a = spec.a;
  const double s = spec.b1 + spec.b2;
  return HypSeriesSpec{{a / 2.0, (a + 1.0) / 2.0, s / 2.0, (s + 1.0) / 2.0},
                       {(1.0 + 2.0 * spec.b1) / 2.0, (1.0 + 2.0 * spec.b2) / 2.0, s},
                       spec.y * spec.y,
                       std::nullopt};
}

}  // namespace orthocorr

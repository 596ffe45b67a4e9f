#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "orthocorr/hypergeometric.hpp"
#include "orthocorr/precision.hpp"
#include "support.hpp"

using namespace orthocorr;
using test::Draw;
using test::rel;

namespace {

// Reference sum in 113-bit arithmetic, term by term from the definition.
double pfq_reference(const HypSeriesSpec& s, int k_end) {
  quad sum = 0, term = 1;
  for (int k = 0; k <= k_end; ++k) {
    sum += term;
    quad ratio = quad(s.argument) / (k + 1);
    for (double a : s.upper) ratio *= quad(a) + k;
    for (double b : s.lower) ratio /= quad(b) + k;
    term *= ratio;
  }
  return static_cast<double>(sum);
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_same_parameters(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  const auto g = sorted(got), w = sorted(want);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == doctest::Approx(w[i]).epsilon(1e-14));
}

}  // namespace

TEST_CASE("log gamma with sign") {
  auto g5 = ln_gamma_signed(5.0);
  CHECK(g5.sign == 1);
  CHECK(rel(g5.log_abs, std::log(24.0)) < 1e-15);
  auto gh = ln_gamma_signed(0.5);
  CHECK(gh.sign == 1);
  CHECK(rel(gh.log_abs, std::log(test::kSqrtPi)) < 1e-14);
  auto gm = ln_gamma_signed(-1.5);
  CHECK(gm.sign == 1);
  CHECK(rel(gm.log_abs, std::log(4 * test::kSqrtPi / 3)) < 1e-14);
  CHECK(ln_gamma_signed(-0.5).sign == -1);
  CHECK_THROWS_AS(ln_gamma_signed(0.0), PoleError);
  CHECK_THROWS_AS(ln_gamma_signed(-3.0), PoleError);
}

TEST_CASE("log gamma reconstructs Gamma to 1e-13 on [-50, 170]") {
  Draw draw(11);
  for (int i = 0; i < 2000; ++i) {
    const double x = draw.non_integer(-50.0, 170.0);
    const quad want = boost::math::tgamma(quad(x));
    const auto g = ln_gamma_signed(x);
    // exp in 113 bits so only the log-gamma error is measured.
    const quad got = g.sign * exp(quad(g.log_abs));
    INFO("x = " << x);
    CHECK(static_cast<double>(abs(got / want - 1)) < 1e-13);
  }
}

TEST_CASE("gamma ratio") {
  CHECK(rel(gamma_ratio({5}, {3}), 12.0) < 1e-15);
  CHECK(gamma_ratio({1}, {0}) == 0.0);
  CHECK(gamma_ratio({2.5, 3.1}, {-4, 0.7}) == 0.0);
  CHECK(rel(gamma_ratio({2.5}, {0.5}), 0.75) < 1e-15);
  CHECK_THROWS_AS(gamma_ratio({-2}, {1}), PoleError);
  // Large arguments that overflow the individual gammas.
  CHECK(rel(gamma_ratio({200.5}, {199.5}), 199.5) < 1e-12);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(-2.0, 5) == 0.0);
  CHECK(pochhammer(7.3, 0) == 1.0);
}

TEST_CASE("terminating series values") {
  CHECK(rel(pfq_terminating({{-1, 2}, {3}, 2.0}), -1.0 / 3) < 1e-15);
  CHECK(pfq_terminating({{-2, 1}, {1}, 1.0}) == 0.0);
  CHECK(rel(pfq_terminating({{-4, 2}, {5}, 1.0}), 3.0 / 14) < 1e-15);
  CHECK(pfq_terminating({{0, 2.5}, {-3.0}, 7.0}) == 1.0);  // terminates before the pole
  CHECK_THROWS_AS(pfq_terminating({{-3, 1}, {-1}, 1.0}), IllPosedSeriesError);
  CHECK_THROWS_AS(pfq_terminating({{0.5, 1}, {2}, 1.0}), NotTerminatingError);
  HypSeriesSpec explicit_terms{{0.5}, {}, 2.0, 3};
  CHECK(rel(pfq_terminating(explicit_terms), 1 + 1 + 1.5 + 2.5) < 1e-15);
}

TEST_CASE("pfq matches a 113-bit direct sum") {
  Draw draw(12);
  for (int i = 0; i < 500; ++i) {
    const int k_end = draw.integer(0, 12);
    HypSeriesSpec s;
    s.upper = {-static_cast<double>(k_end)};
    for (int j = draw.integer(0, 3); j > 0; --j) s.upper.push_back(draw.non_integer(-8, 8));
    for (int j = draw.integer(0, 3); j > 0; --j) s.lower.push_back(draw.non_integer(-8, 8));
    s.argument = draw.real(-2, 2);
    const SeriesValue v = sum_terminating(s);
    const double want = pfq_reference(s, k_end);
    INFO("trial " << i);
    // Relative to the term magnitudes where the sum cancels.
    CHECK(std::fabs(v.value - want) <= 1e-11 * std::max(std::fabs(want), 1e-3 * v.magnitude));
    CHECK(std::fabs(v.value - want) <= v.error_estimate() + 1e-300);
  }
}

TEST_CASE("series reversal") {
  const auto t = lemma1_reverse({{-1, 2}, {3}, 2.0});
  CHECK(rel(t.prefactor, -4.0 / 3) < 1e-15);
  check_same_parameters(t.series.upper, {-1, -3});
  check_same_parameters(t.series.lower, {-2});
  CHECK(t.series.argument == 0.5);
  CHECK(rel(pfq_terminating(t.series), 0.25) < 1e-15);

  const auto zero = lemma1_reverse({{0, 4.5}, {1.5}, 3.0});
  CHECK(zero.prefactor == 1.0);
  CHECK(pfq_terminating(zero.series) == 1.0);

  const HypSeriesSpec s{{-2, 1.5, 2.5}, {2, 4}, 1.3};
  const auto r = lemma1_reverse(s);
  CHECK(rel(r.prefactor * pfq_terminating(r.series), pfq_terminating(s)) < 1e-13);

  CHECK_THROWS_AS(lemma1_reverse({{-2, 1}, {3}, 0.0}), TransformInapplicableError);
  CHECK_THROWS_AS(lemma1_reverse({{-3, 1}, {-1.0}, 1.0}), TransformInapplicableError);
}

TEST_CASE("series reversal is an involution") {
  Draw draw(13);
  for (int i = 0; i < 200; ++i) {
    const int n = draw.integer(0, 8);
    HypSeriesSpec s;
    s.upper = {-static_cast<double>(n), draw.non_integer(-8, 8), draw.non_integer(-8, 8)};
    s.lower = {draw.non_integer(-8, 8), draw.non_integer(-8, 8)};
    s.argument = draw.real(0.3, 2.0) * (draw.integer(0, 1) ? 1 : -1);
    const auto once = lemma1_reverse(s);
    const auto twice = lemma1_reverse(once.series);
    check_same_parameters(twice.series.upper, s.upper);
    check_same_parameters(twice.series.lower, s.lower);
    CHECK(twice.series.argument == doctest::Approx(s.argument).epsilon(1e-15));
    CHECK(std::fabs(once.prefactor * twice.prefactor - 1) < 1e-13);
  }
}

TEST_CASE("negative lower parameter shift") {
  // (1/Gamma(0)) 2F1(1, 1; 0; x) at x = 0.5: prefactor 0.5, 2F1(2, 2; 2; 0.5) = 4.
  const auto t = lemma2_shift({{1, 1}, {0}, 0.5});
  CHECK(rel(t.prefactor, 0.5) < 1e-15);
  check_same_parameters(t.series.upper, {2, 2});
  check_same_parameters(t.series.lower, {2});
  double shifted = 0.0, term = 1.0;
  for (int k = 0; k < 200; ++k) {
    shifted += term;
    term *= (2.0 + k) * (2.0 + k) / ((2.0 + k) * (k + 1)) * 0.5;
  }
  CHECK(rel(t.prefactor * shifted, 2.0) < 1e-14);

  CHECK(lemma2_shift({{-3, 1.5}, {0}, 0.0}).prefactor == 0.0);

  // Terminating instance, regularised side summed directly.
  const HypSeriesSpec s{{-5, 0.7}, {-2, 1.3}, 0.9};
  double lhs = 0.0;
  for (int k = 3; k <= 5; ++k) {
    lhs += pochhammer(-5.0, k) * pochhammer(0.7, k) / pochhammer(1.3, k) * std::pow(0.9, k) /
           std::tgamma(k + 1.0) / std::tgamma(k - 2.0);
  }
  const auto r = lemma2_shift(s);
  CHECK(rel(r.prefactor * pfq_terminating(r.series), lhs) < 1e-13);

  CHECK_THROWS_AS(lemma2_shift({{-3, 1}, {2.5}, 1.0}), TransformInapplicableError);
  CHECK_THROWS_AS(lemma2_shift({{-3, 1}, {-1, -2.0}, 1.0}), TransformInapplicableError);
}

TEST_CASE("Saalschutz predicate") {
  CHECK(is_saalschutzian({{-2, 1.5, 0.5}, {0.5, 0.5}, 1.0}));
  CHECK_FALSE(is_saalschutzian({{-2, 1.5, 0.5}, {0.5, 0.6}, 1.0}));
}

TEST_CASE("Appell F2") {
  CHECK(appell_f2_terminating({-4, 1.3, 0.2, 2.1, 3.4, 0.0, 0.0}) == 1.0);
  CHECK(rel(appell_f2_terminating({-1, 2, 1, 3, 4, 0.3, 0.2}), 0.75) < 1e-15);
  CHECK_THROWS_AS(appell_f2_terminating({-1.5, 2, 1, 3, 4, 0.3, 0.2}), NotTerminatingError);

  // The full double sum in 113 bits.
  Draw draw(14);
  for (int i = 0; i < 200; ++i) {
    AppellF2Spec f{-static_cast<double>(draw.integer(0, 6)), draw.non_integer(-8, 8),
                   draw.non_integer(-8, 8), draw.non_integer(-8, 8), draw.non_integer(-8, 8),
                   draw.real(-2, 2), draw.real(-2, 2)};
    const int m = -static_cast<int>(f.a);
    quad want = 0, magnitude = 0;
    for (int j = 0; j <= m; ++j) {
      for (int k = 0; j + k <= m; ++k) {
        quad t = 1;
        for (int i2 = 0; i2 < j + k; ++i2) t *= quad(f.a) + i2;
        for (int i2 = 0; i2 < j; ++i2) t *= (quad(f.b1) + i2) / ((quad(f.c1) + i2) * (i2 + 1)) * quad(f.x);
        for (int i2 = 0; i2 < k; ++i2) t *= (quad(f.b2) + i2) / ((quad(f.c2) + i2) * (i2 + 1)) * quad(f.y);
        want += t;
        magnitude += abs(t);
      }
    }
    const double got = appell_f2_terminating(f);
    CHECK(std::fabs(got - static_cast<double>(want)) <=
          1e-12 * std::max(static_cast<double>(abs(want)), 1e-3 * static_cast<double>(magnitude)));
  }
}

TEST_CASE("symmetric F2 reductions") {
  const AppellF2Spec f{-2, 1.5, 0.5, 3.0, 1.0, -0.4, 0.4};
  const auto four = f2_symmetric_to_4f3(f);
  CHECK(rel(pfq_terminating(four), appell_f2_terminating(f)) < 1e-13);
  CHECK(rel(appell_f2_symmetric_sum(f), appell_f2_terminating(f)) < 1e-13);
  CHECK(pfq_terminating(f2_symmetric_to_4f3({-3, 1.5, 0.5, 3.0, 1.0, 0.0, 0.0})) == 1.0);
  CHECK_THROWS_AS(f2_symmetric_to_4f3({-2, 1.5, 0.5, 3.1, 1.0, -0.4, 0.4}), TransformInapplicableError);
  CHECK_THROWS_AS(f2_symmetric_to_4f3({-2, 1.5, 0.5, 3.0, 1.0, -0.4, 0.5}), TransformInapplicableError);
  CHECK_THROWS_AS(appell_f2_symmetric_sum({-2, 1.5, 0.5, 3.0, 1.0, -0.4, 0.5}), TransformInapplicableError);

  // Gegenbauer parameters: a = -m, b1 = alpha + n + 1/2, b2 = 1/2 - alpha - m - n.
  const double alpha = 0.7;
  const int m = 5, n = 3;
  const double b1 = alpha + n + 0.5, b2 = 0.5 - alpha - m - n;
  const auto g = f2_symmetric_to_4f3({-double(m), b1, b2, 2 * b1, 2 * b2, -0.6, 0.6});
  check_same_parameters(g.upper, {-m / 2.0, (1 - m) / 2.0, (1 - m) / 2.0, (2 - m) / 2.0});
  check_same_parameters(g.lower, {1.0 - m, 1 - m - n - alpha, n + alpha + 1});
  CHECK(g.argument == doctest::Approx(0.36));
}

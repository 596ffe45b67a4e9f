#include <cmath>

#include "orthocorr/family.hpp"
#include "support.hpp"

using namespace orthocorr;
using test::rel;

TEST_CASE("recurrence coefficients") {
  auto h = recurrence_coeffs(Family::hermite(), 3);
  CHECK(h.a == 2.0);
  CHECK(h.b == 0.0);
  CHECK(h.c == 6.0);

  auto p = recurrence_coeffs(Family::legendre(), 0);
  CHECK(p.a == 1.0);
  CHECK(p.b == 0.0);
  CHECK(p.c == 0.0);

  auto l = recurrence_coeffs(Family::laguerre(0.0), 1);
  CHECK(l.a == doctest::Approx(-0.5));
  CHECK(l.b == doctest::Approx(1.5));
  CHECK(l.c == doctest::Approx(0.5));

  CHECK(recurrence_coeffs(Family::chebyshev_t(), 0).a == 1.0);
  CHECK(recurrence_coeffs(Family::chebyshev_u(), 0).a == 2.0);
  CHECK_THROWS_AS(recurrence_coeffs(Family::legendre(), -1), ParameterDomainError);
}

TEST_CASE("polynomial values against explicit formulas") {
  CHECK(eval_poly(Family::hermite(), 1, 3.0) == 6.0);
  CHECK(eval_poly(Family::legendre(), 2, 0.5) == doctest::Approx(-0.125));
  CHECK(eval_poly(Family::jacobi(1.0, 0.0), 1, 0.25) == doctest::Approx(0.875));

  for (double x : {-0.9, -0.3, 0.2, 0.7}) {
    CHECK(eval_poly(Family::chebyshev_t(), 5, x) == doctest::Approx(std::cos(5 * std::acos(x))));
    const double th = std::acos(x);
    CHECK(eval_poly(Family::chebyshev_u(), 4, x) == doctest::Approx(std::sin(5 * th) / std::sin(th)));
    CHECK(eval_poly(Family::legendre(), 3, x) == doctest::Approx((5 * x * x * x - 3 * x) / 2));
    // C_2^{(a)}(x) = 2a(a+1)x^2 - a
    const double a = 0.75;
    CHECK(eval_poly(Family::gegenbauer(a), 2, x) == doctest::Approx(2 * a * (a + 1) * x * x - a));
  }
  for (double x : {0.0, 0.5, 3.0}) {
    CHECK(eval_poly(Family::laguerre(0.0), 2, x) == doctest::Approx((x * x - 4 * x + 2) / 2));
    CHECK(eval_poly(Family::hermite(), 3, x) == doctest::Approx(8 * x * x * x - 12 * x));
  }
  // P_2^{(a,b)} against the explicit sum.
  const double a = 0.3, b = 1.2, x = 0.4;
  double want = 0.0;
  for (int s = 0; s <= 2; ++s) {
    auto binom = [](double top, int k) {
      return std::tgamma(top + 1) / (std::tgamma(k + 1.0) * std::tgamma(top - k + 1));
    };
    want += binom(2 + a, 2 - s) * binom(2 + b, s) * std::pow((x - 1) / 2, s) *
            std::pow((x + 1) / 2, 2 - s);
  }
  CHECK(rel(eval_poly(Family::jacobi(a, b), 2, x), want) < 1e-14);
}

TEST_CASE("weights, supports and norms") {
  CHECK(weight(Family::chebyshev_t(), 0.0) == 1.0);
  CHECK(weight(Family::hermite(), 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(weight(Family::jacobi(1.0, 2.0), 0.5) == doctest::Approx(1.125));
  CHECK_THROWS_AS(weight(Family::legendre(), 1.5), DomainError);
  CHECK_THROWS_AS(weight(Family::laguerre(0.5), -0.1), DomainError);

  CHECK(norm_h(Family::legendre(), 3) == doctest::Approx(2.0 / 7));
  CHECK(norm_h(Family::chebyshev_t(), 0) == doctest::Approx(test::kPi));
  CHECK(norm_h(Family::chebyshev_t(), 3) == doctest::Approx(test::kPi / 2));
  CHECK(norm_h(Family::chebyshev_u(), 3) == doctest::Approx(test::kPi / 2));
  CHECK(norm_h(Family::laguerre(2.0), 2) == doctest::Approx(12.0));
  CHECK(norm_h(Family::hermite(), 3) == doctest::Approx(48 * test::kSqrtPi));

  CHECK(support(Family::legendre()) == std::pair{-1.0, 1.0});
  CHECK(support(Family::laguerre(0.0)).first == 0.0);
  CHECK(std::isinf(support(Family::laguerre(0.0)).second));
  CHECK(std::isinf(support(Family::hermite()).first));
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(Family::jacobi(-1.0, 0.0), ParameterDomainError);
  CHECK_THROWS_AS(Family::jacobi(0.0, -1.5), ParameterDomainError);
  CHECK_THROWS_AS(Family::laguerre(-1.0), ParameterDomainError);
  CHECK_THROWS_AS(Family::gegenbauer(-0.5), ParameterDomainError);
  CHECK_THROWS_AS(Family::gegenbauer(0.0), ParameterDomainError);
  CHECK_THROWS_AS(Family::make(FamilyKind::jacobi, 0.5, std::nullopt), ParameterDomainError);
  CHECK(Family::make(FamilyKind::laguerre, 0.5, std::nullopt) == Family::laguerre(0.5));
  CHECK(parse_family_kind("chebyshev-t") == FamilyKind::chebyshev_t);
  CHECK_FALSE(parse_family_kind("chebyshev"));
}

#include <cmath>

#include "orthocorr/quadrature.hpp"
#include "support.hpp"

using namespace orthocorr;
using test::kPi;
using test::kSqrtPi;
using test::rel;

TEST_CASE("total mass") {
  CHECK(rel(moment_zero(Family::hermite()), kSqrtPi) < 1e-15);
  CHECK(rel(moment_zero(Family::laguerre(1.5)), std::tgamma(2.5)) < 1e-15);
  CHECK(rel(moment_zero(Family::legendre()), 2.0) < 1e-15);
  CHECK(rel(moment_zero(Family::chebyshev_t()), kPi) < 1e-15);
  CHECK(rel(moment_zero(Family::chebyshev_u()), kPi / 2) < 1e-15);
}

TEST_CASE("symmetrised recurrence matrix") {
  const auto h = jacobi_matrix(Family::hermite(), 2);
  CHECK(h.diag == std::vector<double>{0.0, 0.0});
  REQUIRE(h.offdiag.size() == 1);
  CHECK(rel(h.offdiag[0], std::sqrt(0.5)) < 1e-15);
  const auto p = jacobi_matrix(Family::legendre(), 2);
  CHECK(rel(p.offdiag[0], std::sqrt(1.0 / 3)) < 1e-15);
  const auto l = jacobi_matrix(Family::laguerre(0.0), 1);
  CHECK(l.diag == std::vector<double>{1.0});
  CHECK(l.offdiag.empty());
}

TEST_CASE("tridiagonal eigensolver") {
  const auto one = tridiag_eigen<double>({0.0}, {});
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == 0.0);
  CHECK(one[0].first_component_sq == 1.0);

  const auto two = tridiag_eigen<double>({0.0, 0.0}, {1.0});
  REQUIRE(two.size() == 2);
  CHECK(two[0].value == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(two[1].value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two[0].first_component_sq == doctest::Approx(0.5).epsilon(1e-15));

  // Clustered spectrum: the components still sum to one.
  std::vector<double> d(30, 1.0), e(29, 1e-8);
  double total = 0.0;
  for (const auto& pair : tridiag_eigen(d, e)) total += pair.first_component_sq;
  CHECK(std::fabs(total - 1.0) < 1e-13);

  CHECK_THROWS_AS(tridiag_eigen<double>({0.0, 1.0}, {}), Error);
}

TEST_CASE("classical rules") {
  const auto h = gauss_rule(Family::hermite(), 1);
  CHECK(h.nodes == std::vector<double>{0.0});
  CHECK(rel(h.weights[0], kSqrtPi) < 1e-15);

  const auto p = gauss_rule(Family::legendre(), 2);
  CHECK(rel(p.nodes[0], -1 / std::sqrt(3.0)) < 1e-15);
  CHECK(rel(p.nodes[1], 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(rel(p.weights[0], 1.0) < 1e-15);
  CHECK(rel(p.weights[1], 1.0) < 1e-15);

  const auto l = gauss_rule(Family::laguerre(0.0), 2);
  CHECK(rel(l.nodes[0], 2 - std::sqrt(2.0)) < 1e-15);
  CHECK(rel(l.nodes[1], 2 + std::sqrt(2.0)) < 1e-15);
  CHECK(rel(l.weights[0], (2 + std::sqrt(2.0)) / 4) < 1e-15);
  CHECK(rel(l.weights[1], (2 - std::sqrt(2.0)) / 4) < 1e-15);

  // Gauss-Chebyshev nodes are known in closed form.
  const int n = 17;
  const auto t = gauss_rule(Family::chebyshev_t(), n);
  for (int k = 0; k < n; ++k) {
    CHECK(std::fabs(t.nodes[k] + std::cos((2 * k + 1) * kPi / (2 * n))) < 1e-15);
    CHECK(rel(t.weights[k], kPi / n) < 1e-14);
  }
  CHECK_THROWS_AS(gauss_rule(Family::legendre(), 0), Error);
}

TEST_CASE("oracle values") {
  for (double y : {-1.5, 0.2, 2.0}) {
    CHECK(rel(corr_oracle(Family::hermite(), 2, 1, y), 24 * kSqrtPi * y * y) < 1e-14);
  }
  for (const Family& f : {Family::legendre(), Family::laguerre(0.4), Family::jacobi(0.3, -0.2),
                          Family::hermite(), Family::gegenbauer(2.5)}) {
    CHECK(rel(corr_oracle(f, 0, 0, 0.37), moment_zero(f)) < 1e-15);
  }
  CHECK(rel(corr_oracle(Family::chebyshev_t(), 8, 4, 1.0), 180672 * kPi) < 1e-15);
  CHECK(oracle_nodes(0, 0) == 3);
  CHECK(oracle_nodes(3, 2) == 6);
  CHECK(oracle_nodes(2, 2) == 6);
  CHECK(oracle_nodes(1, 2) == 5);
}

TEST_CASE("oracle block equals single evaluations") {
  const Family f = Family::jacobi(1.0, -0.4);
  const auto block = corr_oracle_block(f, 6, 5, -0.8);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 5; ++n) {
      CHECK(rel(block[m][n], corr_oracle(f, m, n, -0.8)) < 1e-15);
    }
  }
}

TEST_CASE("oracle coefficients") {
  const auto h = oracle_coefficients(Family::hermite(), 3, 2);
  CHECK(rel(h.coeffs[3], 640 * kSqrtPi) < 1e-12);
  for (int j = 0; j < 3; ++j) CHECK(std::fabs(h.coeffs[j]) < 1e-12 * h.coeffs[3]);

  const auto l = oracle_coefficients(Family::laguerre(0.0), 2, 0);
  CHECK(std::fabs(l.coeffs[0]) < 1e-14);
  CHECK(rel(l.coeffs[1], -1.0) < 1e-12);
  CHECK(rel(l.coeffs[2], 0.5) < 1e-12);

  const auto p = oracle_coefficients(Family::legendre(), 8, 4);
  const double want[] = {0, 0, 68, 0, 8075 / 2.0, 0, 88179 / 4.0, 0, 1062347 / 64.0};
  for (int j = 0; j <= 8; ++j) {
    if (want[j] == 0) {
      CHECK(std::fabs(p.coeffs[j]) < 1e-12 * want[8]);
    } else {
      CHECK(rel(p.coeffs[j], want[j]) < 1e-9);
    }
  }
}

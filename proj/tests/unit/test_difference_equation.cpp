#include <cmath>
#include <algorithm>
#include <cstring>
#include <map>

#include "orthocorr/correlation.hpp"
#include "orthocorr/difference_equation.hpp"
#include "orthocorr/quadrature.hpp"
#include "support.hpp"

using namespace orthocorr;
using test::rel;

namespace {

CorrLookup closed_lookup(const Family& f, double y) {
  return [f, y](int m, int n) -> std::optional<double> { return corr({f, m, n, y}).value; };
}

CorrLookup oracle_lookup(const Family& f, double y) {
  return [f, y](int m, int n) -> std::optional<double> { return corr_oracle(f, m, n, y); };
}

CorrTable seeds_from(const Family& f, double y, int m_max, int n_max, const CorrLookup& source) {
  CorrTable seeds{f, y, {}};
  for (auto [m, n] : required_seeds(m_max, n_max)) seeds.set_seed(m, n, *source(m, n));
  return seeds;
}

}  // namespace

TEST_CASE("closed forms satisfy the difference equation") {
  for (int m = 1; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      for (double y : {-2.2, 0.35, 1.8}) {
        CHECK(std::fabs(recurrence_residual(Family::hermite(), m, n, y, closed_lookup(Family::hermite(), y)).normalized) < 1e-11);
        const Family l = Family::laguerre(0.8);
        CHECK(std::fabs(recurrence_residual(l, m, n, y, closed_lookup(l, y)).normalized) < 1e-11);
      }
    }
  }
  const Family p = Family::legendre();
  CHECK(std::fabs(recurrence_residual(p, 3, 2, 0.7, oracle_lookup(p, 0.7)).normalized) < 1e-9);
}

TEST_CASE("a wrong value leaves a residual") {
  const Family p = Family::legendre();
  const double y = 0.7;
  auto base = closed_lookup(p, y);
  CorrLookup perturbed = [&](int m, int n) -> std::optional<double> {
    const double v = *base(m, n);
    return (m == 4 && n == 3) ? v * (1 + 1e-6) : v;
  };
  CHECK(std::fabs(recurrence_residual(p, 3, 2, y, perturbed).normalized) > 1e-8);
}

TEST_CASE("Laguerre stencil weights") {
  // (n+m+2) R_{m+1,n+1} - (n+2) R_{m-1,n+2} - ... : probe one entry at a time.
  const Family l = Family::laguerre(0.0);
  const int m = 3, n = 2;
  auto probe = [&](int pm, int pn) {
    CorrLookup one = [=](int mm, int nn) -> std::optional<double> {
      return (mm == pm && nn == pn) ? 1.0 : 0.0;
    };
    return recurrence_residual(l, m, n, 0.5, one).raw;
  };
  CHECK(rel(probe(m + 1, n + 1), 1.0) < 1e-15);
  CHECK(rel(probe(m - 1, n + 2) * (n + m + 2), -(n + 2.0)) < 1e-15);
}

TEST_CASE("missing stencil entries") {
  CorrLookup none = [](int, int) -> std::optional<double> { return std::nullopt; };
  CHECK_THROWS_AS(recurrence_residual(Family::legendre(), 2, 1, 0.3, none), IncompleteStencilError);
  CHECK_THROWS_AS(recurrence_residual(Family::legendre(), 0, 1, 0.3, none), ParameterDomainError);
  CorrTable empty{Family::legendre(), 0.3, {}};
  CHECK_THROWS_AS(propagate_table(Family::legendre(), 0.3, 4, 4, empty), IncompleteStencilError);
}

TEST_CASE("required seeds") {
  const auto s = required_seeds(3, 2);
  // rows 0 and 1 for n = 0..5, column 0 for m = 2, 3
  CHECK(s.size() == 14);
  CHECK(std::count(s.begin(), s.end(), std::pair{3, 0}) == 1);
  CHECK(std::count(s.begin(), s.end(), std::pair{2, 1}) == 0);
}

TEST_CASE("propagation from closed-form seeds") {
  const Family h = Family::hermite();
  const double y = 0.9;
  const auto table = propagate_table(h, y, 8, 6, seeds_from(h, y, 8, 6, closed_lookup(h, y)));
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 6; ++n) {
      CHECK(rel(*table.get(m, n), corr_hermite(m, n, y).value) < 1e-9);
    }
  }
  CHECK(table.values.at({5, 3}).provenance == Provenance::propagated);
  CHECK(table.values.at({1, 3}).provenance == Provenance::seed);
}

TEST_CASE("propagation from oracle seeds") {
  const Family t = Family::chebyshev_t();
  const double y = 0.5;
  const auto table = propagate_table(t, y, 6, 4, seeds_from(t, y, 6, 4, oracle_lookup(t, y)));
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(rel(*table.get(m, n), corr_chebyshev_t(m, n, y).value) < 1e-7);
    }
  }
}

TEST_CASE("propagated values track the closed forms for every family") {
  for (const Family& f : {Family::legendre(), Family::chebyshev_u(), Family::gegenbauer(1.7),
                          Family::jacobi(0.3, -0.4), Family::laguerre(2.5), Family::hermite()}) {
    for (double y : {-1.7, -0.3, 0.3, 1.7}) {
      const auto table = propagate_table(f, y, 10, 10, seeds_from(f, y, 10, 10, oracle_lookup(f, y)));
      for (const auto& [key, entry] : table.values) {
        const auto [m, n] = key;
        if (n > 10) continue;
        const auto closed = corr({f, m, n, y});
        CAPTURE(f.describe());
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(y);
        const double tolerance = 1e-7 * std::fabs(closed.value) + entry.est_error + closed.est_error;
        CHECK(std::fabs(entry.value - closed.value) <= tolerance);
      }
    }
  }
}

TEST_CASE("a single row needs no propagation") {
  const Family p = Family::legendre();
  const auto seeds = seeds_from(p, 0.4, 1, 3, oracle_lookup(p, 0.4));
  const auto table = propagate_table(p, 0.4, 1, 3, seeds);
  REQUIRE(table.values.size() == seeds.values.size());
  for (const auto& [key, entry] : seeds.values) {
    CHECK(table.values.at(key).value == entry.value);
    CHECK(table.values.at(key).provenance == Provenance::seed);
  }
}

TEST_CASE("propagation is deterministic") {
  const Family f = Family::jacobi(1.0, 2.5);
  const auto seeds = seeds_from(f, -1.1, 7, 7, oracle_lookup(f, -1.1));
  const auto a = propagate_table(f, -1.1, 7, 7, seeds);
  const auto b = propagate_table(f, -1.1, 7, 7, seeds);
  REQUIRE(a.values.size() == b.values.size());
  for (const auto& [key, entry] : a.values) {
    CHECK(std::memcmp(&entry.value, &b.values.at(key).value, sizeof(double)) == 0);
  }
}

#pragma once

// Classical orthogonal polynomial families: parameters, three-term
// recurrences p_{n+1} = (B_n + A_n x) p_n - C_n p_{n-1}, weights, supports and
// norm constants h_n = \int p_n^2 w.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "orthocorr/errors.hpp"

namespace orthocorr {

enum class FamilyKind {
  legendre,
  chebyshev_t,
  chebyshev_u,
  gegenbauer,
  jacobi,
  laguerre,
  hermite,
};

/// CLI spelling of a family ("legendre", "chebyshev-t", ...).
std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// One of the seven classical families together with its real parameters.
///
/// Instances can only be obtained through the named constructors, which
/// enforce weight integrability: Jacobi alpha, beta > -1; Laguerre alpha > -1;
/// Gegenbauer alpha > -1/2 with alpha != 0 (the alpha = 0 normalisation of
/// Chebyshev type is not supported).
class Family {
 public:
  static Family legendre();
  static Family chebyshev_t();
  static Family chebyshev_u();
  static Family gegenbauer(double alpha);
  static Family jacobi(double alpha, double beta);
  static Family laguerre(double alpha);
  static Family hermite();

  /// Builds a family from a kind and optional parameters, failing with
  /// ParameterDomainError when a required parameter is missing or invalid.
  static Family make(FamilyKind kind, std::optional<double> alpha,
                     std::optional<double> beta);

  FamilyKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  bool has_alpha() const;
  bool has_beta() const;

  /// Even weight on a symmetric interval, so R_{m,n}(-y) = (-1)^m R_{m,n}(y).
  bool symmetric_weight() const;

  std::string describe() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(FamilyKind kind, double alpha, double beta)
      : kind_(kind), alpha_(alpha), beta_(beta) {}

  FamilyKind kind_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

template <typename Real>
struct BasicRecurrenceCoeffs {
  Real a;
  Real b;
  Real c;
};

using RecurrenceCoeffs = BasicRecurrenceCoeffs<double>;

/// Highest degree for which double-precision values are meaningful.
inline constexpr int kMaxDegree = 64;

/// Recurrence coefficients (A_n, B_n, C_n).
///
/// C_0 is returned as 0 for every family since it multiplies p_{-1} = 0.
/// A_0 and B_0 are chosen so that one recurrence step from p_0 = 1 yields the
/// tabulated p_1; for Chebyshev T this means A_0 = 1 (p_1 = x), for Jacobi the
/// cancelled forms A_0 = (alpha+beta+2)/2, B_0 = (alpha-beta)/2.
template <typename Real = double>
BasicRecurrenceCoeffs<Real> recurrence_coeffs(const Family& family, int n) {
  if (n < 0) throw ParameterDomainError("recurrence_coeffs: degree index must be >= 0");
  const Real k = Real(n);
  const Real one = Real(1);
  const Real alpha = Real(family.alpha());
  const Real beta = Real(family.beta());
  switch (family.kind()) {
    case FamilyKind::legendre:
      return {(2 * k + 1) / (k + 1), Real(0), k / (k + 1)};
    case FamilyKind::chebyshev_t:
      if (n == 0) return {one, Real(0), Real(0)};
      return {Real(2), Real(0), one};
    case FamilyKind::chebyshev_u:
      return {Real(2), Real(0), n == 0 ? Real(0) : one};
    case FamilyKind::gegenbauer:
      return {2 * (k + alpha) / (k + 1), Real(0),
              n == 0 ? Real(0) : (k + 2 * alpha - 1) / (k + 1)};
    case FamilyKind::jacobi: {
      const Real s = alpha + beta;
      if (n == 0) return {(s + 2) / 2, (alpha - beta) / 2, Real(0)};
      const Real denom = 2 * (k + 1) * (k + s + 1);
      return {(2 * k + s + 1) * (2 * k + s + 2) / denom,
              (2 * k + s + 1) * (alpha * alpha - beta * beta) / (denom * (2 * k + s)),
              2 * (k + alpha) * (k + beta) * (2 * k + s + 2) / (denom * (2 * k + s))};
    }
    case FamilyKind::laguerre:
      return {-one / (k + 1), (2 * k + alpha + 1) / (k + 1),
              n == 0 ? Real(0) : (k + alpha) / (k + 1)};
    case FamilyKind::hermite:
      return {Real(2), Real(0), 2 * k};
  }
  throw InternalConsistencyError("recurrence_coeffs: unknown family");
}

/// p_n(x) by forward recurrence from p_{-1} = 0, p_0 = 1.
template <typename Real = double>
Real eval_poly(const Family& family, int n, Real x) {
  if (n < 0) throw ParameterDomainError("eval_poly: degree must be >= 0");
  Real prev = Real(0);
  Real cur = Real(1);
  for (int k = 0; k < n; ++k) {
    const auto rc = recurrence_coeffs<Real>(family, k);
    Real next = (rc.b + rc.a * x) * cur - rc.c * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Weight w(x); x must lie strictly inside the support.
double weight(const Family& family, double x);

/// h_n = \int p_n^2 w.
double norm_h(const Family& family, int n);

/// Orthogonality interval (a, b); infinite ends are +-infinity.
std::pair<double, double> support(const Family& family);

}  // namespace orthocorr

#include "orthocorr/family.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "orthocorr/hypergeometric.hpp"

namespace orthocorr {

namespace {

constexpr std::pair<FamilyKind, std::string_view> kNames[] = {
    {FamilyKind::legendre, "legendre"},     {FamilyKind::chebyshev_t, "chebyshev-t"},
    {FamilyKind::chebyshev_u, "chebyshev-u"}, {FamilyKind::gegenbauer, "gegenbauer"},
    {FamilyKind::jacobi, "jacobi"},         {FamilyKind::laguerre, "laguerre"},
    {FamilyKind::hermite, "hermite"},
};

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw ParameterDomainError(std::string(what) + " must be finite");
  }
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Family Family::legendre() { return {FamilyKind::legendre, 0.0, 0.0}; }
Family Family::chebyshev_t() { return {FamilyKind::chebyshev_t, 0.0, 0.0}; }
Family Family::chebyshev_u() { return {FamilyKind::chebyshev_u, 0.0, 0.0}; }
Family Family::hermite() { return {FamilyKind::hermite, 0.0, 0.0}; }

Family Family::gegenbauer(double alpha) {
  require_finite(alpha, "gegenbauer alpha");
  if (!(alpha > -0.5) || alpha == 0.0) {
    throw ParameterDomainError("gegenbauer requires alpha > -1/2 and alpha != 0");
  }
  return {FamilyKind::gegenbauer, alpha, 0.0};
}

Family Family::jacobi(double alpha, double beta) {
  require_finite(alpha, "jacobi alpha");
  require_finite(beta, "jacobi beta");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw ParameterDomainError("jacobi requires alpha > -1 and beta > -1");
  }
  return {FamilyKind::jacobi, alpha, beta};
}

Family Family::laguerre(double alpha) {
  require_finite(alpha, "laguerre alpha");
  if (!(alpha > -1.0)) throw ParameterDomainError("laguerre requires alpha > -1");
  return {FamilyKind::laguerre, alpha, 0.0};
}

Family Family::make(FamilyKind kind, std::optional<double> alpha,
                    std::optional<double> beta) {
  auto need = [](std::optional<double> v, const char* flag) {
    if (!v) throw ParameterDomainError(std::string("missing parameter ") + flag);
    return *v;
  };
  switch (kind) {
    case FamilyKind::legendre: return legendre();
    case FamilyKind::chebyshev_t: return chebyshev_t();
    case FamilyKind::chebyshev_u: return chebyshev_u();
    case FamilyKind::hermite: return hermite();
    case FamilyKind::gegenbauer: return gegenbauer(need(alpha, "--alpha"));
    case FamilyKind::laguerre: return laguerre(need(alpha, "--alpha"));
    case FamilyKind::jacobi: return jacobi(need(alpha, "--alpha"), need(beta, "--beta"));
  }
  throw InternalConsistencyError("Family::make: unknown kind");
}

bool Family::has_alpha() const {
  return kind_ == FamilyKind::gegenbauer || kind_ == FamilyKind::jacobi ||
         kind_ == FamilyKind::laguerre;
}

bool Family::has_beta() const { return kind_ == FamilyKind::jacobi; }

bool Family::symmetric_weight() const {
  switch (kind_) {
    case FamilyKind::legendre:
    case FamilyKind::chebyshev_t:
    case FamilyKind::chebyshev_u:
    case FamilyKind::gegenbauer:
    case FamilyKind::hermite:
      return true;
    case FamilyKind::jacobi:
      return alpha_ == beta_;
    case FamilyKind::laguerre:
      return false;
  }
  return false;
}

std::string Family::describe() const {
  std::ostringstream out;
  out << to_string(kind_);
  if (has_alpha()) out << "(alpha=" << alpha_;
  if (has_beta()) out << ", beta=" << beta_;
  if (has_alpha()) out << ")";
  return out.str();
}

double weight(const Family& family, double x) {
  const auto [a, b] = support(family);
  if (!(x > a && x < b)) throw DomainError("weight: x outside the open support");
  switch (family.kind()) {
    case FamilyKind::legendre: return 1.0;
    case FamilyKind::chebyshev_t: return 1.0 / std::sqrt((1.0 - x) * (1.0 + x));
    case FamilyKind::chebyshev_u: return std::sqrt((1.0 - x) * (1.0 + x));
    case FamilyKind::gegenbauer:
      return std::pow((1.0 - x) * (1.0 + x), family.alpha() - 0.5);
    case FamilyKind::jacobi:
      return std::pow(1.0 - x, family.alpha()) * std::pow(1.0 + x, family.beta());
    case FamilyKind::laguerre: return std::exp(-x) * std::pow(x, family.alpha());
    case FamilyKind::hermite: return std::exp(-x * x);
  }
  throw InternalConsistencyError("weight: unknown family");
}

double norm_h(const Family& family, int n) {
  if (n < 0) throw ParameterDomainError("norm_h: degree must be >= 0");
  const double k = n;
  const double alpha = family.alpha();
  const double beta = family.beta();
  constexpr double pi = std::numbers::pi;
  switch (family.kind()) {
    case FamilyKind::legendre: return 2.0 / (2.0 * k + 1.0);
    case FamilyKind::chebyshev_t: return n == 0 ? pi : pi / 2.0;
    case FamilyKind::chebyshev_u: return pi / 2.0;
    case FamilyKind::gegenbauer:
      return pi * std::exp2(1.0 - 2.0 * alpha) / (k + alpha) *
             gamma_ratio({k + 2.0 * alpha}, {k + 1.0, alpha, alpha});
    case FamilyKind::jacobi: {
      const double s = alpha + beta;
      if (n == 0) {
        // (s+1) Gamma(s+1) = Gamma(s+2) removes the 0/0 at s = -1.
        return std::exp2(s + 1.0) * gamma_ratio({alpha + 1.0, beta + 1.0}, {s + 2.0});
      }
      return std::exp2(s + 1.0) / (2.0 * k + s + 1.0) *
             gamma_ratio({k + alpha + 1.0, k + beta + 1.0}, {k + 1.0, k + s + 1.0});
    }
    case FamilyKind::laguerre: return gamma_ratio({alpha + k + 1.0}, {k + 1.0});
    case FamilyKind::hermite:
      return std::sqrt(pi) * std::exp2(k) * gamma_ratio({k + 1.0}, {});
  }
  throw InternalConsistencyError("norm_h: unknown family");
}

std::pair<double, double> support(const Family& family) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (family.kind()) {
    case FamilyKind::laguerre: return {0.0, inf};
    case FamilyKind::hermite: return {-inf, inf};
    default: return {-1.0, 1.0};
  }
}

}  // namespace orthocorr

#pragma once

// Published polynomial values of R_{m,n}(y), stored as exact rationals.

#include <string>
#include <vector>

#include "orthocorr/family.hpp"

namespace orthocorr {

struct ReferenceTerm {
  int power;
  double coefficient;
};

struct ReferencePolynomial {
  std::string label;
  Family family;
  int m;
  int n;
  std::vector<ReferenceTerm> terms;  ///< nonzero coefficients only

  /// Coefficient list c_0..c_m with the omitted powers set to zero.
  std::vector<double> dense() const;
  double operator()(double y) const;
};

/// Chebyshev T/U and Legendre at (m, n) = (8, 4) and (9, 4), as published.
///
/// The published Legendre R_{9,4} leading coefficient 26558675/64 is nine
/// times the exact integral, 26558675/576. It is kept verbatim so the
/// fixture check reports the discrepancy.
std::vector<ReferencePolynomial> chebyshev_legendre_references();

/// Laguerre R_{7,4} for the given alpha.
///
/// The published display carries the opposite overall sign; the sign stored
/// here is the one the quadrature oracle confirms (negative y coefficient).
/// The magnitudes are the published ones.
ReferencePolynomial laguerre_reference(double alpha);

/// Sign of the published Laguerre display relative to laguerre_reference.
inline constexpr int kLaguerreDisplaySign = -1;

/// Gegenbauer R_{5,4} and R_{6,4} for the given alpha.
std::vector<ReferencePolynomial> gegenbauer_references(double alpha);

}  // namespace orthocorr

#pragma once

// Gauss rules for the classical weights (Golub-Welsch on the symmetrised
// recurrence) and the quadrature oracle for R_{m,n}(y).
//
// The oracle shares nothing with the closed forms except the recurrence
// coefficients. It runs in 113-bit arithmetic so that its own rounding error
// is far below every tolerance it is compared against.

#include <vector>

#include "orthocorr/correlation.hpp"
#include "orthocorr/family.hpp"
#include "orthocorr/precision.hpp"

namespace orthocorr {

template <typename Real>
struct BasicQuadratureRule {
  std::vector<Real> nodes;    ///< ascending, strictly inside the support
  std::vector<Real> weights;  ///< positive, summing to moment_zero

  int size() const { return static_cast<int>(nodes.size()); }
};

using QuadratureRule = BasicQuadratureRule<double>;

template <typename Real>
struct BasicJacobiMatrix {
  std::vector<Real> diag;
  std::vector<Real> offdiag;  ///< size N-1
};

using JacobiMatrix = BasicJacobiMatrix<double>;

template <typename Real>
struct BasicEigenPair {
  Real value;
  Real first_component_sq;  ///< squared first component of the unit eigenvector
};

using EigenPair = BasicEigenPair<double>;

/// Iteration cap per eigenvalue of the implicit QL sweep.
inline constexpr int kMaxQlIterations = 50;

/// mu_0 = \int w.
double moment_zero(const Family& family);
quad moment_zero_quad(const Family& family);

/// a_k = -B_k / A_k, b_k = sqrt(C_{k+1} / (A_k A_{k+1})).
template <typename Real = double>
BasicJacobiMatrix<Real> jacobi_matrix(const Family& family, int n_nodes);

/// Eigenvalues (ascending) and squared first eigenvector components of a
/// symmetric tridiagonal matrix, by implicit-shift QL. Throws
/// ConvergenceError when an eigenvalue needs more than kMaxQlIterations.
template <typename Real = double>
std::vector<BasicEigenPair<Real>> tridiag_eigen(std::vector<Real> diag, std::vector<Real> offdiag);

/// N-point Gauss rule. Computed in 113-bit arithmetic and rounded.
QuadratureRule gauss_rule(const Family& family, int n_nodes);

/// The 113-bit rule itself; cached, so repeated calls are cheap.
const BasicQuadratureRule<quad>& gauss_rule_quad(const Family& family, int n_nodes);

/// Number of nodes used by corr_oracle: ceil((2n+m+1)/2) + 2.
int oracle_nodes(int m, int n);

/// R_{m,n}(y) by Gauss quadrature of p_n(x) p_{n+m}(x+y).
double corr_oracle(const Family& family, int m, int n, double y);
double corr_oracle(const Family& family, int m, int n, double y, int n_nodes);
quad corr_oracle_quad(const Family& family, int m, int n, quad y, int n_nodes);

/// R_{m,n}(y) for all m <= m_max, n <= n_max at one y from a single rule
/// that is exact for the whole block; result indexed [m][n].
std::vector<std::vector<double>> corr_oracle_block(const Family& family, int m_max, int n_max,
                                                   double y);

/// Coefficients of R_{m,n} from oracle values at m+1 Chebyshev points of
/// [-1, 1] (Newton divided differences, converted to monomials).
CoeffVector oracle_coefficients(const Family& family, int m, int n);

}  // namespace orthocorr

#include "orthocorr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace orthocorr {

namespace {

template <typename Real>
Real hypot_scaled(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real x = abs(a), y = abs(b);
  const Real big = x > y ? x : y;
  if (big == 0) return Real(0);
  const Real small = x > y ? y : x;
  const Real t = small / big;
  return big * sqrt(Real(1) + t * t);
}

// Recurrence coefficients up to a degree, so polynomial values can be
// produced without recomputing (and re-dividing) them for every point.
template <typename Real>
class RecurrenceTable {
 public:
  RecurrenceTable(const Family& family, int degree) {
    for (int k = 0; k < degree; ++k) rc_.push_back(recurrence_coeffs<Real>(family, k));
  }

  // out[k] = p_k(x), k = 0..degree.
  void values(const Real& x, std::vector<Real>& out) const {
    out.resize(rc_.size() + 1);
    Real prev = Real(0);
    Real cur = Real(1);
    out[0] = cur;
    for (std::size_t k = 0; k < rc_.size(); ++k) {
      Real next = (rc_[k].b + rc_[k].a * x) * cur - rc_[k].c * prev;
      prev = cur;
      cur = next;
      out[k + 1] = cur;
    }
  }

 private:
  std::vector<BasicRecurrenceCoeffs<Real>> rc_;
};

using RuleKey = std::tuple<int, double, double, int>;

}  // namespace

quad moment_zero_quad(const Family& family) {
  using boost::math::tgamma;
  const quad pi = boost::math::constants::pi<quad>();
  const quad alpha = family.alpha();
  const quad beta = family.beta();
  switch (family.kind()) {
    case FamilyKind::legendre: return quad(2);
    case FamilyKind::chebyshev_t: return pi;
    case FamilyKind::chebyshev_u: return pi / 2;
    case FamilyKind::gegenbauer: {
      const quad g = tgamma(alpha + quad(0.5));
      return pow(quad(2), 2 * alpha) * g * g / tgamma(2 * alpha + 1);
    }
    case FamilyKind::jacobi:
      return pow(quad(2), alpha + beta + 1) * tgamma(alpha + 1) * tgamma(beta + 1) /
             tgamma(alpha + beta + 2);
    case FamilyKind::laguerre: return tgamma(alpha + 1);
    case FamilyKind::hermite: return sqrt(pi);
  }
  throw InternalConsistencyError("moment_zero: unknown family");
}

double moment_zero(const Family& family) {
  return static_cast<double>(moment_zero_quad(family));
}

template <typename Real>
BasicJacobiMatrix<Real> jacobi_matrix(const Family& family, int n_nodes) {
  if (n_nodes < 1) throw ParameterDomainError("jacobi_matrix: need at least one node");
  BasicJacobiMatrix<Real> jm;
  std::vector<BasicRecurrenceCoeffs<Real>> rc;
  for (int k = 0; k < n_nodes; ++k) rc.push_back(recurrence_coeffs<Real>(family, k));
  for (int k = 0; k < n_nodes; ++k) jm.diag.push_back(-rc[k].b / rc[k].a);
  for (int k = 0; k + 1 < n_nodes; ++k) {
    const Real radicand = recurrence_coeffs<Real>(family, k + 1).c / (rc[k].a * rc[k + 1].a);
    if (!(radicand > 0)) {
      throw InternalConsistencyError("jacobi_matrix: non-positive symmetrisation radicand");
    }
    using std::sqrt;
    jm.offdiag.push_back(sqrt(radicand));
  }
  return jm;
}

template <typename Real>
std::vector<BasicEigenPair<Real>> tridiag_eigen(std::vector<Real> d, std::vector<Real> offdiag) {
  using std::abs;
  const int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (static_cast<int>(offdiag.size()) != n - 1) {
    throw DomainError("tridiag_eigen: off-diagonal must have size N-1");
  }
  std::vector<Real> e(offdiag);
  e.push_back(Real(0));
  std::vector<Real> z(static_cast<std::size_t>(n), Real(0));
  z[0] = Real(1);
  const Real eps = std::numeric_limits<Real>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int mm;
    do {
      for (mm = l; mm < n - 1; ++mm) {
        const Real dd = abs(d[mm]) + abs(d[mm + 1]);
        if (abs(e[mm]) <= eps * dd) break;
      }
      if (mm != l) {
        if (iter++ == kMaxQlIterations) {
          throw ConvergenceError("tridiag_eigen: no convergence after " +
                                 std::to_string(kMaxQlIterations) + " iterations");
        }
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = hypot_scaled(g, Real(1));
        g = d[mm] - d[l] + e[l] / (g + (g >= 0 ? abs(r) : -abs(r)));
        Real s = 1, c = 1, p = 0;
        int i;
        for (i = mm - 1; i >= l; --i) {
          Real f = s * e[i];
          const Real b = c * e[i];
          r = hypot_scaled(f, g);
          e[i + 1] = r;
          if (r == 0) {
            d[i + 1] -= p;
            e[mm] = 0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0;
      }
    } while (mm != l);
  }

  std::vector<BasicEigenPair<Real>> out;
  out.reserve(d.size());
  for (int i = 0; i < n; ++i) out.push_back({d[i], z[i] * z[i]});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

template BasicJacobiMatrix<double> jacobi_matrix<double>(const Family&, int);
template BasicJacobiMatrix<quad> jacobi_matrix<quad>(const Family&, int);
template std::vector<BasicEigenPair<double>> tridiag_eigen<double>(std::vector<double>,
                                                                   std::vector<double>);
template std::vector<BasicEigenPair<quad>> tridiag_eigen<quad>(std::vector<quad>,
                                                               std::vector<quad>);

const BasicQuadratureRule<quad>& gauss_rule_quad(const Family& family, int n_nodes) {
  static std::mutex mutex;
  static std::map<RuleKey, std::unique_ptr<BasicQuadratureRule<quad>>> cache;
  const RuleKey key{static_cast<int>(family.kind()), family.alpha(), family.beta(), n_nodes};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  const BasicJacobiMatrix<quad> jm = jacobi_matrix<quad>(family, n_nodes);
  const auto pairs = tridiag_eigen<quad>(jm.diag, jm.offdiag);
  const quad mu0 = moment_zero_quad(family);
  auto rule = std::make_unique<BasicQuadratureRule<quad>>();
  for (const auto& p : pairs) {
    rule->nodes.push_back(p.value);
    rule->weights.push_back(mu0 * p.first_component_sq);
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return *it->second;
}

QuadratureRule gauss_rule(const Family& family, int n_nodes) {
  const auto& hp = gauss_rule_quad(family, n_nodes);
  QuadratureRule rule;
  for (const auto& x : hp.nodes) rule.nodes.push_back(static_cast<double>(x));
  for (const auto& w : hp.weights) rule.weights.push_back(static_cast<double>(w));
  return rule;
}

int oracle_nodes(int m, int n) {
  if (m < 0 || n < 0) throw ParameterDomainError("oracle: m and n must be non-negative");
  return (2 * n + m + 2) / 2 + 2;
}

quad corr_oracle_quad(const Family& family, int m, int n, quad y, int n_nodes) {
  if (m < 0 || n < 0) throw ParameterDomainError("oracle: m and n must be non-negative");
  const auto& rule = gauss_rule_quad(family, n_nodes);
  const RecurrenceTable<quad> table(family, n + m);
  std::vector<quad> px, pxy;
  quad sum = 0;
  for (int i = 0; i < rule.size(); ++i) {
    table.values(rule.nodes[i], px);
    table.values(rule.nodes[i] + y, pxy);
    sum += rule.weights[i] * px[n] * pxy[n + m];
  }
  return sum;
}

double corr_oracle(const Family& family, int m, int n, double y, int n_nodes) {
  return static_cast<double>(corr_oracle_quad(family, m, n, quad(y), n_nodes));
}

double corr_oracle(const Family& family, int m, int n, double y) {
  return corr_oracle(family, m, n, y, oracle_nodes(m, n));
}

std::vector<std::vector<double>> corr_oracle_block(const Family& family, int m_max, int n_max,
                                                   double y) {
  const int n_nodes = oracle_nodes(m_max, n_max);
  const auto& rule = gauss_rule_quad(family, n_nodes);
  const RecurrenceTable<quad> table(family, n_max + m_max);
  std::vector<std::vector<quad>> px(rule.nodes.size()), pxy(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    table.values(rule.nodes[i], px[i]);
    table.values(rule.nodes[i] + quad(y), pxy[i]);
  }
  std::vector<std::vector<double>> out(static_cast<std::size_t>(m_max) + 1,
                                       std::vector<double>(static_cast<std::size_t>(n_max) + 1));
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      quad sum = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * px[i][n] * pxy[i][n + m];
      }
      out[m][n] = static_cast<double>(sum);
    }
  }
  return out;
}

CoeffVector oracle_coefficients(const Family& family, int m, int n) {
  if (m < 0 || n < 0) throw ParameterDomainError("oracle: m and n must be non-negative");
  const quad pi = boost::math::constants::pi<quad>();
  const int n_nodes = oracle_nodes(m, n);
  std::vector<quad> ys, dd;
  for (int i = 0; i <= m; ++i) {
    ys.push_back(cos((2 * i + 1) * pi / (2 * (m + 1))));
    dd.push_back(corr_oracle_quad(family, m, n, ys.back(), n_nodes));
  }
  for (int j = 1; j <= m; ++j) {
    for (int i = m; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (ys[i] - ys[i - j]);
  }
  // Newton form to monomials, innermost factor first.
  std::vector<quad> c(static_cast<std::size_t>(m) + 1, quad(0));
  c[0] = dd[m];
  for (int k = m - 1; k >= 0; --k) {
    for (int j = m - k; j >= 1; --j) c[j] = c[j - 1] - ys[k] * c[j];
    c[0] = dd[k] - ys[k] * c[0];
  }
  CoeffVector out;
  for (const auto& v : c) out.coeffs.push_back(static_cast<double>(v));
  return out;
}

}  // namespace orthocorr

#include "orthocorr/reference_data.hpp"

#include <cmath>
#include <numbers>

#include "orthocorr/summation.hpp"

namespace orthocorr {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<ReferenceTerm> scaled(std::vector<ReferenceTerm> terms, double factor) {
  for (auto& t : terms) t.coefficient *= factor;
  return terms;
}

// prod (alpha + k) over ks.
double shifted_product(double alpha, std::initializer_list<int> ks) {
  double p = 1.0;
  for (int k : ks) p *= alpha + k;
  return p;
}

}  // namespace

std::vector<double> ReferencePolynomial::dense() const {
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  for (const auto& t : terms) c.at(static_cast<std::size_t>(t.power)) = t.coefficient;
  return c;
}

double ReferencePolynomial::operator()(double y) const {
  NeumaierSum<double> sum;
  for (const auto& t : terms) sum.add(t.coefficient * std::pow(y, t.power));
  return sum.value();
}

std::vector<ReferencePolynomial> chebyshev_legendre_references() {
  const Family t = Family::chebyshev_t();
  const Family u = Family::chebyshev_u();
  const Family p = Family::legendre();
  return {
      {"chebyshev-t R_{8,4}", t, 8, 4,
       scaled({{2, 384}, {4, 20160}, {6, 96768}, {8, 63360}}, kPi)},
      {"chebyshev-t R_{9,4}", t, 9, 4,
       scaled({{1, 13}, {3, 6240}, {5, 131040}, {7, 384384}, {9, 183040}}, kPi)},
      {"chebyshev-u R_{8,4}", u, 8, 4,
       scaled({{2, 180}, {4, 12000}, {6, 73920}, {8, 63360}}, kPi)},
      {"chebyshev-u R_{9,4}", u, 9, 4,
       scaled({{1, 5}, {3, 3000}, {5, 79200}, {7, 295680}, {9, 183040}}, kPi)},
      {"legendre R_{8,4}", p, 8, 4,
       {{2, 68.0}, {4, 8075.0 / 2}, {6, 88179.0 / 4}, {8, 1062347.0 / 64}}},
      {"legendre R_{9,4}", p, 9, 4,
       {{1, 2.0},
        {3, 3230.0 / 3},
        {5, 101745.0 / 4},
        {7, 676039.0 / 8},
        {9, 26558675.0 / 64}}},
  };
}

ReferencePolynomial laguerre_reference(double alpha) {
  const double g = std::tgamma(5.0 + alpha);
  return {"laguerre R_{7,4}",
          Family::laguerre(alpha),
          7,
          4,
          scaled({{1, -1.0 / 24},
                  {2, 1.0 / 8},
                  {3, -5.0 / 48},
                  {4, 5.0 / 144},
                  {5, -1.0 / 192},
                  {6, 1.0 / 2880},
                  {7, -1.0 / 120960}},
                 g)};
}

std::vector<ReferencePolynomial> gegenbauer_references(double alpha) {
  const Family f = Family::gegenbauer(alpha);
  const double a = alpha;
  const double base = std::sqrt(kPi) * std::tgamma(2.5 + a) / std::tgamma(5.0 + a) * a * a *
                      (1 + a) * (1 + a);
  const double core = shifted_product(a, {2, 3, 4});
  return {
      {"gegenbauer R_{5,4}", f, 5, 4,
       scaled({{1, 4.0 / 3 * core},
               {3, 8.0 / 3 * core * shifted_product(a, {6, 7})},
               {5, 8.0 / 45 * core * shifted_product(a, {5, 6, 7, 8})}},
              base)},
      {"gegenbauer R_{6,4}", f, 6, 4,
       scaled({{2, 4.0 * core * shifted_product(a, {7})},
               {4, 16.0 / 9 * core * shifted_product(a, {6, 7, 8})},
               {6, 8.0 / 135 * core * shifted_product(a, {5, 6, 7, 8, 9})}},
              base)},
  };
}

}  // namespace orthocorr

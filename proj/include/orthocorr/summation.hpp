#pragma once

#include <cmath>

namespace orthocorr {

/// Neumaier's improved Kahan summation.
///
/// Also tracks the sum of magnitudes of the added terms, which the series
/// evaluators use as the scale of their a-posteriori error estimates.
template <typename Real>
class NeumaierSum {
 public:
  void add(const Real& term) {
    using std::abs;
    const Real t = sum_ + term;
    if (abs(sum_) >= abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    magnitude_ += abs(term);
    ++count_;
  }

  NeumaierSum& operator+=(const Real& term) {
    add(term);
    return *this;
  }

  Real value() const { return sum_ + compensation_; }
  Real magnitude() const { return magnitude_; }
  int count() const { return count_; }

 private:
  Real sum_ = Real(0);
  Real compensation_ = Real(0);
  Real magnitude_ = Real(0);
  int count_ = 0;
};

}  // namespace orthocorr

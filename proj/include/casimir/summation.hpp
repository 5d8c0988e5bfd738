#pragma once

#include <cmath>

namespace casimir {

/// Neumaier's variant of Kahan compensated summation.
template <typename Real = double>
class CompensatedSum {
public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real init) : sum_(init) {}

  CompensatedSum& operator+=(Real x) {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(Real x) { return *this += -x; }

  Real value() const { return sum_ + comp_; }

private:
  Real sum_{0};
  Real comp_{0};
};

} // namespace casimir

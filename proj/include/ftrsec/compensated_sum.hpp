// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace ftrsec {

/// Neumaier variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum.
template <typename Real = double>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Real init) : sum_(init) {}

  constexpr CompensatedSum& operator+=(Real value) {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr CompensatedSum& operator-=(Real value) { return *this += -value; }

  constexpr Real value() const { return sum_ + compensation_; }
  constexpr explicit operator Real() const { return value(); }

 private:
  Real sum_{0};
  Real compensation_{0};
};

}  // namespace ftrsec

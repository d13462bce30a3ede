#pragma once

#include <cmath>

namespace rcthyper {

// Neumaier's variant of Kahan summation. The running compensation also
// tracks sum |x_i| so callers can bound the rounding error of the result.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init), magnitude_(std::fabs(init)) {}

  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::fabs(x);
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + comp_; }

  // Sum of absolute values of everything added so far.
  double magnitude() const { return magnitude_; }

  // Conservative bound on the accumulated rounding error of value().
  double rounding_error(long n_terms) const {
    constexpr double eps = 0x1p-53;
    return 2.0 * eps * std::fabs(value()) +
           static_cast<double>(n_terms) * eps * eps * magnitude_;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double magnitude_ = 0.0;
};

}  // namespace rcthyper

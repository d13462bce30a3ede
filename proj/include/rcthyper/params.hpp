#pragma once

#include <cmath>
#include <string>

#include "rcthyper/errors.hpp"

namespace rcthyper {

/// Parameter pair (a, b) of the zero-balanced function F(a,b;a+b;x).
/// Construction rejects non-positive and non-finite values.
class Params {
 public:
  Params(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0)) {
      throw DomainError("Params: a and b must be finite and positive (got a=" +
                        std::to_string(a) + ", b=" + std::to_string(b) + ")");
    }
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  double a_;
  double b_;
};

}  // namespace rcthyper

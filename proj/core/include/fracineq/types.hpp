#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "fracineq/errors.hpp"

namespace fracineq {

using RealFn = std::function<double(double)>;

/// Closed interval [a, b] with a < b, both finite.
class Interval {
 public:
  Interval(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
      throw DomainError("interval requires finite a < b, got [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    }
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

/// Order of a Riemann-Liouville integral, strictly positive.
class FracOrder {
 public:
  explicit FracOrder(double alpha) : value_(alpha) {
    if (!std::isfinite(alpha) || !(alpha > 0.0)) {
      throw DomainError("fractional order must be finite and > 0, got " + std::to_string(alpha));
    }
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Exponent s of s-convexity in the second sense, 0 < s <= 1.
class SExponent {
 public:
  explicit SExponent(double s) : value_(s) {
    if (!std::isfinite(s) || !(s > 0.0) || s > 1.0) {
      throw DomainError("s must lie in (0, 1], got " + std::to_string(s));
    }
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

}  // namespace fracineq

#include "fracineq/fracint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracineq/quadrature.hpp"
#include "fracineq/specfun.hpp"

namespace fracineq {
namespace {

// The integral is divided by Gamma(alpha) afterwards, so the quadrature may
// run looser by that factor.
double quad_tol_for(double abs_tol, double gamma_alpha) {
  return std::clamp(abs_tol * gamma_alpha, kMinQuadTol, kMaxQuadTol);
}

}  // namespace

double left_rl(const RealFn& f, FracOrder alpha, double a, double x, double abs_tol) {
  if (!std::isfinite(a) || !std::isfinite(x) || !(x > a)) {
    throw DomainError("left_rl requires x > a, got a = " + std::to_string(a) +
                      ", x = " + std::to_string(x));
  }
  const double order = alpha.value();
  const double g = gamma(order);
  const Interval iv(a, x);
  const double tol = quad_tol_for(abs_tol, g);

  if (order < 1.0) {
    const auto kernel = Integrand::power_weighted(f, Endpoint::right, order - 1.0);
    return integrate(kernel, iv, tol).value / g;
  }
  const auto kernel = Integrand::smooth(
      [&f, x, order](double t) { return std::pow(x - t, order - 1.0) * f(t); });
  return integrate(kernel, iv, tol).value / g;
}

double right_rl(const RealFn& f, FracOrder alpha, double b, double x, double abs_tol) {
  if (!std::isfinite(b) || !std::isfinite(x) || !(x < b)) {
    throw DomainError("right_rl requires x < b, got b = " + std::to_string(b) +
                      ", x = " + std::to_string(x));
  }
  const double order = alpha.value();
  const double g = gamma(order);
  const Interval iv(x, b);
  const double tol = quad_tol_for(abs_tol, g);

  if (order < 1.0) {
    const auto kernel = Integrand::power_weighted(f, Endpoint::left, order - 1.0);
    return integrate(kernel, iv, tol).value / g;
  }
  const auto kernel = Integrand::smooth(
      [&f, x, order](double t) { return std::pow(t - x, order - 1.0) * f(t); });
  return integrate(kernel, iv, tol).value / g;
}

double left_rl(const TestFunction& f, FracOrder alpha, double a, double x, double abs_tol) {
  return left_rl(f.eval, alpha, a, x, abs_tol);
}

double right_rl(const TestFunction& f, FracOrder alpha, double b, double x, double abs_tol) {
  return right_rl(f.eval, alpha, b, x, abs_tol);
}

}  // namespace fracineq

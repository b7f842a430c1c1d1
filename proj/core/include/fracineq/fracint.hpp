#pragma once

#include "fracineq/funclib.hpp"
#include "fracineq/types.hpp"

namespace fracineq {

inline constexpr double kDefaultFracTol = 1e-10;

/// Left Riemann-Liouville integral
///   J_{a+}^alpha f(x) = 1/Gamma(alpha) * int_a^x (x - t)^(alpha - 1) f(t) dt,  x > a.
/// For alpha < 1 the kernel is handed to the quadrature engine as a
/// right-endpoint power weight; for alpha >= 1 the integrand is smooth enough
/// for plain adaptive panels.
double left_rl(const RealFn& f, FracOrder alpha, double a, double x,
               double abs_tol = kDefaultFracTol);
double left_rl(const TestFunction& f, FracOrder alpha, double a, double x,
               double abs_tol = kDefaultFracTol);

/// Right Riemann-Liouville integral
///   J_{b-}^alpha f(x) = 1/Gamma(alpha) * int_x^b (t - x)^(alpha - 1) f(t) dt,  x < b.
double right_rl(const RealFn& f, FracOrder alpha, double b, double x,
                double abs_tol = kDefaultFracTol);
double right_rl(const TestFunction& f, FracOrder alpha, double b, double x,
                double abs_tol = kDefaultFracTol);

}  // namespace fracineq

#pragma once

#include <cstddef>
#include <optional>

#include "fracineq/types.hpp"

namespace fracineq {

enum class Endpoint { left, right };

/// Algebraic endpoint singularity: the integrand behaves like
/// |t - endpoint|^exponent near the tagged endpoint, exponent in (-1, 0).
struct EndpointSingularity {
  Endpoint side;
  double exponent;
};

/// A real integrand plus an optional endpoint-singularity tag.
///
/// Three forms:
///  - smooth(f):            integrand f(t), no tag.
///  - singular(f, side, g): integrand f(t) with f ~ dist^g near `side`.
///  - power_weighted(r, side, g): integrand dist(t)^g * r(t), with r regular.
///    The engine never forms dist^g explicitly for this form, so the kernel is
///    resolved exactly right up to the endpoint.
class Integrand {
 public:
  static Integrand smooth(RealFn f);
  static Integrand singular(RealFn f, Endpoint side, double exponent);
  static Integrand power_weighted(RealFn regular, Endpoint side, double exponent);

  /// Full integrand value at t (for power-weighted integrands this multiplies
  /// the weight in, using the distance to the tagged endpoint of `iv`).
  double operator()(double t, const Interval& iv) const;

  const std::optional<EndpointSingularity>& singularity() const noexcept { return singularity_; }
  bool is_power_weighted() const noexcept { return weighted_; }
  const RealFn& function() const noexcept { return fn_; }

 private:
  Integrand(RealFn fn, std::optional<EndpointSingularity> sing, bool weighted);

  RealFn fn_;
  std::optional<EndpointSingularity> singularity_;
  bool weighted_ = false;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  std::size_t max_evaluations = 1'000'000;
};

inline constexpr double kMinQuadTol = 1e-14;
inline constexpr double kMaxQuadTol = 1e-2;

/// Adaptive Gauss-Legendre quadrature of `f` over `iv`.
///
/// Panels use a 20-point rule; each panel's error is estimated as the
/// difference between the whole-panel rule and the sum over its two halves,
/// and the panel with the largest estimate is bisected until the total drops
/// below abs_tol. A tagged endpoint singularity of exponent g is removed first
/// with the substitution dist = u^(1/(g+1)).
///
/// Throws DomainError if abs_tol is outside [1e-14, 1e-2], IntegrandError if
/// the integrand is non-finite at a node, and AccuracyError (carrying the best
/// estimate) if the evaluation budget runs out.
QuadResult integrate(const Integrand& f, const Interval& iv, const QuadOptions& opts);
QuadResult integrate(const Integrand& f, const Interval& iv, double abs_tol);

/// Convenience for smooth integrands.
QuadResult integrate(const RealFn& f, const Interval& iv, double abs_tol);

}  // namespace fracineq

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracineq/fracint.hpp"
#include "fracineq/funclib.hpp"
#include "fracineq/types.hpp"

namespace fracineq {

/// Parameters shared by the bound evaluators. When p is present q is its
/// Hoelder conjugate p/(p-1); the power-mean bound uses q >= 1 without p.
class BoundParams {
 public:
  BoundParams(FracOrder alpha, SExponent s) : alpha_(alpha), s_(s) {}

  static BoundParams with_holder(FracOrder alpha, SExponent s, double p);
  static BoundParams with_power_mean(FracOrder alpha, SExponent s, double q);

  FracOrder alpha() const noexcept { return alpha_; }
  SExponent s() const noexcept { return s_; }
  const std::optional<double>& p() const noexcept { return p_; }
  const std::optional<double>& q() const noexcept { return q_; }

  double require_p() const;
  double require_q() const;

 private:
  FracOrder alpha_;
  SExponent s_;
  std::optional<double> p_;
  std::optional<double> q_;
};

/// Fractional trapezoid defect
///   lhs = (f(a)+f(b))/2 - Gamma(alpha+1)/(2 (b-a)^alpha) [J_{a+} f(b) + J_{b-} f(a)].
struct DefectResult {
  double lhs = 0.0;
  double left_J = 0.0;      // J_{a+}^alpha f(b)
  double right_J = 0.0;     // J_{b-}^alpha f(a)
  double endpoint_mean = 0.0;  // (f(a) + f(b)) / 2
  double scale = 0.0;          // Gamma(alpha + 1) / (2 (b - a)^alpha)
  double quad_tol_used = 0.0;

  double abs_lhs() const noexcept { return lhs < 0 ? -lhs : lhs; }
  double reconstruct() const noexcept { return endpoint_mean - scale * (left_J + right_J); }
};

DefectResult trapezoid_defect(const TestFunction& f, const Interval& iv, FracOrder alpha,
                              double quad_tol = kDefaultFracTol);

/// Right-hand side of the trapezoid identity,
///   (b-a)^2/(2(alpha+1)) int_0^1 t(1-t^alpha)[f''(ta+(1-t)b) + f''((1-t)a+tb)] dt,
/// integrated directly from the analytic second derivative.
double trapezoid_identity_rhs(const TestFunction& f, const Interval& iv, FracOrder alpha,
                              double quad_tol = kDefaultFracTol);

// ---------------------------------------------------------------------------
// Hermite-Hadamard sandwich for s-convex f >= 0.

struct SandwichBounds {
  double lower = 0.0;               // 2^(s-1) f((a+b)/2)
  double mean = 0.0;                // 1/(b-a) int_a^b f
  double upper = 0.0;               // (f(a)+f(b)) / (s+1)
  double upper_half_reading = 0.0;  // (f(a)+f(b)) / 2
};

/// Throws PreconditionError unless f >= 0 and f is s-convex on iv (grid
/// certificate), DomainError if iv.a() < 0.
SandwichBounds hh_s_convex_sandwich(const TestFunction& f, const Interval& iv, SExponent s,
                                    double quad_tol = kDefaultFracTol);

// ---------------------------------------------------------------------------
// Closed-form bound evaluators. The double-argument overloads take
// |f''(a)|, |f''(b)| (or |f''(midpoint)|) directly and perform no
// certification. The TestFunction overloads certify the required class of
// |f''|^q on iv first and throw PreconditionError if it does not hold.

/// Bound for |f''| s-convex:
///   (b-a)^2/(2(alpha+1)) [alpha/((s+2)(alpha+s+2)) + B(2,s+1) - B(alpha+2,s+1)] (|f''(a)|+|f''(b)|)
double s_convex_curvature_bound(double width, FracOrder alpha, SExponent s, double d2a,
                                double d2b);
double s_convex_curvature_bound(const TestFunction& f, const Interval& iv, FracOrder alpha,
                                SExponent s);

/// Hoelder bound for |f''|^q s-convex:
///   (b-a)^2/(alpha+1) B(p+1, alpha p+1)^(1/p) [(|f''(a)|^q + |f''(b)|^q)/(s+1)]^(1/q)
double holder_bound(double width, const BoundParams& params, double d2a, double d2b);
double holder_bound(const TestFunction& f, const Interval& iv, const BoundParams& params);

/// Power-mean bound for |f''|^q s-convex, q >= 1.
///   alpha (b-a)^2/(4(alpha+1)(alpha+2)) [(A W1 + B W2)^(1/q) + (A W2 + B W1)^(1/q)]
/// with A = |f''(a)|^q, B = |f''(b)|^q, W1 = (2alpha+4)/((s+2)(alpha+s+2)),
/// W2 = [B(2,s+1) - B(alpha+2,s+1)] (2alpha+4)/alpha.
double power_mean_bound(double width, const BoundParams& params, double d2a, double d2b);
double power_mean_bound(const TestFunction& f, const Interval& iv, const BoundParams& params);

/// Hoelder bound for |f''|^q s-concave:
///   (b-a)^2/(alpha+1) B(p+1, alpha p+1)^(1/p) 2^((s-1)/q) |f''((a+b)/2)|
double s_concave_holder_bound(double width, const BoundParams& params, double d2_mid);
double s_concave_holder_bound(const TestFunction& f, const Interval& iv,
                              const BoundParams& params);

// Convex (s = 1) baselines these bounds generalize.

/// (b-a)^2/(alpha+1) B(2, alpha+1) (|f''(a)|+|f''(b)|)/2
double convex_curvature_baseline(double width, FracOrder alpha, double d2a, double d2b);
/// (b-a)^2/(alpha+1) B(p+1, alpha p+1)^(1/p) ((|f''(a)|^q+|f''(b)|^q)/2)^(1/q)
double holder_baseline(double width, FracOrder alpha, double p, double d2a, double d2b);
/// alpha (b-a)^2/(4(alpha+1)(alpha+2)) [ ((2a+4)/(3a+9) A + (a+5)/(3a+9) B)^(1/q) + (swapped)^(1/q) ]
double power_mean_baseline(double width, FracOrder alpha, double q, double d2a, double d2b);
/// (b-a)^2/(alpha+1) B(p+1, alpha p+1)^(1/p) |f''((a+b)/2)|
double concave_holder_baseline(double width, FracOrder alpha, double p, double d2_mid);

/// 2^(s-1) |f''(mid)|^q - int_0^1 |f''(ta + (1-t)b)|^q dt. Non-negative
/// whenever |f''|^q is s-concave.
double concavity_step_gap(const TestFunction& f, const Interval& iv, SExponent s, double q,
                          double quad_tol = kDefaultFracTol);

// ---------------------------------------------------------------------------
// Integral facts used inside the bound derivations, checked by quadrature.

struct IntegralCheck {
  std::string name;
  double quadrature = 0.0;
  double reference = 0.0;
  bool inequality = false;         // quadrature <= reference instead of equality
  bool in_validated_range = true;  // kernel comparison only holds for alpha <= 1
  bool passed = false;
};

struct ProofIntegralReport {
  double alpha = 0.0;
  double s = 0.0;
  double p = 0.0;
  std::vector<IntegralCheck> checks;
  bool all_passed() const;
};

inline constexpr double kProofIntegralTol = 1e-9;

/// Checks, each to `tol`:
///   weight_moment:    int_0^1 t^(s+1)(1-t^alpha) dt = alpha/((s+2)(alpha+s+2))
///   beta_difference:  int_0^1 t(1-t^alpha)(1-t)^s dt = B(2,s+1) - B(alpha+2,s+1)
///   power_moment:     int_0^1 t^s dt = 1/(s+1)
///   kernel_comparison: int_0^1 t^p (1-t^alpha)^p dt <= B(p+1, alpha p+1)
ProofIntegralReport proof_integral_checks(FracOrder alpha, SExponent s, double p,
                                          double tol = kProofIntegralTol);

}  // namespace fracineq

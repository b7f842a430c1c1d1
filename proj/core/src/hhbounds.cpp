#include "fracineq/hhbounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracineq/quadrature.hpp"
#include "fracineq/specfun.hpp"

namespace fracineq {
namespace {

double clamp_tol(double tol) { return std::clamp(tol, kMinQuadTol, kMaxQuadTol); }

void require_curvature(const TestFunction& f, const Interval& iv, SExponent s, double q,
                       bool concave) {
  const CertifyResult cert = certify_curvature(f, iv, s, q, concave);
  if (cert) return;
  std::string msg = "|f''|^" + std::to_string(q) + " of " + f.name + " is not s-" +
                    (concave ? "concave" : "convex") + " for s = " + std::to_string(s.value());
  if (cert.witness) {
    msg += " (witness x = " + std::to_string(cert.witness->x) +
           ", y = " + std::to_string(cert.witness->y) +
           ", lambda = " + std::to_string(cert.witness->lambda) + ")";
  }
  throw PreconditionError(msg);
}

// B(p+1, alpha p+1)^(1/p)
double holder_kernel_factor(double alpha, double p) {
  return std::exp(log_beta(p + 1.0, alpha * p + 1.0) / p);
}

double beta_difference(double alpha, double s) {
  return beta(2.0, s + 1.0) - beta(alpha + 2.0, s + 1.0);
}

}  // namespace

BoundParams BoundParams::with_holder(FracOrder alpha, SExponent s, double p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw DomainError("Hoelder exponent p must be > 1, got " + std::to_string(p));
  }
  BoundParams params(alpha, s);
  params.p_ = p;
  params.q_ = p / (p - 1.0);
  return params;
}

BoundParams BoundParams::with_power_mean(FracOrder alpha, SExponent s, double q) {
  if (!std::isfinite(q) || !(q >= 1.0)) {
    throw DomainError("power-mean exponent q must be >= 1, got " + std::to_string(q));
  }
  BoundParams params(alpha, s);
  params.q_ = q;
  return params;
}

double BoundParams::require_p() const {
  if (!p_) throw DomainError("bound requires a Hoelder exponent p");
  return *p_;
}

double BoundParams::require_q() const {
  if (!q_) throw DomainError("bound requires an exponent q");
  return *q_;
}

DefectResult trapezoid_defect(const TestFunction& f, const Interval& iv, FracOrder alpha,
                              double quad_tol) {
  const double a = iv.a();
  const double b = iv.b();
  DefectResult r;
  r.quad_tol_used = quad_tol;
  r.left_J = left_rl(f, alpha, a, b, quad_tol);
  r.right_J = right_rl(f, alpha, b, a, quad_tol);
  r.endpoint_mean = 0.5 * (f.eval(a) + f.eval(b));
  r.scale = gamma(alpha.value() + 1.0) / (2.0 * std::pow(iv.width(), alpha.value()));
  r.lhs = r.reconstruct();
  return r;
}

double trapezoid_identity_rhs(const TestFunction& f, const Interval& iv, FracOrder alpha,
                              double quad_tol) {
  const double a = iv.a();
  const double b = iv.b();
  const double al = alpha.value();
  const double prefactor = iv.width() * iv.width() / (2.0 * (al + 1.0));
  const auto weight = [&](double t) {
    return t * (1.0 - std::pow(t, al)) *
           (f.d2(t * a + (1.0 - t) * b) + f.d2((1.0 - t) * a + t * b));
  };
  const double integral = integrate(weight, Interval(0.0, 1.0), clamp_tol(quad_tol / prefactor)).value;
  return prefactor * integral;
}

SandwichBounds hh_s_convex_sandwich(const TestFunction& f, const Interval& iv, SExponent s,
                                    double quad_tol) {
  const CertifyResult cert = certify_s_convex(f.eval, iv, s);
  if (!cert) {
    throw PreconditionError(f.name + " is not s-convex on the interval for s = " +
                            std::to_string(s.value()));
  }
  for (std::size_t i = 0; i < kDefaultCertifyGrid; ++i) {
    const double t = iv.a() + iv.width() * static_cast<double>(i) /
                                  static_cast<double>(kDefaultCertifyGrid - 1);
    if (f.eval(t) < 0.0) {
      throw PreconditionError(f.name + " is negative at t = " + std::to_string(t));
    }
  }
  const double fa = f.eval(iv.a());
  const double fb = f.eval(iv.b());
  SandwichBounds out;
  out.lower = std::pow(2.0, s.value() - 1.0) * f.eval(iv.midpoint());
  out.mean = integrate(f.eval, iv, clamp_tol(quad_tol * iv.width())).value / iv.width();
  out.upper = (fa + fb) / (s.value() + 1.0);
  out.upper_half_reading = 0.5 * (fa + fb);
  return out;
}

double s_convex_curvature_bound(double width, FracOrder alpha, SExponent s, double d2a,
                                double d2b) {
  const double al = alpha.value();
  const double sv = s.value();
  const double bracket = al / ((sv + 2.0) * (al + sv + 2.0)) + beta_difference(al, sv);
  return width * width / (2.0 * (al + 1.0)) * bracket * (std::abs(d2a) + std::abs(d2b));
}

double s_convex_curvature_bound(const TestFunction& f, const Interval& iv, FracOrder alpha,
                                SExponent s) {
  require_curvature(f, iv, s, 1.0, false);
  return s_convex_curvature_bound(iv.width(), alpha, s, f.d2(iv.a()), f.d2(iv.b()));
}

double holder_bound(double width, const BoundParams& params, double d2a, double d2b) {
  const double al = params.alpha().value();
  const double p = params.require_p();
  const double q = params.require_q();
  const double curvature =
      std::pow((std::pow(std::abs(d2a), q) + std::pow(std::abs(d2b), q)) /
                   (params.s().value() + 1.0),
               1.0 / q);
  return width * width / (al + 1.0) * holder_kernel_factor(al, p) * curvature;
}

double holder_bound(const TestFunction& f, const Interval& iv, const BoundParams& params) {
  require_curvature(f, iv, params.s(), params.require_q(), false);
  return holder_bound(iv.width(), params, f.d2(iv.a()), f.d2(iv.b()));
}

double power_mean_bound(double width, const BoundParams& params, double d2a, double d2b) {
  const double al = params.alpha().value();
  const double sv = params.s().value();
  const double q = params.require_q();
  const double A = std::pow(std::abs(d2a), q);
  const double B = std::pow(std::abs(d2b), q);
  const double w1 = (2.0 * al + 4.0) / ((sv + 2.0) * (al + sv + 2.0));
  const double w2 = beta_difference(al, sv) * (2.0 * al + 4.0) / al;
  const double bracket = std::pow(A * w1 + B * w2, 1.0 / q) + std::pow(A * w2 + B * w1, 1.0 / q);
  return al * width * width / (4.0 * (al + 1.0) * (al + 2.0)) * bracket;
}

double power_mean_bound(const TestFunction& f, const Interval& iv, const BoundParams& params) {
  require_curvature(f, iv, params.s(), params.require_q(), false);
  return power_mean_bound(iv.width(), params, f.d2(iv.a()), f.d2(iv.b()));
}

double s_concave_holder_bound(double width, const BoundParams& params, double d2_mid) {
  const double al = params.alpha().value();
  const double p = params.require_p();
  const double q = params.require_q();
  return width * width / (al + 1.0) * holder_kernel_factor(al, p) *
         std::pow(2.0, (params.s().value() - 1.0) / q) * std::abs(d2_mid);
}

double s_concave_holder_bound(const TestFunction& f, const Interval& iv,
                              const BoundParams& params) {
  require_curvature(f, iv, params.s(), params.require_q(), true);
  return s_concave_holder_bound(iv.width(), params, f.d2(iv.midpoint()));
}

double convex_curvature_baseline(double width, FracOrder alpha, double d2a, double d2b) {
  const double al = alpha.value();
  return width * width / (al + 1.0) * beta(2.0, al + 1.0) * 0.5 *
         (std::abs(d2a) + std::abs(d2b));
}

double holder_baseline(double width, FracOrder alpha, double p, double d2a, double d2b) {
  const double al = alpha.value();
  const double q = p / (p - 1.0);
  return width * width / (al + 1.0) * holder_kernel_factor(al, p) *
         std::pow(0.5 * (std::pow(std::abs(d2a), q) + std::pow(std::abs(d2b), q)), 1.0 / q);
}

double power_mean_baseline(double width, FracOrder alpha, double q, double d2a, double d2b) {
  const double al = alpha.value();
  const double A = std::pow(std::abs(d2a), q);
  const double B = std::pow(std::abs(d2b), q);
  const double heavy = (2.0 * al + 4.0) / (3.0 * al + 9.0);
  const double light = (al + 5.0) / (3.0 * al + 9.0);
  return al * width * width / (4.0 * (al + 1.0) * (al + 2.0)) *
         (std::pow(heavy * A + light * B, 1.0 / q) + std::pow(light * A + heavy * B, 1.0 / q));
}

double concave_holder_baseline(double width, FracOrder alpha, double p, double d2_mid) {
  const double al = alpha.value();
  return width * width / (al + 1.0) * holder_kernel_factor(al, p) * std::abs(d2_mid);
}

double concavity_step_gap(const TestFunction& f, const Interval& iv, SExponent s, double q,
                          double quad_tol) {
  const double a = iv.a();
  const double b = iv.b();
  const auto g = [&](double t) { return std::pow(std::abs(f.d2(t * a + (1.0 - t) * b)), q); };
  const double mean = integrate(g, Interval(0.0, 1.0), clamp_tol(quad_tol)).value;
  return std::pow(2.0, s.value() - 1.0) * std::pow(std::abs(f.d2(iv.midpoint())), q) - mean;
}

bool ProofIntegralReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IntegralCheck& c) { return c.passed; });
}

ProofIntegralReport proof_integral_checks(FracOrder alpha, SExponent s, double p, double tol) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw DomainError("proof integral checks need p > 1, got " + std::to_string(p));
  }
  const double al = alpha.value();
  const double sv = s.value();
  const Interval unit(0.0, 1.0);
  const double qtol = clamp_tol(tol * 1e-3);

  ProofIntegralReport report{al, sv, p, {}};
  const auto equality = [&](std::string name, const RealFn& g, double reference) {
    IntegralCheck c{std::move(name), integrate(g, unit, qtol).value, reference, false, true, false};
    c.passed = std::abs(c.quadrature - c.reference) <= tol;
    report.checks.push_back(std::move(c));
  };

  equality("weight_moment",
           [al, sv](double t) { return std::pow(t, sv + 1.0) * (1.0 - std::pow(t, al)); },
           al / ((sv + 2.0) * (al + sv + 2.0)));
  equality("beta_difference",
           [al, sv](double t) {
             return t * (1.0 - std::pow(t, al)) * std::pow(1.0 - t, sv);
           },
           beta_difference(al, sv));
  equality("power_moment", [sv](double t) { return std::pow(t, sv); }, 1.0 / (sv + 1.0));

  IntegralCheck kernel{"kernel_comparison",
                       integrate([al, p](double t) {
                         return std::pow(t, p) * std::pow(1.0 - std::pow(t, al), p);
                       }, unit, qtol).value,
                       beta(p + 1.0, al * p + 1.0), true, al <= 1.0, false};
  kernel.passed = kernel.quadrature <= kernel.reference + tol;
  report.checks.push_back(std::move(kernel));
  return report;
}

}  // namespace fracineq

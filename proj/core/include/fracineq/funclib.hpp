#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracineq/types.hpp"

namespace fracineq {

/// Convexity class of |f''| on the function's natural domain.
enum class CurvatureClass { convex, concave, s_convex, s_concave, none };

struct DeclaredClass {
  CurvatureClass kind = CurvatureClass::none;
  double s = 1.0;  // meaningful for s_convex / s_concave only
};

std::string to_string(const DeclaredClass& c);

/// A twice differentiable test function with its analytic second derivative.
struct TestFunction {
  std::string name;
  RealFn eval;
  RealFn d2;
  DeclaredClass declared;
  Interval natural_domain{0.0, 4.0};
};

using Catalog = std::vector<TestFunction>;

// ---------------------------------------------------------------------------
// s-convexity certification

/// A grid triple (x, y, lambda) at which the certified inequality fails.
struct Witness {
  double x = 0.0;
  double y = 0.0;
  double lambda = 0.0;
  double lhs = 0.0;  // f(lambda x + (1 - lambda) y)
  double rhs = 0.0;  // lambda^s f(x) + (1 - lambda)^s f(y)
};

struct CertifyResult {
  bool passed = true;
  std::optional<Witness> witness;
  explicit operator bool() const noexcept { return passed; }
};

inline constexpr std::size_t kDefaultCertifyGrid = 33;
inline constexpr double kDefaultCertifySlack = 1e-12;

/// Checks f(lx + (1-l)y) <= l^s f(x) + (1-l)^s f(y) + slack on the full
/// grid_n^3 product of uniform grids over domain x domain x [0, 1]. The first
/// violating triple in (x, y, lambda) lexicographic order is returned.
///
/// The slack is widened by 32 eps times the magnitudes involved so that pure
/// rounding at equality cases is not reported.
///
/// Throws DomainError if domain.a() < 0 or grid_n < 3, IntegrandError if f is
/// non-finite at a grid node.
CertifyResult certify_s_convex(const RealFn& f, const Interval& domain, SExponent s,
                               std::size_t grid_n = kDefaultCertifyGrid,
                               double slack = kDefaultCertifySlack);

/// Reversed inequality of certify_s_convex.
CertifyResult certify_s_concave(const RealFn& f, const Interval& domain, SExponent s,
                                std::size_t grid_n = kDefaultCertifyGrid,
                                double slack = kDefaultCertifySlack);

/// Ordinary midpoint convexity f((x+y)/2) <= (f(x)+f(y))/2 on a grid_n^2 grid.
CertifyResult certify_midpoint_convex(const RealFn& f, const Interval& domain,
                                      std::size_t grid_n = kDefaultCertifyGrid,
                                      double slack = kDefaultCertifySlack);

/// t -> |f''(t)|^q
RealFn abs_curvature_power(const TestFunction& f, double q);

/// Certifies that |f''|^q is s-convex (or s-concave) on `domain`.
CertifyResult certify_curvature(const TestFunction& f, const Interval& domain, SExponent s,
                                double q, bool concave,
                                std::size_t grid_n = kDefaultCertifyGrid);

/// Certifies the declared class of |f''| at exponent s on `domain`. Functions
/// declared `none` never pass. Declared convex/concave functions are checked
/// in the s-sense at the requested s.
CertifyResult certify_declared(const TestFunction& f, const Interval& domain, SExponent s);

/// Largest violation of |d2(t) - central_difference(eval, t, h)| <= 1e-5 (1 + |d2(t)|)
/// over `points` interior points, as a ratio (<= 1 means consistent).
double derivative_consistency_ratio(const TestFunction& f, std::size_t points = 101,
                                    double h = 1e-4);

// ---------------------------------------------------------------------------
// Catalog

/// f(t) = t^k on [0, 4]; d2 = k (k - 1) t^(k - 2). Declared class is left as
/// `none`; callers certify what they need.
TestFunction make_power(double k);

/// f(t) = (t - a)^2 with f'' = 2; the equality case of the convex-curvature bound.
TestFunction make_shifted_square(double a);

/// f with f''(t) = t^s, i.e. f(t) = t^(s+2) / ((s+1)(s+2)); |f''| is s-convex.
TestFunction make_curvature_power(double s);

/// Built-in catalog. Every entry is certified against its declared class and
/// checked for derivative consistency at construction (std::logic_error on
/// failure). `curvature_exponents` selects the t^s-curvature family members.
Catalog builtin_catalog(std::span<const double> curvature_exponents);
Catalog builtin_catalog();

const TestFunction* find_function(const Catalog& catalog, std::string_view name);

}  // namespace fracineq

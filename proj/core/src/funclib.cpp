#include "fracineq/funclib.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fracineq {
namespace {

constexpr double kRoundingAllowance = 32.0 * std::numeric_limits<double>::epsilon();

double checked_eval(const RealFn& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    throw IntegrandError("function is not finite at t = " + std::to_string(t), t);
  }
  return v;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  grid.back() = hi;
  return grid;
}

void require_certifiable(const Interval& domain, std::size_t grid_n) {
  if (domain.a() < 0.0) {
    throw DomainError("s-convexity is defined on [0, inf); domain starts at " +
                      std::to_string(domain.a()));
  }
  if (grid_n < 3) throw DomainError("certification grid needs at least 3 points per axis");
}

CertifyResult certify(const RealFn& f, const Interval& domain, SExponent s, std::size_t grid_n,
                      double slack, bool concave) {
  require_certifiable(domain, grid_n);
  const std::vector<double> xs = uniform_grid(domain.a(), domain.b(), grid_n);
  const std::vector<double> lambdas = uniform_grid(0.0, 1.0, grid_n);

  std::vector<double> fx(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) fx[i] = checked_eval(f, xs[i]);

  std::vector<double> ws(grid_n), ws_c(grid_n);
  for (std::size_t k = 0; k < grid_n; ++k) {
    ws[k] = std::pow(lambdas[k], s.value());
    ws_c[k] = std::pow(1.0 - lambdas[k], s.value());
  }

  for (std::size_t i = 0; i < grid_n; ++i) {
    for (std::size_t j = 0; j < grid_n; ++j) {
      for (std::size_t k = 0; k < grid_n; ++k) {
        const double l = lambdas[k];
        const double z = l * xs[i] + (1.0 - l) * xs[j];
        const double lhs = checked_eval(f, z);
        const double t1 = ws[k] * fx[i];
        const double t2 = ws_c[k] * fx[j];
        const double rhs = t1 + t2;
        const double tol =
            slack + kRoundingAllowance * (std::abs(lhs) + std::abs(t1) + std::abs(t2));
        const bool ok = concave ? lhs >= rhs - tol : lhs <= rhs + tol;
        if (!ok) return CertifyResult{false, Witness{xs[i], xs[j], l, lhs, rhs}};
      }
    }
  }
  return {};
}

std::string format_exponent(double s) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%g", s);
  return buf.data();
}

void require_catalog_entry(const TestFunction& f) {
  const double ratio = derivative_consistency_ratio(f);
  if (!(ratio <= 1.0)) {
    throw std::logic_error("catalog entry " + f.name + " fails the second-derivative check");
  }
  if (f.declared.kind == CurvatureClass::none) return;
  const double s = (f.declared.kind == CurvatureClass::convex ||
                    f.declared.kind == CurvatureClass::concave)
                       ? 1.0
                       : f.declared.s;
  if (!certify_declared(f, f.natural_domain, SExponent(s))) {
    throw std::logic_error("catalog entry " + f.name + " does not certify as " +
                           to_string(f.declared));
  }
}

}  // namespace

std::string to_string(const DeclaredClass& c) {
  switch (c.kind) {
    case CurvatureClass::convex: return "convex";
    case CurvatureClass::concave: return "concave";
    case CurvatureClass::s_convex: return "s_convex_2nd(" + format_exponent(c.s) + ")";
    case CurvatureClass::s_concave: return "s_concave_2nd(" + format_exponent(c.s) + ")";
    case CurvatureClass::none: break;
  }
  return "none";
}

CertifyResult certify_s_convex(const RealFn& f, const Interval& domain, SExponent s,
                               std::size_t grid_n, double slack) {
  return certify(f, domain, s, grid_n, slack, false);
}

CertifyResult certify_s_concave(const RealFn& f, const Interval& domain, SExponent s,
                                std::size_t grid_n, double slack) {
  return certify(f, domain, s, grid_n, slack, true);
}

CertifyResult certify_midpoint_convex(const RealFn& f, const Interval& domain,
                                      std::size_t grid_n, double slack) {
  require_certifiable(domain, grid_n);
  const std::vector<double> xs = uniform_grid(domain.a(), domain.b(), grid_n);
  for (double x : xs) {
    for (double y : xs) {
      const double lhs = checked_eval(f, 0.5 * (x + y));
      const double rhs = 0.5 * (checked_eval(f, x) + checked_eval(f, y));
      if (lhs > rhs + slack + kRoundingAllowance * (std::abs(lhs) + std::abs(rhs))) {
        return CertifyResult{false, Witness{x, y, 0.5, lhs, rhs}};
      }
    }
  }
  return {};
}

RealFn abs_curvature_power(const TestFunction& f, double q) {
  return [d2 = f.d2, q](double t) { return std::pow(std::abs(d2(t)), q); };
}

CertifyResult certify_curvature(const TestFunction& f, const Interval& domain, SExponent s,
                                double q, bool concave, std::size_t grid_n) {
  return certify(abs_curvature_power(f, q), domain, s, grid_n, kDefaultCertifySlack, concave);
}

CertifyResult certify_declared(const TestFunction& f, const Interval& domain, SExponent s) {
  switch (f.declared.kind) {
    case CurvatureClass::convex:
    case CurvatureClass::s_convex:
      return certify_curvature(f, domain, s, 1.0, false);
    case CurvatureClass::concave:
    case CurvatureClass::s_concave:
      return certify_curvature(f, domain, s, 1.0, true);
    case CurvatureClass::none:
      break;
  }
  return CertifyResult{false, std::nullopt};
}

double derivative_consistency_ratio(const TestFunction& f, std::size_t points, double h) {
  const Interval& dom = f.natural_domain;
  double worst = 0.0;
  for (std::size_t i = 1; i <= points; ++i) {
    const double t = dom.a() + dom.width() * static_cast<double>(i) /
                                   static_cast<double>(points + 1);
    const double fd = (f.eval(t + h) - 2.0 * f.eval(t) + f.eval(t - h)) / (h * h);
    const double exact = f.d2(t);
    const double ratio = std::abs(exact - fd) / (1e-5 * (1.0 + std::abs(exact)));
    if (!(ratio <= worst)) worst = ratio;  // NaN propagates as a failure
  }
  return worst;
}

TestFunction make_power(double k) {
  return TestFunction{"power_" + format_exponent(k),
                      [k](double t) { return std::pow(t, k); },
                      [k](double t) { return k * (k - 1.0) * std::pow(t, k - 2.0); },
                      {CurvatureClass::none, 1.0},
                      Interval(0.0, 4.0)};
}

TestFunction make_shifted_square(double a) {
  return TestFunction{"shifted_square_" + format_exponent(a),
                      [a](double t) { return (t - a) * (t - a); },
                      [](double) { return 2.0; },
                      {CurvatureClass::convex, 1.0},
                      Interval(0.0, 4.0)};
}

TestFunction make_curvature_power(double s) {
  const SExponent checked(s);
  const double scale = 1.0 / ((s + 1.0) * (s + 2.0));
  return TestFunction{"curv_pow_" + format_exponent(s),
                      [s, scale](double t) { return scale * std::pow(t, s + 2.0); },
                      [s](double t) { return std::pow(t, s); },
                      {CurvatureClass::s_convex, checked.value()},
                      Interval(0.0, 4.0)};
}

Catalog builtin_catalog(std::span<const double> curvature_exponents) {
  const Interval dom(0.0, 4.0);
  Catalog cat;
  cat.push_back({"linear", [](double t) { return 2.0 * t + 1.0; }, [](double) { return 0.0; },
                 {CurvatureClass::convex, 1.0}, dom});
  cat.push_back({"square", [](double t) { return t * t; }, [](double) { return 2.0; },
                 {CurvatureClass::convex, 1.0}, dom});
  cat.push_back(make_shifted_square(1.0));
  cat.push_back({"cube", [](double t) { return t * t * t; }, [](double t) { return 6.0 * t; },
                 {CurvatureClass::convex, 1.0}, dom});
  cat.push_back({"quartic", [](double t) { return t * t * t * t; },
                 [](double t) { return 12.0 * t * t; }, {CurvatureClass::convex, 1.0}, dom});
  cat.push_back({"exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
                 {CurvatureClass::convex, 1.0}, dom});
  for (double s : curvature_exponents) cat.push_back(make_curvature_power(s));
  cat.push_back({"curv_sqrt", [](double t) { return 4.0 / 15.0 * std::pow(t, 2.5); },
                 [](double t) { return std::sqrt(t); }, {CurvatureClass::concave, 1.0}, dom});
  cat.push_back({"curv_log1p",
                 [](double t) {
                   const double u = 1.0 + t;
                   return 0.5 * u * u * std::log(u) - 0.25 * u * u - 0.5 * t * t;
                 },
                 [](double t) { return std::log1p(t); }, {CurvatureClass::concave, 1.0}, dom});

  for (const TestFunction& f : cat) require_catalog_entry(f);
  return cat;
}

Catalog builtin_catalog() {
  static constexpr std::array<double, 3> kExponents{0.25, 0.5, 0.75};
  return builtin_catalog(kExponents);
}

const TestFunction* find_function(const Catalog& catalog, std::string_view name) {
  for (const TestFunction& f : catalog) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace fracineq

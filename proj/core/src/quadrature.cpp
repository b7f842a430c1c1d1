#include "fracineq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace fracineq {
namespace {

constexpr std::size_t kRuleOrder = 20;

struct GaussLegendre {
  std::array<double, kRuleOrder> nodes{};
  std::array<double, kRuleOrder> weights{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre make_rule() {
  GaussLegendre rule;
  constexpr std::size_t n = kRuleOrder;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussLegendre& rule() {
  static const GaussLegendre r = make_rule();
  return r;
}

struct Panel {
  double lo;
  double hi;
  double whole;
  double left;
  double right;

  double value() const { return left + right; }
  double error() const { return std::abs(whole - (left + right)); }
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error() < y.error(); }
};

template <typename Fn>
class AdaptiveEngine {
 public:
  AdaptiveEngine(const Fn& g, const QuadOptions& opts) : g_(g), opts_(opts) {}

  QuadResult run(double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double whole = panel_sum(lo, hi);
    panels_.push_back(make_panel(lo, hi, whole, mid));

    double total_err = panels_.front().error();
    while (total_err > opts_.abs_tol) {
      std::pop_heap(panels_.begin(), panels_.end(), ByError{});
      const Panel worst = panels_.back();
      panels_.pop_back();

      const double split = 0.5 * (worst.lo + worst.hi);
      const double q1 = 0.5 * (worst.lo + split);
      const double q3 = 0.5 * (split + worst.hi);
      if (!(worst.lo < q1 && q1 < split && split < q3 && q3 < worst.hi)) {
        panels_.push_back(worst);
        throw_accuracy("panel width reached floating-point resolution");
      }
      if (evaluations_ + 4 * kRuleOrder > opts_.max_evaluations) {
        panels_.push_back(worst);
        throw_accuracy("evaluation budget exhausted");
      }
      const Panel lower = make_panel(worst.lo, split, worst.left, q1);
      const Panel upper = make_panel(split, worst.hi, worst.right, q3);
      total_err += lower.error() + upper.error() - worst.error();
      push(lower);
      push(upper);

      // The running total drifts; confirm convergence with a fresh sum.
      if (total_err <= opts_.abs_tol) total_err = exact_error();
    }
    return {total_value(), total_err, evaluations_};
  }

 private:
  double panel_sum(double lo, double hi) {
    const GaussLegendre& r = rule();
    const double half = 0.5 * (hi - lo);
    const double centre = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < kRuleOrder; ++i) {
      sum += r.weights[i] * g_(centre + half * r.nodes[i]);
    }
    evaluations_ += kRuleOrder;
    return sum * half;
  }

  Panel make_panel(double lo, double hi, double whole, double mid) {
    return Panel{lo, hi, whole, panel_sum(lo, mid), panel_sum(mid, hi)};
  }

  void push(Panel p) {
    panels_.push_back(p);
    std::push_heap(panels_.begin(), panels_.end(), ByError{});
  }

  double total_value() const {
    std::vector<Panel> ordered = panels_;
    std::sort(ordered.begin(), ordered.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    double sum = 0.0;
    for (const Panel& p : ordered) sum += p.value();
    return sum;
  }

  double exact_error() const {
    double err = 0.0;
    for (const Panel& p : panels_) err += p.error();
    return err;
  }

  [[noreturn]] void throw_accuracy(const std::string& why) const {
    const double err = exact_error();
    throw AccuracyError("quadrature: " + why + " (estimate error " + std::to_string(err) + ")",
                        total_value(), err);
  }

  const Fn& g_;
  QuadOptions opts_;
  std::vector<Panel> panels_;
  std::size_t evaluations_ = 0;
};

double checked(double value, double t) {
  if (!std::isfinite(value)) {
    throw IntegrandError("integrand is not finite at t = " + std::to_string(t), t);
  }
  return value;
}

}  // namespace

Integrand::Integrand(RealFn fn, std::optional<EndpointSingularity> sing, bool weighted)
    : fn_(std::move(fn)), singularity_(sing), weighted_(weighted) {
  if (singularity_) {
    const double g = singularity_->exponent;
    if (!std::isfinite(g) || !(g > -1.0) || !(g < 0.0)) {
      throw DomainError("singularity exponent must lie in (-1, 0), got " + std::to_string(g));
    }
  }
}

Integrand Integrand::smooth(RealFn f) { return Integrand(std::move(f), std::nullopt, false); }

Integrand Integrand::singular(RealFn f, Endpoint side, double exponent) {
  return Integrand(std::move(f), EndpointSingularity{side, exponent}, false);
}

Integrand Integrand::power_weighted(RealFn regular, Endpoint side, double exponent) {
  return Integrand(std::move(regular), EndpointSingularity{side, exponent}, true);
}

double Integrand::operator()(double t, const Interval& iv) const {
  if (!weighted_) return fn_(t);
  const double dist = singularity_->side == Endpoint::right ? iv.b() - t : t - iv.a();
  return std::pow(dist, singularity_->exponent) * fn_(t);
}

QuadResult integrate(const Integrand& f, const Interval& iv, const QuadOptions& opts) {
  if (!(opts.abs_tol >= kMinQuadTol) || !(opts.abs_tol <= kMaxQuadTol)) {
    throw DomainError("abs_tol must lie in [1e-14, 1e-2], got " + std::to_string(opts.abs_tol));
  }
  const RealFn& fn = f.function();

  if (!f.singularity()) {
    auto g = [&fn](double t) { return checked(fn(t), t); };
    return AdaptiveEngine<decltype(g)>(g, opts).run(iv.a(), iv.b());
  }

  // dist = u^m with m = 1/(gamma+1): dist^gamma * d(dist) = m du, so the
  // transformed integrand is bounded at u = 0.
  const EndpointSingularity sing = *f.singularity();
  const double m = 1.0 / (sing.exponent + 1.0);
  const double upper = std::pow(iv.width(), sing.exponent + 1.0);
  const bool right = sing.side == Endpoint::right;
  const double a = iv.a();
  const double b = iv.b();

  if (f.is_power_weighted()) {
    auto g = [&](double u) {
      const double d = std::pow(u, m);
      const double t = right ? b - d : a + d;
      return m * checked(fn(t), t);
    };
    return AdaptiveEngine<decltype(g)>(g, opts).run(0.0, upper);
  }
  auto g = [&](double u) {
    const double d = std::pow(u, m);
    const double t = right ? b - d : a + d;
    return m * std::pow(u, m - 1.0) * checked(fn(t), t);
  };
  return AdaptiveEngine<decltype(g)>(g, opts).run(0.0, upper);
}

QuadResult integrate(const Integrand& f, const Interval& iv, double abs_tol) {
  return integrate(f, iv, QuadOptions{abs_tol, QuadOptions{}.max_evaluations});
}

QuadResult integrate(const RealFn& f, const Interval& iv, double abs_tol) {
  return integrate(Integrand::smooth(f), iv, abs_tol);
}

}  // namespace fracineq

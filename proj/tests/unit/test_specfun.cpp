#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fracineq/errors.hpp"
#include "fracineq/quadrature.hpp"
#include "fracineq/specfun.hpp"
#include "test_support.hpp"

using namespace fracineq;
using fracineq::testing::rel_err;
using fracineq::testing::Uniform;

namespace {

// int_0^1 t^(x-1) (1-t)^(y-1) dt, split at 1/2 so each half carries at most
// one endpoint singularity.
double beta_by_quadrature(double x, double y) {
  const auto left_part = x < 1.0
      ? Integrand::power_weighted([y](double t) { return std::pow(1.0 - t, y - 1.0); },
                                  Endpoint::left, x - 1.0)
      : Integrand::smooth(
            [x, y](double t) { return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0); });
  const auto right_part = y < 1.0
      ? Integrand::power_weighted([x](double t) { return std::pow(t, x - 1.0); },
                                  Endpoint::right, y - 1.0)
      : Integrand::smooth(
            [x, y](double t) { return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0); });
  return integrate(left_part, Interval(0.0, 0.5), 1e-13).value +
         integrate(right_part, Interval(0.5, 1.0), 1e-13).value;
}

}  // namespace

TEST_CASE("gamma at integers and one half") {
  CHECK(fracineq::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rel_err(fracineq::gamma(5.0), 24.0) < 1e-13);
  CHECK(rel_err(fracineq::gamma(0.5), 1.77245385090552) < 1e-12);
  CHECK(rel_err(fracineq::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-13);
}

TEST_CASE("fracineq::gamma(1/2) agrees with its defining integral") {
  // int_0^60 e^-u u^(-1/2) du; the dropped tail is below e^-60.
  const auto integrand = Integrand::power_weighted([](double u) { return std::exp(-u); },
                                                   Endpoint::left, -0.5);
  const double oracle = integrate(integrand, Interval(0.0, 60.0), 1e-13).value;
  CHECK(rel_err(oracle, 1.7724538509055160) < 1e-12);
  CHECK(rel_err(fracineq::gamma(0.5), oracle) < 1e-12);
}

TEST_CASE("beta small cases") {
  CHECK(rel_err(beta(2.0, 2.0), 1.0 / 6.0) < 1e-13);
  CHECK(rel_err(beta(1.0, 1.0), 1.0) < 1e-13);
  CHECK(rel_err(beta(3.0, 3.0), 1.0 / 30.0) < 1e-13);
  CHECK(std::abs(beta_by_quadrature(3.0, 3.0) - 1.0 / 30.0) < 1e-13);
}

TEST_CASE("beta survives large arguments") {
  // B(p+1, alpha p+1) at p = 20, alpha = 3
  const double v = beta(21.0, 61.0);
  CHECK(v > 0.0);
  CHECK(std::isfinite(v));
  const double ref = std::lgamma(21.0) + std::lgamma(61.0) - std::lgamma(82.0);
  CHECK(std::abs(log_beta(21.0, 61.0) - ref) < 1e-11);
  CHECK(std::isfinite(beta(200.0, 300.0)));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(fracineq::gamma(0.0), DomainError);
  CHECK_THROWS_AS(fracineq::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(fracineq::gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(fracineq::gamma(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(beta(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta(1.0, -2.0), DomainError);
}

TEST_CASE("property: gamma recurrence over (0, 100]") {
  Uniform draw(11);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = draw(1e-6, 100.0);
    worst = std::max(worst, rel_err(fracineq::gamma(x + 1.0), x * fracineq::gamma(x)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("property: gamma matches the C library on (0, 170]") {
  Uniform draw(12);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = draw(1e-6, 170.0);
    worst = std::max(worst, rel_err(fracineq::gamma(x), std::tgamma(x)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("property: beta symmetry over (0, 50]") {
  Uniform draw(13);
  for (int i = 0; i < 1000; ++i) {
    const double x = draw(1e-6, 50.0);
    const double y = draw(1e-6, 50.0);
    REQUIRE(rel_err(beta(x, y), beta(y, x)) <= 1e-12);
  }
}

TEST_CASE("property: beta agrees with its defining integral on [0.25, 10]^2") {
  Uniform draw(14);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = draw(0.25, 10.0);
    const double y = draw(0.25, 10.0);
    worst = std::max(worst, std::abs(beta(x, y) - beta_by_quadrature(x, y)));
  }
  CHECK(worst < 1e-9);
}

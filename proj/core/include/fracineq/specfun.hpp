#pragma once

// Gamma and Beta functions on the positive half-line.
//
// log_gamma uses a 9-term Lanczos series (g = 7); for x < 1/2 the argument is
// shifted up with Gamma(x) = Gamma(x + 1) / x. Relative accuracy is better
// than 1e-12 on (0, 170]. All functions throw DomainError for non-finite or
// non-positive arguments.

namespace fracineq {

double log_gamma(double x);
double gamma(double x);

/// Euler Beta function, evaluated as exp(lnG(x) + lnG(y) - lnG(x + y)).
double beta(double x, double y);
double log_beta(double x, double y);

}  // namespace fracineq

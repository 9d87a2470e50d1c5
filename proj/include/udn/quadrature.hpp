// SPDX-License-Identifier: Apache-2.0
//
// Adaptive numerical integration shared by the distance-law, SINR and
// power-search code paths: finite and semi-infinite intervals with
// tolerance control and explicit failure reporting.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace udn {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // estimated absolute error (conservative)
  int evaluations = 0;
  bool converged = false;
};

// Raised when the requested tolerance cannot be met or the integrand
// produces a non-finite value; carries the best estimate achieved.
struct QuadratureFailure : std::runtime_error {
  double best_value;
  double achieved_error;
  QuadratureFailure(const std::string& what, double v, double e)
      : std::runtime_error(what), best_value(v), achieved_error(e) {}
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (G7,K15) bisection on [a,b].
QuadratureResult integrate(const Integrand& f, double a, double b,
                           double abs_tol = 1e-10, double rel_tol = 1e-10,
                           int max_subdiv = 2000);

// Semi-infinite [a, +inf) via the substitution v = a + t/(1-t), t in [0,1).
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         double abs_tol = 1e-10,
                                         double rel_tol = 1e-10,
                                         int max_subdiv = 2000);

// Convenience wrappers that throw QuadratureFailure on non-convergence.
double integrate_or_throw(const Integrand& f, double a, double b,
                          double abs_tol = 1e-10, double rel_tol = 1e-10,
                          int max_subdiv = 2000);
double integrate_semi_infinite_or_throw(const Integrand& f, double a,
                                        double abs_tol = 1e-10,
                                        double rel_tol = 1e-10,
                                        int max_subdiv = 2000);

// Gauss-Legendre nodes/weights on (-1, 1), computed by Newton iteration on
// the Legendre recurrence and cached per order.
struct GaussLegendreRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace udn

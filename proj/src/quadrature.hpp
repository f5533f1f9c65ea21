// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "errors.hpp"

namespace cnoma {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 40;  ///< bisection levels before giving up

  void validate() const;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  /// False when some subinterval hit max_depth with its local tolerance
  /// unmet; `value` is still the best available estimate.
  bool converged = true;
};

/// Adaptive integration of f over the finite interval [a, b], bisecting on an
/// embedded Gauss/Kronrod rule pair until the local error estimates meet
/// max(abs_tol, rel_tol * |integral|).
IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, const QuadratureSpec& spec = {});

/// Integral of exp(-c_x*u - c_y/(1+u)) over [0, chi].
IntegrationResult theta_integral(double chi, double c_x, double c_y,
                                 const QuadratureSpec& spec = {});

/// Integral of exp(shift - c_x*u - c_y/(1+u)) over [0, chi]. Folding a
/// positive prefactor exponent into the integrand keeps the exponent
/// nonpositive where the factored form would overflow.
IntegrationResult theta_integral_shifted(double chi, double c_x, double c_y,
                                         double shift,
                                         const QuadratureSpec& spec = {});

}  // namespace cnoma

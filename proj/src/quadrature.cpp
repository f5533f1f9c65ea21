// SPDX-License-Identifier: Apache-2.0
#include "quadrature.hpp"

#include <array>
#include <cmath>

namespace cnoma {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Weights of the embedded Gauss rule; its nodes are kNodes[1,3,5,7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct RulePair {
  double kronrod = 0.0;
  double gauss = 0.0;
};

RulePair gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  auto eval = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw Error("integrand returned a non-finite value at x=" +
                  std::to_string(x));
    return v;
  };

  const double fc = eval(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = eval(center - dx) + eval(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

struct Accumulator {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

void refine(const std::function<double(double)>& f, double a, double b,
            const RulePair& rule, double tol, int depth, int max_depth,
            Accumulator& acc) {
  const double err = std::abs(rule.kronrod - rule.gauss);
  if (err <= tol || depth >= max_depth) {
    acc.value += rule.kronrod;
    acc.error += err;
    if (err > tol) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, gk15(f, a, mid), 0.5 * tol, depth + 1, max_depth, acc);
  refine(f, mid, b, gk15(f, mid, b), 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw ValidationError("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw ValidationError("abs_tol must be nonnegative");
  if (max_depth < 1) throw ValidationError("max_depth must be at least 1");
}

IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw ValidationError("integration bounds must be finite");
  if (a > b) throw ValidationError("integration requires a <= b");
  if (a == b) return {0.0, 0.0, true};

  const RulePair whole = gk15(f, a, b);
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::abs(whole.kronrod));
  Accumulator acc;
  refine(f, a, b, whole, tol, 0, spec.max_depth, acc);
  return {acc.value, acc.error, acc.converged};
}

IntegrationResult theta_integral(double chi, double c_x, double c_y,
                                 const QuadratureSpec& spec) {
  return theta_integral_shifted(chi, c_x, c_y, 0.0, spec);
}

IntegrationResult theta_integral_shifted(double chi, double c_x, double c_y,
                                         double shift,
                                         const QuadratureSpec& spec) {
  if (!(chi >= 0.0)) throw ValidationError("theta integral requires chi >= 0");
  if (!(c_x >= 0.0 && c_y >= 0.0))
    throw ValidationError("theta integral requires nonnegative coefficients");
  auto integrand = [=](double u) {
    return std::exp(shift - c_x * u - c_y / (1.0 + u));
  };
  return integrate(integrand, 0.0, chi, spec);
}

}  // namespace cnoma

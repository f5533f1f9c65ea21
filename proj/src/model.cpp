// SPDX-License-Identifier: Apache-2.0
#include "model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cnoma {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string error_model_name(const ErrorModel& m) {
  if (std::holds_alternative<PerfectCsi>(m)) return "perfect";
  if (std::holds_alternative<ConstantVariance>(m)) return "constant";
  return "scaled";
}

double error_model_parameter(const ErrorModel& m) {
  if (const auto* c = std::get_if<ConstantVariance>(&m)) return c->sigma_c_sq;
  if (const auto* s = std::get_if<ScaledVariance>(&m)) return s->eta;
  return 0.0;
}

void SystemConfig::validate() const {
  for (double v : {p1, p2, p3, n0, sigma1_sq, sigma2_sq, sigma3_sq, rate1, rate2})
    require(std::isfinite(v), "all parameters must be finite");
  require(p1 > 0.0 && p2 > 0.0 && p3 > 0.0, "all powers must be strictly positive");
  require(n0 > 0.0, "noise power n0 must be strictly positive");
  require(sigma1_sq > 0.0 && sigma2_sq > 0.0 && sigma3_sq > 0.0,
          "channel variances must be strictly positive");
  require(p2 > p1, "NOMA power ordering requires p2 > p1 (got p1=" + num(p1) +
                       ", p2=" + num(p2) + ")");
  require(sigma1_sq > sigma2_sq,
          "near-user channel must be stronger: sigma1_sq > sigma2_sq (got sigma1_sq=" +
              num(sigma1_sq) + ", sigma2_sq=" + num(sigma2_sq) + ")");
  require(rate1 >= 0.0 && rate2 >= 0.0, "target rates must be nonnegative");
  if (gamma1_override) {
    require(std::isfinite(*gamma1_override) && *gamma1_override >= 0.0,
            "gamma1 override must be finite and nonnegative");
  }
  if (gamma2_override) {
    require(std::isfinite(*gamma2_override) && *gamma2_override >= 0.0,
            "gamma2 override must be finite and nonnegative");
  }
  if (const auto* c = std::get_if<ConstantVariance>(&error_model)) {
    require(std::isfinite(c->sigma_c_sq) && c->sigma_c_sq >= 0.0,
            "constant error variance sigma_c_sq must be nonnegative");
  } else if (const auto* s = std::get_if<ScaledVariance>(&error_model)) {
    require(std::isfinite(s->eta) && s->eta >= 0.0,
            "error-variance scaling factor eta must be nonnegative");
  }
}

double rate_to_threshold(double rate) {
  if (!(rate >= 0.0)) throw ValidationError("rate must be nonnegative");
  return std::exp2(2.0 * rate) - 1.0;
}

DerivedQuantities derive(const SystemConfig& config) {
  config.validate();

  DerivedQuantities d;
  d.config = config;

  d.gamma_bar1 = config.gamma1_override ? *config.gamma1_override
                                        : rate_to_threshold(config.rate1);
  d.gamma_bar2 = config.gamma2_override ? *config.gamma2_override
                                        : rate_to_threshold(config.rate2);
  d.lambda_p = config.p2 / config.p1;

  const std::array<double, 3> sigma_sq = {config.sigma1_sq, config.sigma2_sq,
                                          config.sigma3_sq};
  const std::array<double, 3> power = {config.p1, config.p2, config.p3};
  std::array<double, 3> err{};
  if (const auto* c = std::get_if<ConstantVariance>(&config.error_model)) {
    err = {c->sigma_c_sq, c->sigma_c_sq, c->sigma_c_sq};
  } else if (const auto* s = std::get_if<ScaledVariance>(&config.error_model)) {
    for (int i = 0; i < 3; ++i)
      err[i] = s->eta * config.n0 / (power[i] * sigma_sq[i]);
  }
  for (int i = 0; i < 3; ++i) {
    if (err[i] >= sigma_sq[i]) {
      throw InfeasibleErrorVariance(
          "link " + std::to_string(i + 1) + ": error variance " + num(err[i]) +
          " reaches channel variance " + num(sigma_sq[i]));
    }
    d.link_stats[i] = {sigma_sq[i] - err[i], err[i]};
  }

  const double hat1 = d.link_stats[0].hat_sigma_sq;
  const double hat2 = d.link_stats[1].hat_sigma_sq;
  const double hat3 = d.link_stats[2].hat_sigma_sq;

  d.rho11 = config.p1 * hat1 / config.n0;
  d.rho12 = config.p1 * hat2 / config.n0;
  d.rho3 = config.p3 * hat3 / config.n0;

  d.i_xt = d.link_stats[1].err_sigma_sq * (config.p1 + config.p2) + config.n0;
  d.i_yt = d.link_stats[2].err_sigma_sq * config.p3 + config.n0;
  d.rho_xt = config.p1 * hat2 / d.i_xt;
  d.rho_yt = config.p3 * hat3 / d.i_yt;

  d.degenerate = d.lambda_p <= d.gamma_bar2;
  if (d.degenerate) {
    d.chi = d.chi_m = d.beta1 = d.mu1 = d.mu2 = kNan;
    return d;
  }

  d.chi = d.gamma_bar2 / (d.lambda_p - d.gamma_bar2);
  d.chi_m = std::max(d.chi, d.gamma_bar1);
  d.beta1 = std::max(d.gamma_bar2 / (config.p2 - config.p1 * d.gamma_bar2),
                     d.gamma_bar1 / config.p1);

  const double common = d.chi * (1.0 + d.lambda_p);
  d.mu1 = 1.0 / (1.0 + common * d.link_stats[0].err_sigma_sq / hat1);
  d.mu2 = 1.0 / (1.0 + common * d.link_stats[1].err_sigma_sq / hat2);
  return d;
}

SystemConfig config_for_power_sweep(const SystemConfig& base, double pt_db,
                                    double p3_offset_db) {
  if (!std::isfinite(pt_db))
    throw ValidationError("sweep point pt_db must be finite");
  SystemConfig out = base;
  const double lambda = base.p2 / base.p1;
  const double pt = std::pow(10.0, pt_db / 10.0) * base.n0;
  out.p1 = pt / (1.0 + lambda);
  out.p2 = lambda * out.p1;
  out.p3 = std::pow(10.0, (pt_db - p3_offset_db) / 10.0) * base.n0;
  return out;
}

}  // namespace cnoma

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "errors.hpp"

namespace cnoma {

/// Channel estimates are perfect: every error variance is zero.
struct PerfectCsi {
  bool operator==(const PerfectCsi&) const = default;
};

/// Every link has the same fixed estimation-error variance.
struct ConstantVariance {
  double sigma_c_sq = 0.0;
  bool operator==(const ConstantVariance&) const = default;
};

/// Error variance shrinks with received SNR:
/// err_sigma_sq_i = eta * n0 / (p_i * sigma_i_sq), links i = 1, 2, 3.
struct ScaledVariance {
  double eta = 0.0;
  bool operator==(const ScaledVariance&) const = default;
};

using ErrorModel = std::variant<PerfectCsi, ConstantVariance, ScaledVariance>;

std::string error_model_name(const ErrorModel& m);  // "perfect"|"constant"|"scaled"
double error_model_parameter(const ErrorModel& m);  // sigma_c_sq, eta, or 0

/// Full parameter set of the two-user downlink with a relaying near user.
/// All powers are linear and expressed in the same unit as n0.
struct SystemConfig {
  double p1 = 0.0;  ///< power allocated to the near user's signal
  double p2 = 0.0;  ///< power allocated to the far user's signal (p2 > p1)
  double p3 = 0.0;  ///< relay transmit power
  double n0 = 1.0;  ///< noise power, common to all receivers

  double sigma1_sq = 0.36;  ///< BS -> near-user channel variance
  double sigma2_sq = 0.16;  ///< BS -> far-user channel variance
  double sigma3_sq = 0.64;  ///< near-user -> far-user channel variance

  ErrorModel error_model = PerfectCsi{};

  double rate1 = 1.5;  ///< target rate of the near user (bit/Hz/s)
  double rate2 = 1.0;  ///< target rate of the far user (bit/Hz/s)

  /// Direct SINR-threshold overrides. When set, the rate fields are ignored.
  std::optional<double> gamma1_override;
  std::optional<double> gamma2_override;

  /// Throws ValidationError naming the violated invariant.
  void validate() const;
};

/// Per-link split of the channel variance into estimate and error parts.
/// hat_sigma_sq + err_sigma_sq equals the configured channel variance.
struct LinkStats {
  double hat_sigma_sq = 0.0;
  double err_sigma_sq = 0.0;
};

/// Everything the outage formulas consume, computed once per config.
///
/// When lambda_p <= gamma_bar2 the system cannot work (outage is 1 for both
/// users); `degenerate` reports that state and the chi-dependent fields are
/// NaN. It is a reportable condition, not an error.
struct DerivedQuantities {
  SystemConfig config;  ///< originating parameters

  double gamma_bar1 = 0.0;  ///< SINR threshold of the near user
  double gamma_bar2 = 0.0;  ///< SINR threshold of the far user
  double lambda_p = 0.0;    ///< p2 / p1
  bool degenerate = false;

  std::array<LinkStats, 3> link_stats{};  ///< links 1, 2, 3

  double chi = 0.0;    ///< gamma_bar2 / (lambda_p - gamma_bar2)
  double chi_m = 0.0;  ///< max(chi, gamma_bar1)
  double beta1 = 0.0;  ///< max(gamma_bar2/(p2 - p1*gamma_bar2), gamma_bar1/p1)

  double rho11 = 0.0;  ///< p1 * hat_sigma1_sq / n0
  double rho12 = 0.0;  ///< p1 * hat_sigma2_sq / n0
  double rho3 = 0.0;   ///< p3 * hat_sigma3_sq / n0

  double i_xt = 0.0;  ///< err_sigma2_sq * (p1 + p2) + n0
  double i_yt = 0.0;  ///< err_sigma3_sq * p3 + n0

  double rho_xt = 0.0;  ///< p1 * hat_sigma2_sq / i_xt
  double rho_yt = 0.0;  ///< p3 * hat_sigma3_sq / i_yt

  double mu1 = 0.0;  ///< (1 + chi*(1+lambda_p)*err1/hat1)^-1
  double mu2 = 0.0;  ///< (1 + chi*(1+lambda_p)*err2/hat2)^-1
};

/// SINR threshold for a target rate under the two-slot scheme: 2^(2*rate) - 1.
double rate_to_threshold(double rate);

/// Computes all derived quantities. Throws InfeasibleErrorVariance when the
/// resolved error variance reaches the channel variance on any link.
DerivedQuantities derive(const SystemConfig& config);

/// Rescales the powers of `base` to a total transmit power of pt_db (dB over
/// n0), keeping the p2/p1 ratio, with the relay power offset below the total
/// in the dB domain.
SystemConfig config_for_power_sweep(const SystemConfig& base, double pt_db,
                                    double p3_offset_db = 5.0);

}  // namespace cnoma

#pragma once

#include "leoaoi/onoff.hpp"

namespace leoaoi::analysis {

/// Status-update traffic: generate-at-will Poisson updates of rate mu and a
/// constant propagation delay D on delivered packets.
struct UpdateModel {
  double update_rate_per_s = 0.0;    // mu
  double propagation_delay_s = 0.0;  // D

  void validate() const;
};

/// Every intermediate of the closed-form chain, exposed so each piece can be
/// validated against its own oracle.
struct AoiBreakdown {
  double a = 0.0;                  // lambda_os / (mu + lambda_os)
  double b = 0.0;                  // E[exp(-mu W)]
  double p_f_given_f = 0.0;
  double p_off = 0.0;
  double p_o_given_o = 0.0;
  double gamma = 0.0;              // 1 / (1 - p_f_given_f)
  double mean_y_s = 0.0;           // E[Y]
  double second_moment_y_s2 = 0.0; // E[Y^2]
  double time_avg_aoi_s = 0.0;
};

struct Moments {
  double mean_y_s = 0.0;
  double second_moment_y_s2 = 0.0;
};

/// P(next update in an off period | previous update in an off period),
/// (1 - a) / (1 - a b).
double p_f_given_f(const onoff::OnOffParams& params, const UpdateModel& model);

/// Long-run fraction of time spent disconnected, 1 / (1 + lambda_os E[W]).
/// Equals 1 when the off rate is zero.
double p_off(const onoff::OnOffParams& params);

/// P(next update in an on period | previous update in an on period).
/// Throws permanent_disconnection_error when the process never turns on.
double p_o_given_o(const onoff::OnOffParams& params, const UpdateModel& model);

/// First and second moments of the inter-delivery time Y.
Moments moments_y(const onoff::OnOffParams& params, const UpdateModel& model);

/// Closed-form time-average age of the link.
double time_avg_aoi(const onoff::OnOffParams& params, const UpdateModel& model);

AoiBreakdown breakdown(const onoff::OnOffParams& params,
                       const UpdateModel& model);

// Pure algebra of the chain, split out so the closed forms and the
// moment-ratio route can be exercised independently of the quadrature.
double gamma_from_p_f_given_f(double p_f_given_f);
Moments moments_from_chain(double gamma, double p_o_given_o, double mu);
double aoi_from_chain(double gamma, double p_o_given_o, double mu,
                      double delay);
double aoi_from_moments(const Moments& m, double delay);

}  // namespace leoaoi::analysis

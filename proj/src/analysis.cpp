#include "leoaoi/analysis.hpp"

#include <stdexcept>

#include "leoaoi/errors.hpp"

namespace leoaoi::analysis {

namespace {

double interarrival_weight(const onoff::OnOffParams& params,
                           const UpdateModel& model) {
  // a = lambda_os / (mu + lambda_os): probability that an exponential
  // inter-arrival outlasts the residual off period.
  return params.off_rate_per_s /
         (model.update_rate_per_s + params.off_rate_per_s);
}

}  // namespace

void UpdateModel::validate() const {
  if (!(update_rate_per_s > 0.0)) {
    throw std::invalid_argument("model: update_rate must be > 0");
  }
  if (!(propagation_delay_s >= 0.0)) {
    throw std::invalid_argument("model: propagation_delay must be >= 0");
  }
}

double p_f_given_f(const onoff::OnOffParams& params, const UpdateModel& model) {
  params.validate();
  model.validate();
  const double a = interarrival_weight(params, model);
  const double b = onoff::service_laplace(params, model.update_rate_per_s);
  return (1.0 - a) / (1.0 - a * b);
}

double p_off(const onoff::OnOffParams& params) {
  params.validate();
  return 1.0 / (1.0 + params.off_rate_per_s * onoff::mean_service_time(params));
}

double p_o_given_o(const onoff::OnOffParams& params, const UpdateModel& model) {
  params.validate();
  model.validate();
  const double on_off_ratio =
      params.off_rate_per_s * onoff::mean_service_time(params);
  if (!(on_off_ratio > 0.0)) {
    throw permanent_disconnection_error(
        "p_o_given_o: the link is never on (P_off = 1)");
  }
  const double pff = p_f_given_f(params, model);
  const double poff = 1.0 / (1.0 + on_off_ratio);
  const double p_on = on_off_ratio / (1.0 + on_off_ratio);  // 1 - P_off
  return (1.0 - (2.0 - pff) * poff) / p_on;
}

double gamma_from_p_f_given_f(double pff) { return 1.0 / (1.0 - pff); }

Moments moments_from_chain(double gamma, double poo, double mu) {
  Moments m;
  m.mean_y_s = 1.0 / mu + gamma / mu * (1.0 - poo);
  m.second_moment_y_s2 =
      2.0 / (mu * mu) + 2.0 * (gamma + gamma * gamma) / (mu * mu) * (1.0 - poo);
  return m;
}

Moments moments_y(const onoff::OnOffParams& params, const UpdateModel& model) {
  const double gamma = gamma_from_p_f_given_f(p_f_given_f(params, model));
  const double poo = p_o_given_o(params, model);
  return moments_from_chain(gamma, poo, model.update_rate_per_s);
}

double aoi_from_chain(double gamma, double poo, double mu, double delay) {
  return gamma * gamma * (1.0 - poo) / (mu + mu * gamma * (1.0 - poo)) +
         1.0 / mu + delay;
}

double aoi_from_moments(const Moments& m, double delay) {
  return m.second_moment_y_s2 / (2.0 * m.mean_y_s) + delay;
}

double time_avg_aoi(const onoff::OnOffParams& params, const UpdateModel& model) {
  const double gamma = gamma_from_p_f_given_f(p_f_given_f(params, model));
  const double poo = p_o_given_o(params, model);
  return aoi_from_chain(gamma, poo, model.update_rate_per_s,
                        model.propagation_delay_s);
}

AoiBreakdown breakdown(const onoff::OnOffParams& params,
                       const UpdateModel& model) {
  params.validate();
  model.validate();
  AoiBreakdown out;
  out.a = interarrival_weight(params, model);
  out.b = onoff::service_laplace(params, model.update_rate_per_s);
  out.p_f_given_f = p_f_given_f(params, model);
  out.p_off = p_off(params);
  out.p_o_given_o = p_o_given_o(params, model);
  out.gamma = gamma_from_p_f_given_f(out.p_f_given_f);
  const Moments m = moments_y(params, model);
  out.mean_y_s = m.mean_y_s;
  out.second_moment_y_s2 = m.second_moment_y_s2;
  out.time_avg_aoi_s = time_avg_aoi(params, model);
  return out;
}

}  // namespace leoaoi::analysis

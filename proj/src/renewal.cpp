#include "leoaoi/renewal.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "leoaoi/errors.hpp"
#include "leoaoi/rng.hpp"
#include "leoaoi/stats.hpp"

namespace leoaoi::sim {

namespace {

void fill_estimate_from_cycles(AoiEstimate& est,
                               const SawtoothAccumulator& acc,
                               const ConditionalEstimates& cond) {
  est.time_avg_aoi_s = acc.time_average_s();
  est.std_error_s = acc.std_error_s();
  est.n_delivered = acc.n_delivered();
  est.empirical_p_off = cond.p_off;
  est.empirical_p_f_given_f = cond.p_f_given_f;
  est.empirical_p_o_given_o = cond.p_o_given_o;
  const auto& ys = acc.inter_delivery_s();
  if (!ys.empty()) {
    const stats::Summary s = stats::summarize(ys);
    est.empirical_mean_y_s = s.mean;
    est.empirical_second_moment_y_s2 = s.second_moment;
  }
}

}  // namespace

RenewalDetail renewal_run_detailed(const onoff::OnOffParams& params,
                                   const analysis::UpdateModel& model,
                                   std::uint64_t n_arrivals, std::uint64_t seed,
                                   const RenewalOptions& options) {
  params.validate();
  model.validate();
  if (n_arrivals < 1000) {
    throw std::invalid_argument("renewal_run: need >= 1000 arrivals");
  }

  Rng rng = make_rng(seed);
  std::exponential_distribution<double> interarrival(model.update_rate_per_s);

  // The process starts in a fresh off period; with a zero off rate that
  // period never ends and every arrival is dropped.
  bool in_off = true;
  double period_end = params.off_rate_per_s > 0.0
                          ? onoff::sample_off_time(params, rng)
                          : std::numeric_limits<double>::infinity();

  const double delay = model.propagation_delay_s;
  SawtoothAccumulator acc(delay);
  std::vector<bool> arrival_in_off;
  arrival_in_off.reserve(n_arrivals);
  std::vector<double> delivery_times;

  double t = 0.0;
  for (std::uint64_t k = 0; k < n_arrivals; ++k) {
    t += interarrival(rng);
    while (t >= period_end) {
      if (in_off) {
        period_end += onoff::sample_service_time(params, rng);
      } else {
        period_end += onoff::sample_off_time(params, rng);
      }
      in_off = !in_off;
    }
    arrival_in_off.push_back(in_off);
    if (!in_off) {
      acc.add_delivery(t);
      if (options.collect_delivery_records) {
        delivery_times.push_back(t);
      }
    }
  }

  if (acc.n_delivered() == 0) {
    throw starvation_error(
        "renewal_run: no delivery within the arrival budget");
  }

  RenewalDetail out;
  out.conditionals = empirical_conditionals(arrival_in_off);
  out.estimate.n_arrivals = n_arrivals;
  fill_estimate_from_cycles(out.estimate, acc, out.conditionals);
  out.inter_delivery_s = acc.inter_delivery_s();

  if (options.collect_delivery_records) {
    out.deliveries.reserve(delivery_times.size());
    for (std::size_t i = 0; i < delivery_times.size(); ++i) {
      DeliveryRecord rec;
      rec.generation_time_s = delivery_times[i];
      rec.reception_time_s = delivery_times[i] + delay;
      rec.service_delay_s = delay;
      if (i + 1 < delivery_times.size()) {
        rec.inter_delivery_s = delivery_times[i + 1] - delivery_times[i];
        rec.idle_gap_s = rec.inter_delivery_s - delay;
      }
      out.deliveries.push_back(rec);
    }
  }
  return out;
}

AoiEstimate renewal_run(const onoff::OnOffParams& params,
                        const analysis::UpdateModel& model,
                        std::uint64_t n_arrivals, std::uint64_t seed) {
  return renewal_run_detailed(params, model, n_arrivals, seed).estimate;
}

}  // namespace leoaoi::sim

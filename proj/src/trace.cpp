#include "leoaoi/trace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "leoaoi/errors.hpp"
#include "leoaoi/stats.hpp"

namespace leoaoi::sim {

void PeriodTrace::append(PeriodKind kind, double duration_s) {
  if (!(duration_s > 0.0)) {
    throw std::invalid_argument("PeriodTrace: duration must be > 0");
  }
  if (periods_.empty()) {
    if (kind != PeriodKind::off) {
      throw std::invalid_argument("PeriodTrace: must start with an off period");
    }
  } else if (periods_.back().kind == kind) {
    throw std::invalid_argument("PeriodTrace: kinds must alternate");
  }
  periods_.push_back(Period{kind, duration_s});
  total_duration_s_ += duration_s;
}

std::vector<double> PeriodTrace::off_durations() const {
  std::vector<double> out;
  for (const Period& p : periods_) {
    if (p.kind == PeriodKind::off) out.push_back(p.duration_s);
  }
  return out;
}

std::vector<double> PeriodTrace::on_durations() const {
  std::vector<double> out;
  for (const Period& p : periods_) {
    if (p.kind == PeriodKind::on) out.push_back(p.duration_s);
  }
  return out;
}

void SawtoothAccumulator::add_delivery(double generation_time_s) {
  if (n_delivered_ == 0) {
    first_generation_s_ = generation_time_s;
  } else {
    const double y = generation_time_s - last_generation_s_;
    if (!(y > 0.0)) {
      throw std::invalid_argument("SawtoothAccumulator: deliveries must advance");
    }
    area_sum_ += 0.5 * y * y + delay_s_ * y;
    inter_delivery_s_.push_back(y);
  }
  last_generation_s_ = generation_time_s;
  ++n_delivered_;
}

double SawtoothAccumulator::time_average_s() const {
  if (inter_delivery_s_.empty()) {
    throw starvation_error(
        "time average undefined: fewer than two deliveries");
  }
  return area_sum_ / (last_generation_s_ - first_generation_s_);
}

double SawtoothAccumulator::std_error_s() const {
  constexpr std::size_t kBatches = 20;
  const std::size_t n = inter_delivery_s_.size();
  if (n < 2 * kBatches) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  // Ratio estimator per batch: sum of cycle areas over sum of cycle lengths.
  const std::size_t m = n / kBatches;
  std::vector<double> ratios(kBatches);
  for (std::size_t b = 0; b < kBatches; ++b) {
    double area = 0.0;
    double len = 0.0;
    for (std::size_t i = b * m; i < (b + 1) * m; ++i) {
      const double y = inter_delivery_s_[i];
      area += 0.5 * y * y + delay_s_ * y;
      len += y;
    }
    ratios[b] = area / len;
  }
  double grand = 0.0;
  for (double r : ratios) grand += r;
  grand /= kBatches;
  double var = 0.0;
  for (double r : ratios) var += (r - grand) * (r - grand);
  var /= (kBatches - 1);
  return std::sqrt(var / kBatches);
}

namespace {

struct RatioSe {
  double estimate = 0.0;
  double se = 0.0;
  bool ok = false;
};

// Batch-means standard error for a ratio of indicator sums.
template <class Num, class Den>
RatioSe batched_ratio(std::size_t n, Num num_at, Den den_at) {
  constexpr std::size_t kBatches = 20;
  std::uint64_t num_total = 0;
  std::uint64_t den_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    den_total += den_at(i) ? 1 : 0;
    num_total += num_at(i) ? 1 : 0;
  }
  RatioSe out;
  if (den_total == 0) return out;
  out.estimate = static_cast<double>(num_total) / static_cast<double>(den_total);
  if (n < 2 * kBatches) return out;
  const std::size_t m = n / kBatches;
  std::vector<double> ratios;
  ratios.reserve(kBatches);
  for (std::size_t b = 0; b < kBatches; ++b) {
    std::uint64_t num = 0;
    std::uint64_t den = 0;
    for (std::size_t i = b * m; i < (b + 1) * m; ++i) {
      den += den_at(i) ? 1 : 0;
      num += num_at(i) ? 1 : 0;
    }
    if (den > 0) {
      ratios.push_back(static_cast<double>(num) / static_cast<double>(den));
    }
  }
  if (ratios.size() < 2) return out;
  double grand = 0.0;
  for (double r : ratios) grand += r;
  grand /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (double r : ratios) var += (r - grand) * (r - grand);
  var /= static_cast<double>(ratios.size() - 1);
  out.se = std::sqrt(var / static_cast<double>(ratios.size()));
  out.ok = true;
  return out;
}

}  // namespace

ConditionalEstimates empirical_conditionals(
    const std::vector<bool>& arrival_in_off) {
  const std::size_t n = arrival_in_off.size();
  if (n < 2) {
    throw std::invalid_argument("empirical_conditionals: need >= 2 arrivals");
  }
  ConditionalEstimates out;
  out.n_arrivals = n;
  for (bool off : arrival_in_off) {
    if (off) {
      ++out.n_off_arrivals;
    } else {
      ++out.n_on_arrivals;
    }
  }

  const auto p_off = batched_ratio(
      n, [&](std::size_t i) { return arrival_in_off[i]; },
      [](std::size_t) { return true; });
  out.p_off = p_off.estimate;
  out.p_off_se = p_off.se;
  out.low_power_off = n < 100 || !p_off.ok;

  // Consecutive-pair conditionals over the n-1 adjacent pairs.
  const std::size_t pairs = n - 1;
  const auto pff = batched_ratio(
      pairs,
      [&](std::size_t i) { return arrival_in_off[i] && arrival_in_off[i + 1]; },
      [&](std::size_t i) { return static_cast<bool>(arrival_in_off[i]); });
  out.p_f_given_f = pff.estimate;
  out.p_f_given_f_se = pff.se;
  out.low_power_f_given_f = out.n_off_arrivals < 100 || !pff.ok;

  const auto poo = batched_ratio(
      pairs,
      [&](std::size_t i) {
        return !arrival_in_off[i] && !arrival_in_off[i + 1];
      },
      [&](std::size_t i) { return !arrival_in_off[i]; });
  out.p_o_given_o = poo.estimate;
  out.p_o_given_o_se = poo.se;
  out.low_power_o_given_o = out.n_on_arrivals < 100 || !poo.ok;

  if (out.n_off_arrivals == 0) {
    out.p_f_given_f = std::numeric_limits<double>::quiet_NaN();
  }
  if (out.n_on_arrivals == 0) {
    out.p_o_given_o = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

std::vector<bool> classify_arrivals(std::span<const double> arrival_times_s,
                                    const PeriodTrace& trace) {
  std::vector<bool> out;
  out.reserve(arrival_times_s.size());
  std::size_t idx = 0;
  double period_end = trace.empty() ? 0.0 : trace.periods()[0].duration_s;
  double period_start = 0.0;
  for (double t : arrival_times_s) {
    if (t < period_start) {
      throw std::invalid_argument("classify_arrivals: times must be sorted");
    }
    while (t >= period_end) {
      ++idx;
      if (idx >= trace.size()) {
        throw std::invalid_argument(
            "classify_arrivals: arrival beyond end of trace");
      }
      period_start = period_end;
      period_end += trace.periods()[idx].duration_s;
    }
    out.push_back(trace.periods()[idx].kind == PeriodKind::off);
  }
  return out;
}

}  // namespace leoaoi::sim

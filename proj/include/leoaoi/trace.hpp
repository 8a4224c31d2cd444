#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace leoaoi::sim {

enum class PeriodKind { off, on };

struct Period {
  PeriodKind kind = PeriodKind::off;
  double duration_s = 0.0;
};

/// Alternating sequence of off/on intervals. By convention a trace starts
/// with an off period; kinds strictly alternate and durations are positive.
class PeriodTrace {
 public:
  void append(PeriodKind kind, double duration_s);

  const std::vector<Period>& periods() const { return periods_; }
  bool empty() const { return periods_.empty(); }
  std::size_t size() const { return periods_.size(); }
  double total_duration_s() const { return total_duration_s_; }

  std::vector<double> off_durations() const;
  std::vector<double> on_durations() const;

 private:
  std::vector<Period> periods_;
  double total_duration_s_ = 0.0;
};

/// One successful update: generated at t, received at t + D.
struct DeliveryRecord {
  double generation_time_s = 0.0;  // t_k
  double reception_time_s = 0.0;   // t'_k = t_k + D
  double inter_delivery_s = 0.0;   // Y_k, to the next delivery (0 for last)
  double service_delay_s = 0.0;    // T_k = D
  double idle_gap_s = 0.0;         // B_k = Y_k - T_k
};

/// Simulated time-average age with its standard error and the empirical
/// diagnostics used as oracles for the closed forms.
struct AoiEstimate {
  double time_avg_aoi_s = 0.0;
  double std_error_s = 0.0;
  std::uint64_t n_arrivals = 0;
  std::uint64_t n_delivered = 0;
  double empirical_p_off = 0.0;
  double empirical_p_f_given_f = 0.0;
  double empirical_p_o_given_o = 0.0;
  double empirical_mean_y_s = 0.0;
  double empirical_second_moment_y_s2 = 0.0;
};

/// Exact area under the age sawtooth, accumulated per delivery cycle in
/// closed form: a cycle of length Y starting at age D contributes
/// Y^2/2 + D*Y. The average runs from the first to the last reception
/// (everything before the first delivery is warm-up and excluded).
class SawtoothAccumulator {
 public:
  explicit SawtoothAccumulator(double delay_s) : delay_s_(delay_s) {}

  void add_delivery(double generation_time_s);

  std::uint64_t n_delivered() const { return n_delivered_; }
  std::uint64_t n_cycles() const { return inter_delivery_s_.size(); }
  const std::vector<double>& inter_delivery_s() const {
    return inter_delivery_s_;
  }

  /// Throws starvation_error when no cycle completed.
  double time_average_s() const;
  /// Batch-means standard error over delivery cycles (20 batches).
  double std_error_s() const;

 private:
  double delay_s_ = 0.0;
  std::uint64_t n_delivered_ = 0;
  double first_generation_s_ = 0.0;
  double last_generation_s_ = 0.0;
  double area_sum_ = 0.0;
  std::vector<double> inter_delivery_s_;
};

/// Frequency estimates of the Lemma-style conditional probabilities from a
/// sequence of arrival classifications (true = arrival fell in an off
/// period). Standard errors come from 20-batch batch means, which stay
/// honest under the serial correlation of consecutive arrivals. A quantity
/// whose conditioning class holds fewer than 100 arrivals is flagged
/// low-power instead of being reported as a bare NaN.
struct ConditionalEstimates {
  double p_off = 0.0;
  double p_off_se = 0.0;
  double p_f_given_f = 0.0;
  double p_f_given_f_se = 0.0;
  double p_o_given_o = 0.0;
  double p_o_given_o_se = 0.0;
  std::uint64_t n_arrivals = 0;
  std::uint64_t n_off_arrivals = 0;
  std::uint64_t n_on_arrivals = 0;
  bool low_power_off = false;
  bool low_power_f_given_f = false;
  bool low_power_o_given_o = false;
};

ConditionalEstimates empirical_conditionals(
    const std::vector<bool>& arrival_in_off);

/// Classifies arrival times against a trace that starts at t = 0.
/// Arrivals beyond the end of the trace are rejected.
std::vector<bool> classify_arrivals(std::span<const double> arrival_times_s,
                                    const PeriodTrace& trace);

}  // namespace leoaoi::sim

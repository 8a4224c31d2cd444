#pragma once

#include <cstdint>
#include <vector>

#include "leoaoi/analysis.hpp"
#include "leoaoi/onoff.hpp"
#include "leoaoi/trace.hpp"

namespace leoaoi::sim {

/// Full diagnostics of one renewal run, for use as an oracle.
struct RenewalDetail {
  AoiEstimate estimate;
  ConditionalEstimates conditionals;
  std::vector<double> inter_delivery_s;          // Y_k sequence
  std::vector<DeliveryRecord> deliveries;        // filled when requested
};

struct RenewalOptions {
  bool collect_delivery_records = false;
};

/// Simulates the abstract on-off renewal process with Poisson status
/// updates: alternating Exp(lambda_os) / pass-law periods starting with a
/// fresh off period, arrivals of rate mu, deliveries delayed by D, arrivals
/// during off periods dropped. The time-average age is the exact area under
/// the sawtooth between the first and last reception.
///
/// Throws starvation_error when the arrival budget produced no delivery.
AoiEstimate renewal_run(const onoff::OnOffParams& params,
                        const analysis::UpdateModel& model,
                        std::uint64_t n_arrivals, std::uint64_t seed);

RenewalDetail renewal_run_detailed(const onoff::OnOffParams& params,
                                   const analysis::UpdateModel& model,
                                   std::uint64_t n_arrivals, std::uint64_t seed,
                                   const RenewalOptions& options = {});

}  // namespace leoaoi::sim

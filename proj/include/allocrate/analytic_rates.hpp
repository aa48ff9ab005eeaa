// Closed-form download times, per-set service rates, recovery probability,
// and the DSS service rate for all four access/service model combinations.
#pragma once

#include <vector>

#include "allocrate/model.hpp"

namespace allocrate {

struct PerPhiRate {
  int phi;             // accessed data-bearing nodes
  double probability;  // P[phi]
  double rate;         // conditional service rate given phi
};

struct RateReport {
  double mu_s = 0.0;  // DSS service rate, requests per unit time
  double p_s = 0.0;   // recovery probability
  std::vector<PerPhiRate> per_phi;  // one row per phi in [alpha, support_max]
};

/// Mean time until any alpha of phi data-bearing nodes finish, i.e. the
/// alpha-th order statistic of the node service times.
/// Scaled:  (H_phi - H_{phi-alpha}) / (alpha * mu)
/// Shifted: delta/alpha + (H_phi - H_{phi-alpha}) / mu
double expected_download_time(const ServiceModel& service, int alpha, int phi);

/// 1 / expected_download_time.
double set_service_rate(const ServiceModel& service, int alpha, int phi);

/// P[phi >= alpha] under the access model.
double recovery_probability(const SystemConfig& config, const AccessModel& access);

/// mu_s = sum_{phi >= alpha} P[phi] * set_service_rate(phi); accessed sets
/// that cannot recover the file contribute zero rate.
RateReport dss_service_rate(const SystemConfig& config, const AccessModel& access,
                            const ServiceModel& service);

}  // namespace allocrate

// Stochastic oracle for the analytic formulas: simulates access-set draws
// and node service times. All estimators are deterministic functions of
// (seed, trials, configuration), independent of the thread count.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "allocrate/model.hpp"

namespace allocrate {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr long long kDefaultTrials = 100000;

struct SimulationEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  std::map<int, long long> per_phi_counts;
};

/// Mean of the alpha-th smallest of phi i.i.d. node service times.
/// Scaled: node time ~ Exp(alpha*mu); shifted: delta/alpha + Exp(mu).
SimulationEstimate simulate_download_time(const ServiceModel& service, int alpha, int phi,
                                          long long trials, std::uint64_t seed,
                                          int threads = 1);

struct PhiSimulation {
  std::map<int, double> pmf;  // normalized counts over the analytic support
  std::map<int, long long> counts;
  long long trials = 0;
  std::uint64_t seed = 0;
};

/// Empirical distribution of phi. Fixed-size access draws a uniform r-subset
/// per trial and counts data-bearing members; probabilistic access flips one
/// coin per data-bearing node.
PhiSimulation simulate_phi(const SystemConfig& config, const AccessModel& access,
                           long long trials, std::uint64_t seed, int threads = 1);

struct StratumStats {
  long long count = 0;
  double mean_time = 0.0;  // empirical mean of the alpha-th order statistic
  double time_std_error = 0.0;
};

struct DssSimulation {
  SimulationEstimate recovery;      // estimate of p_s
  SimulationEstimate service_rate;  // estimate of mu_s
  std::map<int, StratumStats> strata;  // per phi >= alpha
  // Strata whose analytic probability exceeds 10/trials yet received fewer
  // than 30 samples; their contribution to mu_s is poorly resolved.
  std::vector<int> undersampled;
};

/// Joint simulation of access and service. p_s is the fraction of trials
/// with phi >= alpha; mu_s is the plug-in functional
/// sum_phi p_hat(phi) / T_hat(phi) over strata with at least one sample,
/// matching the analytic sum of P[phi] / E[T | phi]. The mu_s standard
/// error combines per-stratum delta-method terms in quadrature.
DssSimulation simulate_dss(const SystemConfig& config, const AccessModel& access,
                           const ServiceModel& service, long long trials,
                           std::uint64_t seed, int threads = 1);

struct ChiSquaredGate {
  double statistic = 0.0;
  int dof = 0;
  double critical_999 = 0.0;  // 99.9% quantile of chi-squared(dof)
  bool pass = true;
};

/// Pearson goodness-of-fit of simulated phi counts against the analytic
/// distribution. Adjacent support bins are pooled until each group's
/// expected count reaches 5.
ChiSquaredGate phi_chi_squared(const PhiSimulation& simulation,
                               const PhiDistribution& distribution);

}  // namespace allocrate

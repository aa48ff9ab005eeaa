#include "allocrate/monte_carlo.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "allocrate/analytic_rates.hpp"

namespace allocrate {

namespace {

constexpr long long kBlockTrials = 8192;

// splitmix64 finalizer over (seed, block index); every block owns an
// independent, reproducible stream.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (block + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class UnitSampler {
 public:
  explicit UnitSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1); used for index and coin draws.
  double next_co() { return double(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1]; safe under log().
  double next_oc() { return 1.0 - next_co(); }
  // Uniform integer in [0, bound).
  int next_index(int bound) { return int(next_co() * double(bound)); }

 private:
  std::mt19937_64 engine_;
};

double exponential_draw(UnitSampler& rng, double rate) {
  return -std::log(rng.next_oc()) / rate;
}

double node_time(UnitSampler& rng, const ServiceModel& service, int alpha) {
  if (const auto* scaled = std::get_if<ScaledExponential>(&service)) {
    return exponential_draw(rng, double(alpha) * scaled->rate);
  }
  const auto& shifted = std::get<ShiftedExponential>(service);
  return shifted.shift / double(alpha) + exponential_draw(rng, shifted.rate);
}

// Runs `fn(rng, trial_count)` once per block and returns the per-block
// results in block order. Blocks are distributed over `threads` workers;
// the result sequence depends only on (trials, seed).
template <typename Result, typename Fn>
std::vector<Result> run_blocks(long long trials, std::uint64_t seed, int threads, Fn fn) {
  const long long blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<Result> results(std::size_t(blocks));
  std::atomic<long long> cursor{0};
  auto worker = [&] {
    for (;;) {
      const long long block = cursor.fetch_add(1, std::memory_order_relaxed);
      if (block >= blocks) return;
      const long long begin = block * kBlockTrials;
      const long long count = std::min(kBlockTrials, trials - begin);
      UnitSampler rng(block_seed(seed, std::uint64_t(block)));
      results[std::size_t(block)] = fn(rng, count);
    }
  };
  if (threads < 1) threads = int(std::thread::hardware_concurrency());
  if (threads <= 1 || blocks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int workers = int(std::min<long long>(threads, blocks));
    pool.reserve(std::size_t(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

struct MomentBlock {
  double sum = 0.0;
  double sum_sq = 0.0;
};

double sample_std_error(double sum, double sum_sq, long long count) {
  if (count < 2) return 0.0;
  const double mean = sum / double(count);
  double variance = (sum_sq - sum * mean) / double(count - 1);
  if (variance < 0.0) variance = 0.0;
  return std::sqrt(variance / double(count));
}

// One access draw; returns phi. The fixed-size branch partially
// Fisher-Yates-shuffles `scratch` (any starting permutation yields a
// uniform r-subset, so the array is not reset between trials).
int draw_phi(UnitSampler& rng, const SystemConfig& config, const AccessModel& access,
             std::vector<int>& scratch) {
  const int data = config.data_nodes();
  if (const auto* fixed = std::get_if<FixedSizeAccess>(&access)) {
    const int n = config.nodes;
    int phi = 0;
    for (int i = 0; i < fixed->subset_size; ++i) {
      const int j = i + rng.next_index(n - i);
      std::swap(scratch[std::size_t(i)], scratch[std::size_t(j)]);
      if (scratch[std::size_t(i)] < data) ++phi;
    }
    return phi;
  }
  const double p = std::get<ProbabilisticAccess>(access).failure_prob;
  int phi = 0;
  for (int i = 0; i < data; ++i) {
    if (rng.next_co() >= p) ++phi;
  }
  return phi;
}

}  // namespace

SimulationEstimate simulate_download_time(const ServiceModel& service, int alpha, int phi,
                                          long long trials, std::uint64_t seed,
                                          int threads) {
  if (alpha < 1 || phi < alpha) {
    throw std::domain_error("simulate_download_time: requires 1 <= alpha <= phi");
  }
  if (trials < 1) throw std::domain_error("simulate_download_time: trials must be >= 1");
  {
    auto violations = validate(service);
    if (!violations.empty()) throw InvalidConfiguration(std::move(violations));
  }

  const auto blocks = run_blocks<MomentBlock>(
      trials, seed, threads, [&](UnitSampler& rng, long long count) {
        MomentBlock block;
        std::vector<double> times(std::size_t(phi));
        for (long long t = 0; t < count; ++t) {
          for (auto& value : times) value = node_time(rng, service, alpha);
          std::nth_element(times.begin(), times.begin() + (alpha - 1), times.end());
          const double stat = times[std::size_t(alpha - 1)];
          block.sum += stat;
          block.sum_sq += stat * stat;
        }
        return block;
      });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& block : blocks) {
    sum += block.sum;
    sum_sq += block.sum_sq;
  }

  SimulationEstimate estimate;
  estimate.mean = sum / double(trials);
  estimate.std_error = sample_std_error(sum, sum_sq, trials);
  estimate.trials = trials;
  estimate.seed = seed;
  estimate.per_phi_counts[phi] = trials;
  return estimate;
}

PhiSimulation simulate_phi(const SystemConfig& config, const AccessModel& access,
                           long long trials, std::uint64_t seed, int threads) {
  require_valid(config, access);
  if (trials < 1) throw std::domain_error("simulate_phi: trials must be >= 1");
  const int data = config.data_nodes();

  struct CountBlock {
    std::vector<long long> counts;
  };
  const auto blocks = run_blocks<CountBlock>(
      trials, seed, threads, [&](UnitSampler& rng, long long count) {
        CountBlock block;
        block.counts.assign(std::size_t(data) + 1, 0);
        std::vector<int> scratch(std::size_t(config.nodes));
        std::iota(scratch.begin(), scratch.end(), 0);
        for (long long t = 0; t < count; ++t) {
          ++block.counts[std::size_t(draw_phi(rng, config, access, scratch))];
        }
        return block;
      });

  std::vector<long long> counts(std::size_t(data) + 1, 0);
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += block.counts[i];
  }

  const PhiDistribution dist = phi_distribution(config, access);
  PhiSimulation sim;
  sim.trials = trials;
  sim.seed = seed;
  for (int phi = dist.support_min; phi <= dist.support_max; ++phi) {
    sim.counts[phi] = counts[std::size_t(phi)];
    sim.pmf[phi] = double(counts[std::size_t(phi)]) / double(trials);
  }
  return sim;
}

DssSimulation simulate_dss(const SystemConfig& config, const AccessModel& access,
                           const ServiceModel& service, long long trials,
                           std::uint64_t seed, int threads) {
  require_valid(config, access, service);
  if (trials < 1) throw std::domain_error("simulate_dss: trials must be >= 1");
  const int data = config.data_nodes();
  const int alpha = config.spreading;

  struct DssBlock {
    std::vector<long long> counts;
    std::vector<double> time_sum;
    std::vector<double> time_sum_sq;
  };
  const auto blocks = run_blocks<DssBlock>(
      trials, seed, threads, [&](UnitSampler& rng, long long count) {
        DssBlock block;
        block.counts.assign(std::size_t(data) + 1, 0);
        block.time_sum.assign(std::size_t(data) + 1, 0.0);
        block.time_sum_sq.assign(std::size_t(data) + 1, 0.0);
        std::vector<int> scratch(std::size_t(config.nodes));
        std::iota(scratch.begin(), scratch.end(), 0);
        std::vector<double> times;
        times.reserve(std::size_t(data));
        for (long long t = 0; t < count; ++t) {
          const int phi = draw_phi(rng, config, access, scratch);
          ++block.counts[std::size_t(phi)];
          if (phi < alpha) continue;  // failed recovery serves nothing
          times.resize(std::size_t(phi));
          for (auto& value : times) value = node_time(rng, service, alpha);
          std::nth_element(times.begin(), times.begin() + (alpha - 1), times.end());
          const double stat = times[std::size_t(alpha - 1)];
          block.time_sum[std::size_t(phi)] += stat;
          block.time_sum_sq[std::size_t(phi)] += stat * stat;
        }
        return block;
      });

  std::vector<long long> counts(std::size_t(data) + 1, 0);
  std::vector<double> time_sum(std::size_t(data) + 1, 0.0);
  std::vector<double> time_sum_sq(std::size_t(data) + 1, 0.0);
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i] += block.counts[i];
      time_sum[i] += block.time_sum[i];
      time_sum_sq[i] += block.time_sum_sq[i];
    }
  }

  DssSimulation result;
  std::map<int, long long> all_counts;
  long long recovered = 0;
  for (int phi = 0; phi <= data; ++phi) {
    const long long c = counts[std::size_t(phi)];
    all_counts[phi] = c;
    if (phi >= alpha) recovered += c;
  }

  const double p_hat = double(recovered) / double(trials);
  result.recovery.mean = p_hat;
  result.recovery.std_error = std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / double(trials));
  result.recovery.trials = trials;
  result.recovery.seed = seed;
  result.recovery.per_phi_counts = all_counts;

  double mu_hat = 0.0;
  double mu_variance = 0.0;
  for (int phi = alpha; phi <= data; ++phi) {
    const long long c = counts[std::size_t(phi)];
    StratumStats stats;
    stats.count = c;
    if (c > 0) {
      stats.mean_time = time_sum[std::size_t(phi)] / double(c);
      stats.time_std_error = sample_std_error(time_sum[std::size_t(phi)],
                                              time_sum_sq[std::size_t(phi)], c);
      const double stratum_p = double(c) / double(trials);
      const double rate = 1.0 / stats.mean_time;
      mu_hat += stratum_p * rate;
      // Delta method: d(mu)/dp = rate, d(mu)/dT = -p * rate^2.
      const double p_var = stratum_p * (1.0 - stratum_p) / double(trials);
      const double t_var = stats.time_std_error * stats.time_std_error;
      mu_variance += rate * rate * p_var +
                     stratum_p * stratum_p * rate * rate * rate * rate * t_var;
    }
    result.strata[phi] = stats;
  }

  result.service_rate.mean = mu_hat;
  result.service_rate.std_error = std::sqrt(mu_variance);
  result.service_rate.trials = trials;
  result.service_rate.seed = seed;
  result.service_rate.per_phi_counts = all_counts;

  const PhiDistribution dist = phi_distribution(config, access);
  for (int phi = alpha; phi <= dist.support_max; ++phi) {
    if (dist.mass(phi) > 10.0 / double(trials) && counts[std::size_t(phi)] < 30) {
      result.undersampled.push_back(phi);
    }
  }
  return result;
}

ChiSquaredGate phi_chi_squared(const PhiSimulation& simulation,
                               const PhiDistribution& distribution) {
  // Pool adjacent bins until each group expects at least 5 observations.
  constexpr double kMinExpected = 5.0;
  const double trials = double(simulation.trials);
  std::vector<std::pair<double, double>> groups;  // (observed, expected)
  double observed = 0.0;
  double expected = 0.0;
  for (int phi = distribution.support_min; phi <= distribution.support_max; ++phi) {
    expected += distribution.mass(phi) * trials;
    const auto it = simulation.counts.find(phi);
    observed += it == simulation.counts.end() ? 0.0 : double(it->second);
    if (expected >= kMinExpected) {
      groups.emplace_back(observed, expected);
      observed = 0.0;
      expected = 0.0;
    }
  }
  if (expected > 0.0 || observed > 0.0) {
    if (groups.empty()) {
      groups.emplace_back(observed, expected);
    } else {
      groups.back().first += observed;
      groups.back().second += expected;
    }
  }

  ChiSquaredGate gate;
  gate.dof = int(groups.size()) - 1;
  if (gate.dof < 1) return gate;  // point mass; nothing to test
  for (const auto& [obs, exp] : groups) {
    const double diff = obs - exp;
    gate.statistic += diff * diff / exp;
  }
  const boost::math::chi_squared_distribution<double> chi(double(gate.dof));
  gate.critical_999 = boost::math::quantile(chi, 0.999);
  gate.pass = gate.statistic <= gate.critical_999;
  return gate;
}

}  // namespace allocrate

#include "allocrate/model.hpp"

#include <algorithm>
#include <sstream>

#include "allocrate/combinatorics.hpp"

namespace allocrate {

double PhiDistribution::mass(int phi) const {
  const auto it = pmf.find(phi);
  return it == pmf.end() ? 0.0 : it->second;
}

double PhiDistribution::mean() const {
  double total = 0.0;
  for (const auto& [phi, prob] : pmf) total += double(phi) * prob;
  return total;
}

const char* code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::NodesNotPositive: return "n_not_positive";
    case ViolationCode::RedundancyNotPositive: return "m_not_positive";
    case ViolationCode::SpreadingNotPositive: return "alpha_not_positive";
    case ViolationCode::DataNodesExceedTotal: return "alpha_m_exceeds_n";
    case ViolationCode::SubsetSizeOutOfRange: return "r_out_of_range";
    case ViolationCode::SpreadingExceedsSubset: return "alpha_exceeds_r";
    case ViolationCode::FailureProbOutOfRange: return "p_out_of_range";
    case ViolationCode::BlocksNotPositive: return "k_not_positive";
    case ViolationCode::BlocksNotDivisible: return "k_not_divisible_by_alpha";
    case ViolationCode::ServiceRateNotPositive: return "mu_not_positive";
    case ViolationCode::ShiftNegative: return "delta_negative";
  }
  return "unknown";
}

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid configuration:";
  for (const auto& v : violations) out << " [" << code_name(v.code) << "] " << v.message << ";";
  return out.str();
}

void add(std::vector<Violation>& out, ViolationCode code, std::string message) {
  out.push_back({code, std::move(message)});
}

}  // namespace

InvalidConfiguration::InvalidConfiguration(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const SystemConfig& config, const AccessModel& access) {
  std::vector<Violation> out;
  if (config.nodes < 1) {
    add(out, ViolationCode::NodesNotPositive, "N must be a positive integer");
  }
  if (config.redundancy < 1) {
    add(out, ViolationCode::RedundancyNotPositive, "m must be a positive integer");
  }
  if (config.spreading < 1) {
    add(out, ViolationCode::SpreadingNotPositive, "alpha must be a positive integer");
  }
  if (config.redundancy >= 1 && config.spreading >= 1 &&
      config.data_nodes() > config.nodes) {
    std::ostringstream msg;
    msg << "alpha*m exceeds N (alpha=" << config.spreading << ", m=" << config.redundancy
        << ", N=" << config.nodes << ")";
    add(out, ViolationCode::DataNodesExceedTotal, msg.str());
  }
  if (const auto* fixed = std::get_if<FixedSizeAccess>(&access)) {
    if (fixed->subset_size < 1 || fixed->subset_size > config.nodes) {
      std::ostringstream msg;
      msg << "r must lie in [1, N] (r=" << fixed->subset_size << ", N=" << config.nodes << ")";
      add(out, ViolationCode::SubsetSizeOutOfRange, msg.str());
    }
    if (config.spreading > fixed->subset_size) {
      std::ostringstream msg;
      msg << "alpha exceeds r (alpha=" << config.spreading << ", r=" << fixed->subset_size
          << "); recovery is impossible";
      add(out, ViolationCode::SpreadingExceedsSubset, msg.str());
    }
  } else {
    const auto& prob = std::get<ProbabilisticAccess>(access);
    if (!(prob.failure_prob >= 0.0 && prob.failure_prob <= 1.0)) {
      std::ostringstream msg;
      msg << "p must lie in [0, 1] (p=" << prob.failure_prob << ")";
      add(out, ViolationCode::FailureProbOutOfRange, msg.str());
    }
  }
  if (config.file_blocks) {
    if (*config.file_blocks < 1) {
      add(out, ViolationCode::BlocksNotPositive, "k must be a positive integer");
    } else if (config.spreading >= 1 && *config.file_blocks % config.spreading != 0) {
      std::ostringstream msg;
      msg << "alpha must divide k (alpha=" << config.spreading << ", k=" << *config.file_blocks
          << ")";
      add(out, ViolationCode::BlocksNotDivisible, msg.str());
    }
  }
  return out;
}

std::vector<Violation> validate(const ServiceModel& service) {
  std::vector<Violation> out;
  if (const auto* scaled = std::get_if<ScaledExponential>(&service)) {
    if (!(scaled->rate > 0.0)) {
      add(out, ViolationCode::ServiceRateNotPositive, "mu must be positive");
    }
  } else {
    const auto& shifted = std::get<ShiftedExponential>(service);
    if (!(shifted.rate > 0.0)) {
      add(out, ViolationCode::ServiceRateNotPositive, "mu must be positive");
    }
    if (!(shifted.shift >= 0.0)) {
      add(out, ViolationCode::ShiftNegative, "delta must be nonnegative");
    }
  }
  return out;
}

void require_valid(const SystemConfig& config, const AccessModel& access) {
  auto violations = validate(config, access);
  if (!violations.empty()) throw InvalidConfiguration(std::move(violations));
}

void require_valid(const SystemConfig& config, const AccessModel& access,
                   const ServiceModel& service) {
  auto violations = validate(config, access);
  auto service_violations = validate(service);
  violations.insert(violations.end(), service_violations.begin(), service_violations.end());
  if (!violations.empty()) throw InvalidConfiguration(std::move(violations));
}

PhiDistribution phi_distribution(const SystemConfig& config, const AccessModel& access) {
  require_valid(config, access);
  const int data = config.data_nodes();
  PhiDistribution dist;
  if (const auto* fixed = std::get_if<FixedSizeAccess>(&access)) {
    const int r = fixed->subset_size;
    dist.support_min = std::max(0, r - (config.nodes - data));
    dist.support_max = std::min(r, data);
    for (int phi = dist.support_min; phi <= dist.support_max; ++phi) {
      dist.pmf[phi] = hypergeometric_pmf(config.nodes, data, r, phi);
    }
  } else {
    const auto& prob = std::get<ProbabilisticAccess>(access);
    dist.support_min = 0;
    dist.support_max = data;
    for (int phi = 0; phi <= data; ++phi) {
      dist.pmf[phi] = binomial_pmf(data, phi, 1.0 - prob.failure_prob);
    }
  }
  return dist;
}

}  // namespace allocrate

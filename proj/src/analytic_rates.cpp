#include "allocrate/analytic_rates.hpp"

#include <algorithm>
#include <stdexcept>

#include "allocrate/combinatorics.hpp"

namespace allocrate {

namespace {

// Linear-space terms this small cannot influence any reported figure.
constexpr double kTermFloor = 1e-300;

void require_service(const ServiceModel& service) {
  auto violations = validate(service);
  if (!violations.empty()) throw InvalidConfiguration(std::move(violations));
}

}  // namespace

double expected_download_time(const ServiceModel& service, int alpha, int phi) {
  if (alpha < 1 || phi < alpha) {
    throw std::domain_error("expected_download_time: requires 1 <= alpha <= phi");
  }
  require_service(service);
  const double window = harmonic_window(phi, alpha);
  if (const auto* scaled = std::get_if<ScaledExponential>(&service)) {
    return window / (double(alpha) * scaled->rate);
  }
  const auto& shifted = std::get<ShiftedExponential>(service);
  return shifted.shift / double(alpha) + window / shifted.rate;
}

double set_service_rate(const ServiceModel& service, int alpha, int phi) {
  return 1.0 / expected_download_time(service, alpha, phi);
}

double recovery_probability(const SystemConfig& config, const AccessModel& access) {
  const PhiDistribution dist = phi_distribution(config, access);
  double total = 0.0;
  for (int phi = config.spreading; phi <= dist.support_max; ++phi) {
    total += dist.mass(phi);
  }
  return std::min(total, 1.0);
}

RateReport dss_service_rate(const SystemConfig& config, const AccessModel& access,
                            const ServiceModel& service) {
  require_valid(config, access, service);
  const PhiDistribution dist = phi_distribution(config, access);
  RateReport report;
  for (int phi = config.spreading; phi <= dist.support_max; ++phi) {
    double probability = dist.mass(phi);
    if (probability < kTermFloor) probability = 0.0;
    const double rate = set_service_rate(service, config.spreading, phi);
    report.per_phi.push_back({phi, probability, rate});
    report.mu_s += probability * rate;
    report.p_s += probability;
  }
  report.p_s = std::min(report.p_s, 1.0);
  return report;
}

}  // namespace allocrate

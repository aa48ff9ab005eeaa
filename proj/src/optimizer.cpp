#include "allocrate/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "allocrate/analytic_rates.hpp"

namespace allocrate {

int feasible_alpha_max(int nodes, int redundancy, const AccessModel& access) {
  if (nodes < 1 || redundancy < 1) return 0;
  int cap = nodes / redundancy;
  if (const auto* fixed = std::get_if<FixedSizeAccess>(&access)) {
    cap = std::min(cap, fixed->subset_size);
  }
  return cap;
}

SweepTable sweep_alpha(int nodes, int redundancy, const AccessModel& access,
                       const ServiceModel& service) {
  const int cap = feasible_alpha_max(nodes, redundancy, access);
  if (cap < 1) {
    std::vector<Violation> violations;
    violations.push_back({ViolationCode::DataNodesExceedTotal,
                          "no feasible alpha: even alpha=1 violates the constraints"});
    throw InvalidConfiguration(std::move(violations));
  }
  SweepTable table;
  table.alpha_min = 1;
  table.alpha_max = cap;
  table.rows.reserve(std::size_t(cap));
  for (int alpha = 1; alpha <= cap; ++alpha) {
    const SystemConfig config{nodes, redundancy, alpha, std::nullopt};
    const RateReport report = dss_service_rate(config, access, service);
    table.rows.push_back({alpha, report.mu_s, report.p_s});
  }
  return table;
}

OptimumReport optimal_alpha(const SweepTable& sweep) {
  if (sweep.rows.empty()) throw std::domain_error("optimal_alpha: empty sweep");
  OptimumReport report;
  const SweepRow* best_rate = &sweep.rows.front();
  const SweepRow* best_recovery = &sweep.rows.front();
  for (const auto& row : sweep.rows) {
    if (row.mu_s > best_rate->mu_s) best_rate = &row;
    if (row.p_s > best_recovery->p_s) best_recovery = &row;
  }
  report.alpha_star_rate = best_rate->alpha;
  report.alpha_star_recovery = best_recovery->alpha;
  for (const auto& row : sweep.rows) {
    if (row.alpha != best_rate->alpha && row.mu_s == best_rate->mu_s) report.rate_tie = true;
    if (row.alpha != best_recovery->alpha && row.p_s == best_recovery->p_s) {
      report.recovery_tie = true;
    }
  }
  return report;
}

MonotonicityReport monotonicity_check(const ServiceModel& service, int redundancy,
                                      int alpha_max) {
  if (redundancy < 1) throw std::domain_error("monotonicity_check: requires m >= 1");
  if (alpha_max < 2) throw std::domain_error("monotonicity_check: requires alpha_max >= 2");
  MonotonicityReport report;
  report.rows.reserve(std::size_t(alpha_max));
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    MonotonicityRow row;
    row.alpha = alpha;
    row.completion_time = expected_download_time(service, alpha, alpha * redundancy);
    report.rows.push_back(row);
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const double current = report.rows[i].completion_time;
    const double next = report.rows[i + 1].completion_time;
    report.rows[i].versus_next = current > next ? 1 : (current == next ? 0 : -1);
    if (!(current > next)) report.strictly_decreasing = false;
  }
  report.asserted = std::holds_alternative<ScaledExponential>(service);
  return report;
}

std::vector<SweepRow> tradeoff_frontier(const SweepTable& sweep) {
  if (sweep.rows.empty()) throw std::domain_error("tradeoff_frontier: empty sweep");
  std::vector<SweepRow> frontier;
  for (const auto& row : sweep.rows) {
    bool dominated = false;
    for (const auto& other : sweep.rows) {
      if (other.mu_s >= row.mu_s && other.p_s >= row.p_s &&
          (other.mu_s > row.mu_s || other.p_s > row.p_s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) frontier.push_back(row);
  }
  return frontier;
}

}  // namespace allocrate

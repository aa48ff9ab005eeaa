// Sweeps the spreading parameter alpha, locates rate- and recovery-optimal
// allocations, and checks the completion-time monotonicity claims that
// explain why the optimum moves.
#pragma once

#include <optional>
#include <vector>

#include "allocrate/model.hpp"

namespace allocrate {

struct SweepRow {
  int alpha = 0;
  double mu_s = 0.0;
  double p_s = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // one per feasible alpha, ascending
  int alpha_min = 1;
  int alpha_max = 0;
};

/// Largest feasible alpha: min(floor(N/m), r) for fixed-size access,
/// floor(N/m) for probabilistic access.
int feasible_alpha_max(int nodes, int redundancy, const AccessModel& access);

/// Evaluates mu_s and p_s at every feasible alpha.
SweepTable sweep_alpha(int nodes, int redundancy, const AccessModel& access,
                       const ServiceModel& service);

struct OptimumReport {
  int alpha_star_rate = 0;      // argmax mu_s, smallest alpha on ties
  int alpha_star_recovery = 0;  // argmax p_s, smallest alpha on ties
  bool rate_tie = false;
  bool recovery_tie = false;
};

OptimumReport optimal_alpha(const SweepTable& sweep);

struct MonotonicityRow {
  int alpha = 0;
  double completion_time = 0.0;  // T_s(alpha | alpha*m), the full-access download time
  // completion_time vs the next row: +1 decreasing, 0 equal, -1 increasing.
  std::optional<int> versus_next;
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  bool strictly_decreasing = false;
  // Scaled service: the decrease is a proven claim the caller may assert.
  // Shifted service: informational only; the direction depends on mu*delta.
  bool asserted = false;
};

/// Compares T_s(alpha | alpha*m) across alpha = 1..alpha_max.
MonotonicityReport monotonicity_check(const ServiceModel& service, int redundancy,
                                      int alpha_max);

/// Rows not dominated in (mu_s, p_s) simultaneously, ascending in alpha.
std::vector<SweepRow> tradeoff_frontier(const SweepTable& sweep);

}  // namespace allocrate

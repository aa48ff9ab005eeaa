// Explicit threshold regions of r (fixed-size access) and p (probabilistic
// access) where an alpha-spreading allocation is provably worse or better
// than minimal spreading, plus a numerical verifier for those regions.
#pragma once

#include <vector>

#include "allocrate/model.hpp"

namespace allocrate {

enum class RegionVariable {
  SubsetSize,   // regions over r, domain [alpha, N]
  FailureProb,  // regions over p, domain [0, 1]
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_lo = false;
  bool closed_hi = false;
  bool exists = false;  // false exactly when empty within the domain

  bool contains(double x) const;
};

/// Integer points of an interval over r; empty when lo_int > hi_int.
struct IntegerSpan {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
};

IntegerSpan integer_points(const Interval& interval);

struct RegionReport {
  int alpha = 0;
  RegionVariable variable = RegionVariable::SubsetSize;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  // Raw threshold values before clamping to the domain. For r-regions the
  // worse region is [alpha, worse_threshold) and the better region is
  // (better_threshold, N]; for p-regions the worse region is
  // (worse_threshold, 1] and the better region is [0, better_threshold).
  double worse_threshold = 0.0;
  double better_threshold = 0.0;
  Interval worse;   // mu_s(alpha) < mu_s(1)
  Interval better;  // mu_s(alpha) > mu_s(1)
  Interval gap;     // undetermined points between the two regions
};

/// Fixed-size access, scaled exponential service.
///   worse:  r < 1 + (N-1) / (alpha C(alpha m - 1, alpha - 1))^(1/(alpha-1))
///   better: r > (m / (alpha m - alpha + 1))^(1/(alpha-1)) (N - alpha + 1) + alpha - 1
RegionReport fixed_scaled_regions(int nodes, int redundancy, double mu, int alpha);

/// Probabilistic access, scaled exponential service.
///   worse:  p > 1 - (1 / (alpha C(alpha m - 1, alpha - 1)))^(1/(alpha-1))
///   better: p < 1 - (m / (alpha m - alpha + 1))^(1/(alpha-1))
RegionReport prob_scaled_regions(int redundancy, double mu, int alpha);

/// Fixed-size access, shifted exponential service.
RegionReport fixed_shifted_regions(int nodes, int redundancy, double mu, double delta,
                                   int alpha);

/// Probabilistic access, shifted exponential service.
RegionReport prob_shifted_regions(int redundancy, double mu, double delta, int alpha);

struct RegionCounterexample {
  double point;        // the r or p value
  double mu_alpha;     // mu_s(alpha)
  double mu_baseline;  // mu_s(1)
  bool in_worse;       // which region the point came from
};

struct VerificationRecord {
  int points_checked = 0;
  std::vector<RegionCounterexample> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

/// Recomputes mu_s(alpha) and mu_s(1) at every integer r (or grid point p,
/// default step 0.01) inside each region and reports any point where the
/// region's inequality fails. Points where both allocations yield zero rate
/// (nothing can be served under either) are counted but carry no comparison.
VerificationRecord verify_region(const RegionReport& report, int nodes, int redundancy,
                                 const ServiceModel& service, double p_grid_step = 0.01);

}  // namespace allocrate

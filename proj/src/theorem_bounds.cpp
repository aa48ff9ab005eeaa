#include "allocrate/theorem_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "allocrate/analytic_rates.hpp"
#include "allocrate/combinatorics.hpp"

namespace allocrate {

bool Interval::contains(double x) const {
  if (!exists) return false;
  const bool above = closed_lo ? x >= lo : x > lo;
  const bool below = closed_hi ? x <= hi : x < hi;
  return above && below;
}

IntegerSpan integer_points(const Interval& interval) {
  if (!interval.exists) return {};
  long lo = long(std::ceil(interval.lo));
  if (!interval.closed_lo && double(lo) == interval.lo) ++lo;
  long hi = long(std::floor(interval.hi));
  if (!interval.closed_hi && double(hi) == interval.hi) --hi;
  if (lo > hi) return {};
  return {lo, hi};
}

namespace {

void require_region_domain(int redundancy, double mu, int alpha) {
  if (alpha < 2) {
    throw std::domain_error(
        "region thresholds require alpha >= 2; mu_s(1) compared with itself is vacuous");
  }
  if (redundancy < 1) throw std::domain_error("region thresholds require m >= 1");
  if (!(mu > 0.0)) throw std::domain_error("region thresholds require mu > 0");
}

// (alpha-1)-th root of exp(log_value).
double root(double log_value, int alpha) {
  return std::exp(log_value / double(alpha - 1));
}

Interval empty_interval() { return {}; }

// gap = the part of the domain between `low_region` and `high_region`,
// where low_region sits at the low end of the domain.
Interval gap_between(const Interval& low_region, const Interval& high_region,
                     double domain_lo, double domain_hi) {
  Interval gap;
  gap.lo = low_region.exists ? low_region.hi : domain_lo;
  gap.closed_lo = low_region.exists ? !low_region.closed_hi : true;
  gap.hi = high_region.exists ? high_region.lo : domain_hi;
  gap.closed_hi = high_region.exists ? !high_region.closed_lo : true;
  gap.exists = gap.lo < gap.hi || (gap.lo == gap.hi && gap.closed_lo && gap.closed_hi);
  if (!gap.exists) return empty_interval();
  return gap;
}

RegionReport subset_report(int alpha, int nodes, double r_low, double r_high) {
  RegionReport report;
  report.alpha = alpha;
  report.variable = RegionVariable::SubsetSize;
  report.domain_lo = double(alpha);
  report.domain_hi = double(nodes);
  report.worse_threshold = r_low;
  report.better_threshold = r_high;
  if (r_low > double(alpha)) {
    report.worse.exists = true;
    report.worse.lo = double(alpha);
    report.worse.closed_lo = true;
    if (r_low > double(nodes)) {
      report.worse.hi = double(nodes);
      report.worse.closed_hi = true;
    } else {
      report.worse.hi = r_low;
      report.worse.closed_hi = false;
    }
  }
  if (r_high < double(nodes)) {
    report.better.exists = true;
    report.better.hi = double(nodes);
    report.better.closed_hi = true;
    if (r_high < double(alpha)) {
      report.better.lo = double(alpha);
      report.better.closed_lo = true;
    } else {
      report.better.lo = r_high;
      report.better.closed_lo = false;
    }
  }
  report.gap = gap_between(report.worse, report.better, report.domain_lo, report.domain_hi);
  return report;
}

RegionReport failure_report(int alpha, double p_worse, double p_better) {
  RegionReport report;
  report.alpha = alpha;
  report.variable = RegionVariable::FailureProb;
  report.domain_lo = 0.0;
  report.domain_hi = 1.0;
  report.worse_threshold = p_worse;
  report.better_threshold = p_better;
  if (p_worse < 1.0) {
    report.worse.exists = true;
    report.worse.hi = 1.0;
    report.worse.closed_hi = true;
    if (p_worse < 0.0) {
      report.worse.lo = 0.0;
      report.worse.closed_lo = true;
    } else {
      report.worse.lo = p_worse;
      report.worse.closed_lo = false;
    }
  }
  if (p_better > 0.0) {
    report.better.exists = true;
    report.better.lo = 0.0;
    report.better.closed_lo = true;
    if (p_better > 1.0) {
      report.better.hi = 1.0;
      report.better.closed_hi = true;
    } else {
      report.better.hi = p_better;
      report.better.closed_hi = false;
    }
  }
  // For p the better region sits at the low end of the domain.
  report.gap = gap_between(report.better, report.worse, report.domain_lo, report.domain_hi);
  return report;
}

}  // namespace

RegionReport fixed_scaled_regions(int nodes, int redundancy, double mu, int alpha) {
  require_region_domain(redundancy, mu, alpha);
  if (alpha * redundancy > nodes) {
    throw std::domain_error("region thresholds require alpha*m <= N");
  }
  const int data = alpha * redundancy;
  const double log_worse = std::log(double(alpha)) + log_binomial(data - 1, alpha - 1);
  const double r_low = 1.0 + double(nodes - 1) / root(log_worse, alpha);
  const double log_better =
      std::log(double(redundancy)) - std::log(double(data - alpha + 1));
  const double r_high =
      root(log_better, alpha) * double(nodes - alpha + 1) + double(alpha - 1);
  return subset_report(alpha, nodes, r_low, r_high);
}

RegionReport prob_scaled_regions(int redundancy, double mu, int alpha) {
  require_region_domain(redundancy, mu, alpha);
  const int data = alpha * redundancy;
  const double log_worse = -(std::log(double(alpha)) + log_binomial(data - 1, alpha - 1));
  const double p_worse = 1.0 - root(log_worse, alpha);
  const double log_better =
      std::log(double(redundancy)) - std::log(double(data - alpha + 1));
  const double p_better = 1.0 - root(log_better, alpha);
  return failure_report(alpha, p_worse, p_better);
}

RegionReport fixed_shifted_regions(int nodes, int redundancy, double mu, double delta,
                                   int alpha) {
  require_region_domain(redundancy, mu, alpha);
  if (!(delta >= 0.0)) throw std::domain_error("region thresholds require delta >= 0");
  if (alpha * redundancy > nodes) {
    throw std::domain_error("region thresholds require alpha*m <= N");
  }
  const int data = alpha * redundancy;
  const double dm = delta * mu;
  const double log_worse = std::log(dm + double(alpha)) -
                           std::log(double(alpha) * (dm * double(redundancy) + 1.0)) -
                           log_binomial(data - 1, alpha - 1);
  const double r_low = 1.0 + root(log_worse, alpha) * double(nodes - 1);
  const int survivors = data - alpha + 1;  // alpha m - alpha + 1
  const double log_better =
      std::log(double(redundancy) * (dm * double(survivors) + double(alpha) * double(alpha))) -
      std::log(double(alpha) * (dm + 1.0) * double(survivors));
  const double r_high =
      root(log_better, alpha) * double(nodes - alpha + 1) + double(alpha - 1);
  return subset_report(alpha, nodes, r_low, r_high);
}

RegionReport prob_shifted_regions(int redundancy, double mu, double delta, int alpha) {
  require_region_domain(redundancy, mu, alpha);
  if (!(delta >= 0.0)) throw std::domain_error("region thresholds require delta >= 0");
  const int data = alpha * redundancy;
  const double dm = delta * mu;
  const double log_worse = std::log(dm + double(alpha)) -
                           std::log(double(alpha) * (dm * double(redundancy) + 1.0)) -
                           log_binomial(data - 1, alpha - 1);
  const double p_worse = 1.0 - root(log_worse, alpha);
  const int survivors = data - alpha + 1;
  const double log_better =
      std::log(double(redundancy) * (dm * double(survivors) + double(alpha) * double(alpha))) -
      std::log(double(alpha) * (dm + 1.0) * double(survivors));
  const double p_better = 1.0 - root(log_better, alpha);
  return failure_report(alpha, p_worse, p_better);
}

VerificationRecord verify_region(const RegionReport& report, int nodes, int redundancy,
                                 const ServiceModel& service, double p_grid_step) {
  if (!(p_grid_step > 0.0)) throw std::domain_error("verify_region: grid step must be positive");
  VerificationRecord record;
  const SystemConfig spread{nodes, redundancy, report.alpha, std::nullopt};
  const SystemConfig minimal{nodes, redundancy, 1, std::nullopt};

  const auto check = [&](double point, bool in_worse) {
    const AccessModel access =
        report.variable == RegionVariable::SubsetSize
            ? AccessModel{FixedSizeAccess{int(std::llround(point))}}
            : AccessModel{ProbabilisticAccess{point}};
    const double mu_alpha = dss_service_rate(spread, access, service).mu_s;
    const double mu_baseline = dss_service_rate(minimal, access, service).mu_s;
    ++record.points_checked;
    if (mu_alpha == 0.0 && mu_baseline == 0.0) return;  // nothing served either way
    const bool ok = in_worse ? mu_alpha < mu_baseline : mu_alpha > mu_baseline;
    if (!ok) record.counterexamples.push_back({point, mu_alpha, mu_baseline, in_worse});
  };

  const auto sweep_interval = [&](const Interval& interval, bool in_worse) {
    if (!interval.exists) return;
    if (report.variable == RegionVariable::SubsetSize) {
      const IntegerSpan span = integer_points(interval);
      for (long r = span.lo; r <= span.hi; ++r) check(double(r), in_worse);
    } else {
      const long steps = std::lround(1.0 / p_grid_step);
      for (long i = 0; i <= steps; ++i) {
        const double p = double(i) * p_grid_step;
        if (interval.contains(p)) check(p, in_worse);
      }
    }
  };

  sweep_interval(report.worse, true);
  sweep_interval(report.better, false);
  return record;
}

}  // namespace allocrate

#include "allocrate/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace allocrate {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

LogProb LogProb::zero() { return {kNegInf}; }

LogProb LogProb::from_linear(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("LogProb::from_linear: probability outside [0,1]");
  }
  return {std::log(p)};
}

double LogProb::to_linear() const { return std::exp(value); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // The running product equals C(n-k+i, i), so the division is exact.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("log_binomial: requires 0 <= k <= n");
  }
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

namespace {

// Kahan sum of 1/i over i in [lo, hi], iterating from the smallest term.
double reciprocal_sum(std::int64_t lo, std::int64_t hi) {
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t i = hi; i >= lo; --i) {
    const double term = 1.0 / double(i) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

}  // namespace

double harmonic(std::int64_t ell) {
  if (ell < 0) throw std::domain_error("harmonic: ell must be nonnegative");
  if (ell == 0) return 0.0;
  return reciprocal_sum(1, ell);
}

double harmonic_window(std::int64_t phi, std::int64_t alpha) {
  if (alpha < 1 || alpha > phi) {
    throw std::domain_error("harmonic_window: requires 1 <= alpha <= phi");
  }
  return reciprocal_sum(phi - alpha + 1, phi);
}

LogProb log_hypergeometric_pmf(std::int64_t population, std::int64_t marked,
                               std::int64_t draws, std::int64_t hits) {
  if (marked < 0 || marked > population || draws < 0 || draws > population) {
    throw std::domain_error(
        "hypergeometric_pmf: requires 0 <= marked <= population and 0 <= draws <= population");
  }
  const std::int64_t lo = std::max<std::int64_t>(0, draws - (population - marked));
  const std::int64_t hi = std::min(draws, marked);
  if (hits < lo || hits > hi) return LogProb::zero();
  return {log_binomial(marked, hits) + log_binomial(population - marked, draws - hits) -
          log_binomial(population, draws)};
}

double hypergeometric_pmf(std::int64_t population, std::int64_t marked,
                          std::int64_t draws, std::int64_t hits) {
  return log_hypergeometric_pmf(population, marked, draws, hits).to_linear();
}

LogProb log_binomial_pmf(std::int64_t trials, std::int64_t successes, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("binomial_pmf: q outside [0,1]");
  }
  if (trials < 0 || successes < 0 || successes > trials) {
    throw std::domain_error("binomial_pmf: requires 0 <= successes <= trials");
  }
  if (q == 0.0) return successes == 0 ? LogProb::one() : LogProb::zero();
  if (q == 1.0) return successes == trials ? LogProb::one() : LogProb::zero();
  return {log_binomial(trials, successes) + double(successes) * std::log(q) +
          double(trials - successes) * std::log1p(-q)};
}

double binomial_pmf(std::int64_t trials, std::int64_t successes, double q) {
  return log_binomial_pmf(trials, successes, q).to_linear();
}

}  // namespace allocrate

// Exact and log-space combinatorial primitives: binomial coefficients,
// harmonic sums, and the hypergeometric/binomial pmfs everything else
// is built from.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace allocrate {

using BigInt = boost::multiprecision::cpp_int;

/// A probability on the natural-log scale; value = -inf encodes exact zero.
struct LogProb {
  double value;

  static LogProb zero();
  static LogProb one() { return {0.0}; }
  static LogProb from_linear(double p);
  double to_linear() const;
};

/// C(n, k), exact. Returns 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// ln C(n, k). Requires 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

/// H_ell = sum_{i=1..ell} 1/i, with H_0 = 0. Accumulated smallest term
/// first with compensated summation.
double harmonic(std::int64_t ell);

/// sum_{i=phi-alpha+1..phi} 1/i, i.e. H_phi - H_{phi-alpha}, summed over
/// the window itself. Requires 1 <= alpha <= phi.
double harmonic_window(std::int64_t phi, std::int64_t alpha);

/// P[hits marked among draws] when drawing `draws` nodes uniformly without
/// replacement from `population` nodes of which `marked` are marked.
/// Zero outside the support. Requires 0 <= marked <= population and
/// 0 <= draws <= population.
double hypergeometric_pmf(std::int64_t population, std::int64_t marked,
                          std::int64_t draws, std::int64_t hits);
LogProb log_hypergeometric_pmf(std::int64_t population, std::int64_t marked,
                               std::int64_t draws, std::int64_t hits);

/// P[successes] over `trials` independent Bernoulli(q) trials, with the
/// 0^0 = 1 convention at q in {0, 1}. Requires 0 <= successes <= trials
/// and q in [0, 1].
double binomial_pmf(std::int64_t trials, std::int64_t successes, double q);
LogProb log_binomial_pmf(std::int64_t trials, std::int64_t successes, double q);

}  // namespace allocrate

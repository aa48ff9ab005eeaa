// System parameter types (allocation, access discipline, node service law)
// and the distribution of phi, the number of accessed data-bearing nodes.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace allocrate {

/// A quasi-symmetric allocation: alpha * redundancy nodes each store an
/// equal share of the file, the remaining nodes store nothing.
struct SystemConfig {
  int nodes = 0;       // N, total storage nodes
  int redundancy = 0;  // m, storage budget multiplier (m*k coded blocks)
  int spreading = 0;   // alpha; recovery needs any alpha data-bearing nodes
  std::optional<int> file_blocks;  // k, metadata only; alpha must divide it

  int data_nodes() const { return spreading * redundancy; }
};

/// Request goes to a uniformly random subset of `subset_size` nodes.
struct FixedSizeAccess {
  int subset_size = 0;  // r in [1, N]
};

/// Request goes to every data-bearing node; each fails independently.
struct ProbabilisticAccess {
  double failure_prob = 0.0;  // p in [0, 1]
};

using AccessModel = std::variant<FixedSizeAccess, ProbabilisticAccess>;

/// A node holding a 1/alpha share serves in Exp(alpha * rate) time.
struct ScaledExponential {
  double rate = 1.0;  // mu > 0
};

/// A node holding a 1/alpha share serves in shift/alpha + Exp(rate) time.
struct ShiftedExponential {
  double rate = 1.0;  // mu > 0
  double shift = 0.0;  // delta >= 0, time units
};

using ServiceModel = std::variant<ScaledExponential, ShiftedExponential>;

/// Distribution of phi, the number of accessed nodes that hold data.
struct PhiDistribution {
  int support_min = 0;
  int support_max = 0;
  std::map<int, double> pmf;

  double mass(int phi) const;
  double mean() const;
};

enum class ViolationCode {
  NodesNotPositive,
  RedundancyNotPositive,
  SpreadingNotPositive,
  DataNodesExceedTotal,    // alpha*m > N, equivalently alpha > N/m
  SubsetSizeOutOfRange,    // r outside [1, N]
  SpreadingExceedsSubset,  // alpha > r
  FailureProbOutOfRange,   // p outside [0, 1]
  BlocksNotPositive,
  BlocksNotDivisible,      // alpha does not divide k
  ServiceRateNotPositive,  // mu <= 0
  ShiftNegative,           // delta < 0
};

/// Stable machine-readable token for a violation code.
const char* code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
};

class InvalidConfiguration : public std::runtime_error {
 public:
  explicit InvalidConfiguration(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Diagnostic check; returns every violated invariant, never throws.
std::vector<Violation> validate(const SystemConfig& config, const AccessModel& access);
std::vector<Violation> validate(const ServiceModel& service);

/// Throwing forms used by the computational entry points.
void require_valid(const SystemConfig& config, const AccessModel& access);
void require_valid(const SystemConfig& config, const AccessModel& access,
                   const ServiceModel& service);

/// Distribution of phi under the given access discipline: hypergeometric
/// for fixed-size access, Binomial(alpha*m, 1-p) for probabilistic access.
PhiDistribution phi_distribution(const SystemConfig& config, const AccessModel& access);

}  // namespace allocrate

#ifndef EDEGEN_MODEL_HPP
#define EDEGEN_MODEL_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "edegen/census.hpp"
#include "edegen/graph.hpp"
#include "edegen/rational.hpp"

namespace edegen {

/// Natural parameter theta = (theta_edges, theta_degen). P(G) is
/// proportional to exp(<theta, t(G)>).
struct ModelParams {
  double theta_edges = 0.0;
  double theta_degen = 0.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Which statistic theta pairs with. The model is defined on the normalized
/// statistic; raw (E, degen) is offered for comparison only.
enum class Scaling { Normalized, Raw };

struct ClassProbability {
  StatPair stat;
  std::uint64_t count = 0;
  /// Probability of the whole class (count graphs together).
  double probability = 0.0;
};

/// psi(theta) = log sum_G exp(<theta, t(G)>), evaluated with a max shift.
double log_partition(const CensusTable& census, ModelParams theta,
                     Scaling scaling = Scaling::Normalized);

/// Class probabilities, in the census's (edges, degen) order.
std::vector<ClassProbability> exact_distribution(const CensusTable& census, ModelParams theta,
                                                 Scaling scaling = Scaling::Normalized);

/// E_theta[t], the gradient of psi.
NormalizedStat mean_stat(const CensusTable& census, ModelParams theta);

/// Cov_theta[t], the Hessian of psi.
struct Covariance {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};
Covariance stat_covariance(const CensusTable& census, ModelParams theta);

struct MleOptions {
  /// Stop when ||E_theta[t] - observed||_inf <= tolerance.
  double tolerance = 1e-8;
  int max_iterations = 200;
};

struct MleResult {
  enum class Status {
    Converged,
    /// Observed statistic is on the boundary of or outside the polytope.
    NoMle,
    /// Hit the iteration cap (or stalled) before reaching the tolerance.
    NotConverged,
  };

  Status status = Status::NoMle;
  ModelParams theta;
  int iterations = 0;
  /// ||E_theta[t] - observed||_inf at the returned theta.
  double residual = 0.0;
};

const char* to_string(MleResult::Status s);

/// Maximizes <theta, observed> - psi(theta) by damped Newton from theta = 0.
/// `observed` is a normalized mean statistic; existence is decided exactly.
MleResult mle_fit(const CensusTable& census, const ExactStat& observed,
                  const MleOptions& options = {});
/// Converts `observed` exactly (binary value) before fitting.
MleResult mle_fit(const CensusTable& census, NormalizedStat observed,
                  const MleOptions& options = {});

/// CSV with header "e,d,count,probability".
void write_distribution_csv(std::ostream& out, const std::vector<ClassProbability>& dist);

}  // namespace edegen

#endif  // EDEGEN_MODEL_HPP

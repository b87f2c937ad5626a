#include "edegen/model.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "edegen/polytope.hpp"

namespace edegen {
namespace {

struct WeightedClass {
  StatPair stat;
  std::uint64_t count;
  double x;
  double y;
  double log_weight;
};

// Unnormalized log weights log(count) + <theta, t>, plus their log-sum-exp.
struct Weights {
  std::vector<WeightedClass> classes;
  double max_log_weight = 0.0;
  double shifted_sum = 0.0;
  double log_z = 0.0;

  double probability(const WeightedClass& c) const {
    return std::exp(c.log_weight - max_log_weight) / shifted_sum;
  }
};

Weights weigh(const CensusTable& census, ModelParams theta, Scaling scaling) {
  Weights w;
  w.classes.reserve(census.counts.size());
  double max_lw = -std::numeric_limits<double>::infinity();
  for (const auto& [stat, count] : census.counts) {
    double x = static_cast<double>(stat.edges);
    double y = static_cast<double>(stat.degen);
    if (scaling == Scaling::Normalized) {
      const NormalizedStat t = normalize(stat, census.n);
      x = t.x;
      y = t.y;
    }
    const double lw = std::log(static_cast<double>(count)) + theta.theta_edges * x +
                      theta.theta_degen * y;
    max_lw = std::max(max_lw, lw);
    w.classes.push_back({stat, count, x, y, lw});
  }
  double sum = 0.0;
  for (const auto& c : w.classes) sum += std::exp(c.log_weight - max_lw);
  w.max_log_weight = max_lw;
  w.shifted_sum = sum;
  w.log_z = max_lw + std::log(sum);
  return w;
}

struct Moments {
  NormalizedStat mean;
  Covariance cov;
};

Moments moments(const CensusTable& census, ModelParams theta) {
  const Weights w = weigh(census, theta, Scaling::Normalized);
  Moments m;
  for (const auto& c : w.classes) {
    const double p = w.probability(c);
    m.mean.x += p * c.x;
    m.mean.y += p * c.y;
  }
  for (const auto& c : w.classes) {
    const double p = w.probability(c);
    const double dx = c.x - m.mean.x;
    const double dy = c.y - m.mean.y;
    m.cov.xx += p * dx * dx;
    m.cov.xy += p * dx * dy;
    m.cov.yy += p * dy * dy;
  }
  return m;
}

double log_likelihood(const CensusTable& census, ModelParams theta, NormalizedStat obs) {
  return theta.theta_edges * obs.x + theta.theta_degen * obs.y - log_partition(census, theta);
}

double residual(NormalizedStat mean, NormalizedStat obs) {
  return std::max(std::abs(mean.x - obs.x), std::abs(mean.y - obs.y));
}

}  // namespace

double log_partition(const CensusTable& census, ModelParams theta, Scaling scaling) {
  return weigh(census, theta, scaling).log_z;
}

std::vector<ClassProbability> exact_distribution(const CensusTable& census, ModelParams theta,
                                                 Scaling scaling) {
  const Weights w = weigh(census, theta, scaling);
  std::vector<ClassProbability> out;
  out.reserve(w.classes.size());
  for (const auto& c : w.classes) out.push_back({c.stat, c.count, w.probability(c)});
  return out;
}

NormalizedStat mean_stat(const CensusTable& census, ModelParams theta) {
  return moments(census, theta).mean;
}

Covariance stat_covariance(const CensusTable& census, ModelParams theta) {
  return moments(census, theta).cov;
}

const char* to_string(MleResult::Status s) {
  switch (s) {
    case MleResult::Status::Converged: return "converged";
    case MleResult::Status::NoMle: return "NoMLE";
    case MleResult::Status::NotConverged: return "not-converged";
  }
  return "?";
}

MleResult mle_fit(const CensusTable& census, const ExactStat& observed, const MleOptions& options) {
  MleResult result;
  if (!mle_exists_normalized(census.n, observed)) {
    result.status = MleResult::Status::NoMle;
    return result;
  }
  const NormalizedStat obs{to_double(observed.x), to_double(observed.y)};

  ModelParams theta;
  Moments m = moments(census, theta);
  double res = residual(m.mean, obs);
  double ll = log_likelihood(census, theta, obs);
  int iter = 0;

  while (res > options.tolerance && iter < options.max_iterations) {
    ++iter;
    const double gx = obs.x - m.mean.x;
    const double gy = obs.y - m.mean.y;
    const double det = m.cov.xx * m.cov.yy - m.cov.xy * m.cov.xy;
    double sx = gx;
    double sy = gy;
    if (det > 0.0 && std::isfinite(det)) {
      sx = (m.cov.yy * gx - m.cov.xy * gy) / det;
      sy = (m.cov.xx * gy - m.cov.xy * gx) / det;
    }

    // Step halving until the log-likelihood increases. Close to the optimum
    // the increase drops below double resolution, so a step that keeps the
    // likelihood level while shrinking the gradient is also taken.
    bool moved = false;
    double scale = 1.0;
    for (int halving = 0; halving < 60; ++halving, scale *= 0.5) {
      const ModelParams trial{theta.theta_edges + scale * sx, theta.theta_degen + scale * sy};
      const double trial_ll = log_likelihood(census, trial, obs);
      if (!std::isfinite(trial_ll)) continue;
      const Moments trial_m = moments(census, trial);
      const double trial_res = residual(trial_m.mean, obs);
      const double slack = 1e-13 * (1.0 + std::abs(ll));
      if (trial_ll > ll || (trial_ll >= ll - slack && trial_res < res)) {
        theta = trial;
        m = trial_m;
        res = trial_res;
        ll = trial_ll;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  result.theta = theta;
  result.iterations = iter;
  result.residual = res;
  result.status =
      res <= options.tolerance ? MleResult::Status::Converged : MleResult::Status::NotConverged;
  return result;
}

MleResult mle_fit(const CensusTable& census, NormalizedStat observed, const MleOptions& options) {
  return mle_fit(census, ExactStat{Rational(observed.x), Rational(observed.y)}, options);
}

void write_distribution_csv(std::ostream& out, const std::vector<ClassProbability>& dist) {
  const auto old_precision = out.precision(17);
  out << "e,d,count,probability\n";
  for (const auto& c : dist) {
    out << c.stat.edges << ',' << c.stat.degen << ',' << c.count << ',' << c.probability << '\n';
  }
  out.precision(old_precision);
}

}  // namespace edegen

#ifndef EDEGEN_SAMPLER_HPP
#define EDEGEN_SAMPLER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "edegen/census.hpp"
#include "edegen/fan.hpp"
#include "edegen/graph.hpp"
#include "edegen/model.hpp"

namespace edegen {

struct ChainConfig {
  std::int64_t n = 0;
  ModelParams theta;
  std::uint64_t burn_in = 1000;
  std::uint64_t samples = 1000;
  std::uint64_t thinning = 1;
  std::uint64_t seed = 0;
};

struct ChainSample {
  /// 1-based index of the Metropolis step that produced this state.
  std::uint64_t step = 0;
  StatPair stats;
  /// Whether that step's proposal was accepted.
  bool accepted = false;
};

/// log of the Metropolis ratio P(to) / P(from) on normalized statistics.
double log_acceptance_ratio(ModelParams theta, std::int64_t n, StatPair from, StatPair to);

/// Metropolis chain on all labeled graphs with n nodes, targeting
/// P_theta(G) ~ exp(<theta, t(G)>). Proposals toggle one node pair chosen
/// uniformly; the proposal is symmetric so only the target ratio enters.
class MetropolisChain {
 public:
  /// Starts from the empty graph. `stream` selects an independent RNG
  /// stream for the same seed.
  MetropolisChain(std::int64_t n, ModelParams theta, std::uint64_t seed, std::uint64_t stream = 0);
  MetropolisChain(Graph initial, ModelParams theta, std::uint64_t seed, std::uint64_t stream = 0);

  /// One proposal. Returns whether it was accepted.
  bool step();

  const Graph& state() const { return graph_; }
  StatPair stats() const { return stats_; }
  std::uint64_t steps_taken() const { return steps_; }
  std::uint64_t accepted_count() const { return accepted_; }

 private:
  Graph graph_;
  ModelParams theta_;
  std::int64_t n_;
  std::vector<Edge> pairs_;
  std::mt19937_64 rng_;
  StatPair stats_;
  std::uint64_t steps_ = 0;
  std::uint64_t accepted_ = 0;
};

/// Burn-in, then `samples` states recorded every `thinning` steps.
/// Throws std::invalid_argument for n < 3 or non-positive counts.
std::vector<ChainSample> run_chain(const ChainConfig& config);

/// Independent chains, chain i on RNG stream i of config.seed, run in
/// parallel.
std::vector<std::vector<ChainSample>> run_chains(const ChainConfig& config, unsigned chains);

/// CSV with header "step,e,d,accepted".
void write_trace_csv(std::ostream& out, std::span<const ChainSample> trace);

/// Empirical class frequencies of a trace.
std::vector<ClassProbability> empirical_distribution(std::span<const ChainSample> trace);

/// sum over classes of |p - q| / 2.
double total_variation(const std::vector<ClassProbability>& p,
                       const std::vector<ClassProbability>& q);

/// beta + r * d.
ModelParams along_ray(ModelParams beta, double r, const Direction& d);

/// Powers of two 1, 2, 4, ..., 256.
std::vector<double> default_r_ladder();

struct ExperimentOptions {
  /// Report the first r whose eta-mass reaches 1 - epsilon.
  double epsilon = 0.01;
  /// Chain settings, used only when n exceeds the exact census range.
  std::uint64_t burn_in = 10000;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  /// Borrowed census for n; built on demand when null and n <= 7.
  const CensusTable* census = nullptr;
};

struct LadderRow {
  double r = 0.0;
  ModelParams theta;
  std::vector<ClassProbability> distribution;
  /// Mass of classes whose normalized statistic is within eta (L-infinity)
  /// of alpha(d).
  double eta_mass = 0.0;
  /// Mass of the maximizing vertex (or edge endpoints) of P_n.
  double target_mass = 0.0;
};

struct ExtremalReport {
  std::int64_t n = 0;
  Direction direction{1, 0};
  ConeClass cone = ConeClass::Boundary;
  ModelParams beta;
  Rational eta;
  ExactStat alpha;
  std::vector<StatPair> targets;
  /// Exact census computation (true) or Metropolis estimate (false).
  bool exact = true;
  std::vector<LadderRow> ladder;
  double epsilon = 0.01;
  std::optional<double> first_r_reaching;
  /// 1 - eta_mass at the largest r.
  double achieved_epsilon = 1.0;
};

/// Concentration of P_{n, beta + r d} near alpha(d) along an r ladder.
/// Throws DomainError for boundary directions, std::invalid_argument for
/// eta outside (0, 1) or a ladder that is empty or not strictly increasing.
ExtremalReport extremal_experiment(std::int64_t n, ModelParams beta, const Direction& d,
                                   const std::vector<double>& r_ladder, const Rational& eta,
                                   const ExperimentOptions& options = {});

struct BetaRow {
  ModelParams beta;
  /// Most probable class at the largest r.
  StatPair modal_class;
  /// Target mass at each ladder value.
  std::vector<double> target_mass;
  std::vector<ClassProbability> final_distribution;
};

struct BetaInvarianceReport {
  std::int64_t n = 0;
  Direction direction{1, 0};
  std::vector<double> ladder;
  std::vector<StatPair> targets;
  std::vector<BetaRow> rows;
  bool same_modal_class = true;
};

/// Tabulates target mass over the ladder {1, 2, 4, ... < r} + {r} (just
/// {0} when r = 0) for each beta. Throws DomainError for boundary directions.
BetaInvarianceReport beta_invariance_check(std::int64_t n, const Direction& d,
                                           const std::vector<ModelParams>& betas, double r,
                                           const ExperimentOptions& options = {});

}  // namespace edegen

#endif  // EDEGEN_SAMPLER_HPP

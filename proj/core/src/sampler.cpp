#include "edegen/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "edegen/errors.hpp"

namespace edegen {
namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

void check_config(const ChainConfig& c) {
  if (c.n < 3) throw std::invalid_argument("chain requires n >= 3");
  if (c.burn_in == 0 || c.samples == 0 || c.thinning == 0) {
    throw std::invalid_argument("burn_in, samples and thinning must be positive");
  }
}

std::vector<ChainSample> run_chain_stream(const ChainConfig& config, std::uint64_t stream) {
  check_config(config);
  MetropolisChain chain(config.n, config.theta, config.seed, stream);
  for (std::uint64_t i = 0; i < config.burn_in; ++i) chain.step();
  std::vector<ChainSample> trace;
  trace.reserve(config.samples);
  for (std::uint64_t s = 0; s < config.samples; ++s) {
    bool accepted = false;
    for (std::uint64_t t = 0; t < config.thinning; ++t) accepted = chain.step();
    trace.push_back({chain.steps_taken(), chain.stats(), accepted});
  }
  return trace;
}

std::vector<ClassProbability> class_distribution(std::int64_t n, ModelParams theta,
                                                 const CensusTable* census,
                                                 const ExperimentOptions& options,
                                                 std::uint64_t stream) {
  if (census != nullptr) return exact_distribution(*census, theta);
  ChainConfig config;
  config.n = n;
  config.theta = theta;
  config.burn_in = options.burn_in;
  config.samples = options.samples;
  config.seed = options.seed;
  const auto trace = run_chain_stream(config, stream);
  return empirical_distribution(trace);
}

// Resolves the census to use: the borrowed one, a freshly built one for
// desk-scale n, or none (chain estimates).
const CensusTable* resolve_census(std::int64_t n, const ExperimentOptions& options,
                                  std::optional<CensusTable>& storage) {
  if (options.census != nullptr) {
    if (options.census->n != n) throw std::invalid_argument("census was built for a different n");
    return options.census;
  }
  if (n <= kCensusDefaultMaxN) {
    storage = build_census(n);
    return &*storage;
  }
  return nullptr;
}

double mass_of(const std::vector<ClassProbability>& dist, const std::vector<StatPair>& classes) {
  double mass = 0.0;
  for (const auto& c : dist) {
    if (std::find(classes.begin(), classes.end(), c.stat) != classes.end()) mass += c.probability;
  }
  return mass;
}

}  // namespace

double log_acceptance_ratio(ModelParams theta, std::int64_t n, StatPair from, StatPair to) {
  const double de = static_cast<double>(to.edges - from.edges) / static_cast<double>(choose2(n));
  const double dd = static_cast<double>(to.degen - from.degen) / static_cast<double>(n - 1);
  return theta.theta_edges * de + theta.theta_degen * dd;
}

MetropolisChain::MetropolisChain(std::int64_t n, ModelParams theta, std::uint64_t seed,
                                 std::uint64_t stream)
    : MetropolisChain(Graph(static_cast<std::size_t>(std::max<std::int64_t>(n, 1))), theta, seed,
                      stream) {}

MetropolisChain::MetropolisChain(Graph initial, ModelParams theta, std::uint64_t seed,
                                 std::uint64_t stream)
    : graph_(std::move(initial)),
      theta_(theta),
      n_(static_cast<std::int64_t>(graph_.order())),
      pairs_(pair_order(n_)),
      rng_(make_rng(seed, stream)),
      stats_(stat_pair(graph_)) {
  if (n_ < 3) throw std::invalid_argument("chain requires n >= 3");
}

bool MetropolisChain::step() {
  ++steps_;
  std::uniform_int_distribution<std::size_t> pick(0, pairs_.size() - 1);
  const auto& [u, v] = pairs_[pick(rng_)];
  const bool added = graph_.toggle_edge(u, v);
  const StatPair proposed{stats_.edges + (added ? 1 : -1), static_cast<std::int64_t>(degeneracy(graph_))};

  const double log_ratio = log_acceptance_ratio(theta_, n_, stats_, proposed);
  bool accept = log_ratio >= 0.0;
  if (!accept) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    accept = unit(rng_) < std::exp(log_ratio);
  }
  if (accept) {
    stats_ = proposed;
    ++accepted_;
  } else {
    graph_.toggle_edge(u, v);
  }
  return accept;
}

std::vector<ChainSample> run_chain(const ChainConfig& config) { return run_chain_stream(config, 0); }

std::vector<std::vector<ChainSample>> run_chains(const ChainConfig& config, unsigned chains) {
  check_config(config);
  std::vector<std::vector<ChainSample>> traces(chains);
  {
    std::vector<std::jthread> threads;
    for (unsigned i = 0; i < chains; ++i) {
      threads.emplace_back([&traces, &config, i] { traces[i] = run_chain_stream(config, i); });
    }
  }
  return traces;
}

void write_trace_csv(std::ostream& out, std::span<const ChainSample> trace) {
  out << "step,e,d,accepted\n";
  for (const auto& s : trace) {
    out << s.step << ',' << s.stats.edges << ',' << s.stats.degen << ',' << (s.accepted ? 1 : 0)
        << '\n';
  }
}

std::vector<ClassProbability> empirical_distribution(std::span<const ChainSample> trace) {
  std::map<StatPair, std::uint64_t> counts;
  for (const auto& s : trace) ++counts[s.stats];
  std::vector<ClassProbability> out;
  out.reserve(counts.size());
  const double total = static_cast<double>(trace.size());
  for (const auto& [stat, c] : counts) out.push_back({stat, c, static_cast<double>(c) / total});
  return out;
}

double total_variation(const std::vector<ClassProbability>& p,
                       const std::vector<ClassProbability>& q) {
  std::map<StatPair, double> diff;
  for (const auto& c : p) diff[c.stat] += c.probability;
  for (const auto& c : q) diff[c.stat] -= c.probability;
  double tv = 0.0;
  for (const auto& [stat, delta] : diff) tv += std::abs(delta);
  return tv / 2.0;
}

ModelParams along_ray(ModelParams beta, double r, const Direction& d) {
  return {beta.theta_edges + r * d.x_double(), beta.theta_degen + r * d.y_double()};
}

std::vector<double> default_r_ladder() {
  std::vector<double> ladder;
  for (double r = 1.0; r <= 256.0; r *= 2.0) ladder.push_back(r);
  return ladder;
}

ExtremalReport extremal_experiment(std::int64_t n, ModelParams beta, const Direction& d,
                                   const std::vector<double>& r_ladder, const Rational& eta,
                                   const ExperimentOptions& options) {
  if (n < 3) throw std::invalid_argument("extremal experiment requires n >= 3");
  const ConeClass cone = classify_direction(d);
  if (cone == ConeClass::Boundary) {
    throw DomainError("boundary directions of the limiting fan are outside the extremal regimes");
  }
  if (eta <= 0 || eta >= 1) throw std::invalid_argument("eta must lie in (0, 1)");
  if (r_ladder.empty()) throw std::invalid_argument("r ladder is empty");
  for (std::size_t i = 1; i < r_ladder.size(); ++i) {
    if (!(r_ladder[i] > r_ladder[i - 1])) {
      throw std::invalid_argument("r ladder must be strictly increasing");
    }
  }

  ExtremalReport report;
  report.n = n;
  report.direction = d;
  report.cone = cone;
  report.beta = beta;
  report.eta = eta;
  report.alpha = alpha_exact(d);
  report.targets = nearest_extremal_vertex(n, d);
  report.epsilon = options.epsilon;

  std::optional<CensusTable> storage;
  const CensusTable* census = resolve_census(n, options, storage);
  report.exact = census != nullptr;

  for (std::size_t i = 0; i < r_ladder.size(); ++i) {
    LadderRow row;
    row.r = r_ladder[i];
    row.theta = along_ray(beta, row.r, d);
    row.distribution = class_distribution(n, row.theta, census, options, i);
    for (const auto& c : row.distribution) {
      if (linf_distance(normalize_exact(c.stat, n), report.alpha) <= eta) row.eta_mass += c.probability;
    }
    row.target_mass = mass_of(row.distribution, report.targets);
    if (!report.first_r_reaching && row.eta_mass >= 1.0 - options.epsilon) {
      report.first_r_reaching = row.r;
    }
    report.ladder.push_back(std::move(row));
  }
  report.achieved_epsilon = 1.0 - report.ladder.back().eta_mass;
  return report;
}

BetaInvarianceReport beta_invariance_check(std::int64_t n, const Direction& d,
                                           const std::vector<ModelParams>& betas, double r,
                                           const ExperimentOptions& options) {
  if (n < 3) throw std::invalid_argument("beta invariance check requires n >= 3");
  if (classify_direction(d) == ConeClass::Boundary) {
    throw DomainError("boundary directions of the limiting fan are outside the extremal regimes");
  }
  if (r < 0) throw std::invalid_argument("r must be non-negative");

  BetaInvarianceReport report;
  report.n = n;
  report.direction = d;
  report.targets = nearest_extremal_vertex(n, d);
  for (double step = 1.0; step < r; step *= 2.0) report.ladder.push_back(step);
  report.ladder.push_back(r);

  std::optional<CensusTable> storage;
  const CensusTable* census = resolve_census(n, options, storage);

  for (const ModelParams& beta : betas) {
    BetaRow row;
    row.beta = beta;
    for (std::size_t i = 0; i < report.ladder.size(); ++i) {
      auto dist = class_distribution(n, along_ray(beta, report.ladder[i], d), census, options, i);
      row.target_mass.push_back(mass_of(dist, report.targets));
      if (i + 1 == report.ladder.size()) row.final_distribution = std::move(dist);
    }
    const auto modal = std::max_element(
        row.final_distribution.begin(), row.final_distribution.end(),
        [](const auto& a, const auto& b) { return a.probability < b.probability; });
    row.modal_class = modal->stat;
    if (!report.rows.empty() && !(report.rows.front().modal_class == row.modal_class)) {
      report.same_modal_class = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace edegen

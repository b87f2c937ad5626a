// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edegen/census.hpp"
#include "edegen/extremal.hpp"
#include "edegen/fan.hpp"
#include "edegen/graph.hpp"
#include "edegen/model.hpp"
#include "edegen/polytope.hpp"
#include "edegen/sampler.hpp"
#include "oracles.hpp"

namespace {

using namespace edegen;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<StatPair> support(const CensusTable& census) {
  std::set<StatPair> s;
  for (const auto& [stat, count] : census.counts) {
    if (count > 0) s.insert(stat);
  }
  return s;
}

double mass_on(const std::vector<ClassProbability>& dist, const std::vector<StatPair>& targets) {
  double m = 0.0;
  for (const auto& c : dist) {
    if (std::find(targets.begin(), targets.end(), c.stat) != targets.end()) m += c.probability;
  }
  return m;
}

Outcome realizable_sets() {
  const auto start = Clock::now();
  const std::vector<std::set<StatPair>> expected{
      {{0, 0}, {1, 1}, {2, 1}, {3, 2}},
      {{0, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 3}},
      {{0, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 3},
       {4, 1}, {6, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 3}, {10, 4}},
  };
  Outcome o;
  std::ostringstream detail;
  for (std::int64_t n = 3; n <= 5; ++n) {
    const auto got = support(build_census(n));
    const auto& want = expected[static_cast<std::size_t>(n - 3)];
    // The independent mask-based enumeration must agree as well.
    const auto oracle = testing::brute_force_census(static_cast<std::size_t>(n));
    std::set<StatPair> oracle_support;
    for (const auto& [stat, count] : oracle) oracle_support.insert({stat.first, stat.second});
    const bool ok = got == want && oracle_support == want;
    o.pass = o.pass && ok;
    detail << "n=" << n << ":" << got.size() << (ok ? "" : "(mismatch)") << ' ';
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 1.0;
  detail << "time " << std::fixed << std::setprecision(3) << t << "s (limit 1s)";
  o.detail = detail.str();
  return o;
}

Outcome count_formula() {
  Outcome o;
  std::ostringstream detail;
  double n7_time = 0.0;
  for (std::int64_t n = 3; n <= 7; ++n) {
    const auto start = Clock::now();
    const CensusTable census = build_census(n);
    if (n == 7) n7_time = seconds_since(start);
    const auto size = static_cast<std::int64_t>(support(census).size());
    const bool ok = size == count_integer_points(n) && verify_census(census);
    o.pass = o.pass && ok;
    detail << "n=" << n << ":" << size << "/" << count_integer_points(n) << ' ';
  }
  o.pass = o.pass && n7_time < 300.0;
  detail << "n=7 census " << std::fixed << std::setprecision(2) << n7_time << "s (limit 300s)";
  o.detail = detail.str();
  return o;
}

Outcome constructive_realizability() {
  const auto start = Clock::now();
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t d = 0; d < n; ++d) {
      for (std::int64_t e = upper_bound(n, d); e <= lower_bound(n, d); ++e) {
        ++checked;
        const Graph g = realize(n, d, e);
        if (g.order() != static_cast<std::size_t>(n) || !(stat_pair(g) == StatPair{e, d})) {
          ++failures;
        }
      }
    }
  }
  const double t = seconds_since(start);
  std::ostringstream detail;
  detail << checked << " points, " << failures << " failures, " << std::fixed << std::setprecision(2)
         << t << "s (limit 30s)";
  return {failures == 0 && t < 30.0, detail.str()};
}

Outcome boundary_structure() {
  std::int64_t failures = 0;
  for (std::int64_t n = 3; n <= 50; ++n) {
    const Polytope p = build_polytope(n);
    std::set<StatPair> vs(p.vertices.begin(), p.vertices.end());
    std::set<StatPair> expected;
    for (std::int64_t d = 0; d < n; ++d) expected.insert({upper_bound(n, d), d});
    for (std::int64_t d = 1; d <= n - 2; ++d) expected.insert({lower_bound(n, d), d});
    std::set<StatPair> rs;
    for (const auto& v : p.vertices) rs.insert(p.rotate(v));
    const bool ok = p.vertices.size() == static_cast<std::size_t>(2 * n - 2) &&
                    vs.size() == p.vertices.size() && vs == expected && rs == vs;
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "n=3..50, " + std::to_string(failures) + " failures"};
}

Outcome complement_theorem() {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t d = 0; d < n; ++d) {
      ++checked;
      const Graph g = complement(upper_witness(n, d));
      const std::int64_t k = n - d - 1;
      const bool ok = static_cast<std::int64_t>(degeneracy(g)) == k &&
                      static_cast<std::int64_t>(g.edge_count()) == lower_bound(n, k) &&
                      g == lower_witness_complement(n, d);
      failures += ok ? 0 : 1;
    }
  }
  return {failures == 0,
          std::to_string(checked) + " (n,d) pairs, " + std::to_string(failures) + " failures"};
}

Outcome proportion_limit() {
  Outcome o;
  Rational previous = interior_proportion(4);
  std::int64_t first_above = 0;
  for (std::int64_t n = 5; n <= 400; ++n) {
    const Rational p = interior_proportion(n);
    if (n <= 200 && p < previous) o.pass = false;
    if (first_above == 0 && p > Rational(99, 100)) first_above = n;
    previous = p;
  }
  const Rational p200 = interior_proportion(200);
  const Rational p400 = interior_proportion(400);
  o.pass = o.pass && p400 > Rational(99, 100);
  std::ostringstream detail;
  detail << "monotone n=4..200; p_200=" << to_string(p200) << " p_400=" << to_string(p400)
         << " (" << std::setprecision(6) << to_double(p400) << "); first n with p_n>0.99: "
         << first_above;
  o.detail = detail.str();
  return o;
}

Outcome exponential_family() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const double h = 1e-5;
  double worst_grad = 0.0;
  double worst_fit = 0.0;
  int not_converged = 0;
  for (std::int64_t n : {4, 5, 6}) {
    const CensusTable census = build_census(n);
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams t{u(rng), u(rng)};
      const NormalizedStat m = mean_stat(census, t);
      const double gx = (log_partition(census, {t.theta_edges + h, t.theta_degen}) -
                         log_partition(census, {t.theta_edges - h, t.theta_degen})) /
                        (2 * h);
      const double gy = (log_partition(census, {t.theta_edges, t.theta_degen + h}) -
                         log_partition(census, {t.theta_edges, t.theta_degen - h})) /
                        (2 * h);
      worst_grad = std::max({worst_grad, std::abs(gx - m.x), std::abs(gy - m.y)});

      const MleResult fit = mle_fit(census, m, {.tolerance = 1e-12, .max_iterations = 200});
      if (fit.status != MleResult::Status::Converged) ++not_converged;
      worst_fit = std::max({worst_fit, std::abs(fit.theta.theta_edges - t.theta_edges),
                            std::abs(fit.theta.theta_degen - t.theta_degen)});
    }
  }
  std::ostringstream detail;
  detail << std::scientific << std::setprecision(2) << "max |FD grad - mean| " << worst_grad
         << " (tol 1e-6); max |theta* - theta0| " << worst_fit << " (tol 1e-5); "
         << not_converged << " unconverged fits";
  return {worst_grad <= 1e-6 && worst_fit <= 1e-5 && not_converged == 0, detail.str()};
}

Outcome extremal_concentration() {
  constexpr std::int64_t n = 6;
  const CensusTable census = build_census(n);
  const std::vector<ModelParams> betas{{0.0, 0.0}, {3.0, -2.0}, {-5.0, 5.0}};
  const double r = 200.0;
  const Rational eta(15, 100);
  Outcome o;
  std::ostringstream detail;
  detail << std::setprecision(8);

  struct Case {
    Direction d;
    ConeClass cone;
    std::vector<StatPair> expected_targets;
  };
  const std::vector<Case> cases{
      {Direction(0, -1), ConeClass::Empty, {{0, 0}}},
      {Direction(0, 1), ConeClass::Complete, {{15, 5}}},
      {Direction(1, -1), ConeClass::LowerInterior, nearest_extremal_vertex(n, Direction(1, -1))},
  };
  for (const auto& c : cases) {
    if (classify_direction(c.d) != c.cone) o.pass = false;
    const auto targets = nearest_extremal_vertex(n, c.d);
    if (targets != c.expected_targets) o.pass = false;
    const ExactStat a = alpha_exact(c.d);
    for (const auto& t : targets) {
      if (linf_distance(normalize_exact(t, n), a) > eta) o.pass = false;
    }
    double worst = 1.0;
    for (const auto& beta : betas) {
      const auto dist = exact_distribution(census, along_ray(beta, r, c.d));
      worst = std::min(worst, mass_on(dist, targets));
    }
    if (!(worst > 0.999)) o.pass = false;
    detail << to_string(c.cone) << " d=(" << to_string(c.d.x()) << "," << to_string(c.d.y())
           << ") targets";
    for (const auto& t : targets) detail << " (" << t.edges << "," << t.degen << ")";
    detail << " min mass " << worst << "; ";
  }
  const ExactStat a = alpha_exact(Direction(1, -1));
  if (!(a.x == Rational(3, 4) && a.y == Rational(1, 2))) o.pass = false;
  detail << "alpha(1,-1)=(" << to_string(a.x) << "," << to_string(a.y) << ")";
  o.detail = detail.str();
  return o;
}

Outcome sampler_vs_oracle() {
  const auto start = Clock::now();
  constexpr std::int64_t n = 5;
  const CensusTable census = build_census(n);
  Outcome o;
  std::ostringstream detail;
  detail << std::setprecision(4);
  for (const ModelParams theta : {ModelParams{0.0, 0.0}, ModelParams{2.0, -1.0}}) {
    const auto trace = run_chain({.n = n,
                                  .theta = theta,
                                  .burn_in = 1000,
                                  .samples = 1000000,
                                  .thinning = 1,
                                  .seed = 12345});
    const double tv = total_variation(empirical_distribution(trace), exact_distribution(census, theta));
    if (!(tv < 0.02)) o.pass = false;
    detail << "theta=(" << theta.theta_edges << "," << theta.theta_degen << ") TV " << tv << "; ";
  }
  const double t = seconds_since(start);
  if (!(t < 60.0)) o.pass = false;
  detail << std::fixed << std::setprecision(2) << t << "s (limit 60s)";
  o.detail = detail.str();
  return o;
}

Outcome fan_correctness() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> slope(0.0, 2.0);
  std::uniform_real_distribution<double> scale(0.001, 1000.0);
  std::uniform_real_distribution<double> any(-10.0, 10.0);
  int scale_failures = 0;
  int curve_failures = 0;
  int convergence_failures = 0;
  Rational worst = 0;

  // Scale invariance over arbitrary directions.
  for (int i = 0; i < 2000; ++i) {
    const double x = any(rng);
    const double y = any(rng);
    if (x == 0.0 && y == 0.0) continue;
    const Direction d = Direction::from_doubles(x, y);
    const Rational s = Rational(scale(rng));
    const Direction scaled(d.x() * s, d.y() * s);
    const ConeClass c = classify_direction(d);
    if (classify_direction(scaled) != c) ++scale_failures;
    if (c == ConeClass::UpperInterior || c == ConeClass::LowerInterior) {
      if (!(alpha_exact(d) == alpha_exact(scaled))) ++scale_failures;
    }
  }

  constexpr std::int64_t n = 1000;
  for (const bool lower : {true, false}) {
    for (int i = 0; i < 20; ++i) {
      double a = 0.0;
      while (a == 0.0) a = slope(rng);
      const Rational ar = Rational(a);
      const Rational s = Rational(scale(rng));
      const Direction d = lower ? Direction(s, -ar * s) : Direction(-s, ar * s);
      if (classify_direction(d) != (lower ? ConeClass::LowerInterior : ConeClass::UpperInterior)) {
        ++curve_failures;
        continue;
      }
      const ExactStat p = alpha_exact(d);
      // Lower curve: (1 - y)^2 = 1 - x; upper curve: y^2 = x.
      const bool on_curve = lower ? (1 - p.y) * (1 - p.y) == 1 - p.x : p.y * p.y == p.x;
      if (!on_curve || !limit_contains(p)) ++curve_failures;
      for (const auto& v : nearest_extremal_vertex(n, d)) {
        const Rational dist = linf_distance(normalize_exact(v, n), p);
        worst = std::max(worst, dist);
        if (dist > Rational(1, 100)) ++convergence_failures;
      }
    }
  }
  std::ostringstream detail;
  detail << "scale-invariance failures " << scale_failures << ", curve failures " << curve_failures
         << ", n=1000 convergence failures " << convergence_failures << " (max distance "
         << std::setprecision(4) << to_double(worst) << ", tol 0.01)";
  return {scale_failures == 0 && curve_failures == 0 && convergence_failures == 0, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Realizable-set reproduction", realizable_sets},
      {"Count formula", count_formula},
      {"Constructive realizability", constructive_realizability},
      {"Boundary structure", boundary_structure},
      {"Complement theorem", complement_theorem},
      {"Interior proportion limit", proportion_limit},
      {"Exponential-family identities", exponential_family},
      {"Extremal concentration", extremal_concentration},
      {"Sampler vs oracle", sampler_vs_oracle},
      {"Fan correctness", fan_correctness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first
              << " [" << std::fixed << std::setprecision(2) << seconds_since(start) << "s] "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

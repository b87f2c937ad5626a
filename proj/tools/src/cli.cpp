#include "edegen_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "edegen/census.hpp"
#include "edegen/edge_list.hpp"
#include "edegen/errors.hpp"
#include "edegen/extremal.hpp"
#include "edegen/fan.hpp"
#include "edegen/graph.hpp"
#include "edegen/model.hpp"
#include "edegen/polytope.hpp"
#include "edegen/rational.hpp"
#include "edegen/sampler.hpp"
#include "edegen/serialize.hpp"

namespace edegen::cli {
namespace {

// Raised for malformed argument values that CLI11 cannot see (e.g. "1,x").
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError(std::string(what) + " must have the form a,b: '" + text + "'");
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

double parse_double(const std::string& text, const char* what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(std::string(what) + " is not a number: '" + text + "'");
  }
  return value;
}

Rational parse_exact(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw UsageError(std::string(what) + " is not a number: '" + text + "'");
  }
}

ModelParams parse_params(const std::string& text, const char* what) {
  const auto [a, b] = split_pair(text, what);
  return {parse_double(a, what), parse_double(b, what)};
}

Direction parse_direction(const std::string& text) {
  const auto [a, b] = split_pair(text, "direction");
  const Rational x = parse_exact(a, "direction");
  const Rational y = parse_exact(b, "direction");
  if (x == 0 && y == 0) throw UsageError("direction must be nonzero");
  return {x, y};
}

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> ladder;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ladder.push_back(parse_double(item, "ladder value"));
  return ladder;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

CensusTable obtain_census(std::int64_t n, const std::string& cache_dir, bool allow_large) {
  const CensusOptions options{.allow_large = allow_large, .workers = 0};
  if (cache_dir.empty()) return build_census(n, options);
  std::filesystem::create_directories(cache_dir);
  return load_or_build_census(cache_dir, n, options);
}

// Writes to `path` when given, else to `out`.
template <typename Writer>
void emit(std::ostream& out, const std::string& path, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  writer(file);
  if (!file) throw std::runtime_error("failed writing " + path);
}

struct Options {
  std::string graph_file;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;
  bool json = false;
  bool raw = false;
  bool allow_large = false;
  std::string output;
  std::string cache;
  std::string theta;
  std::string observed;
  std::string direction;
  std::string beta;
  std::string eta;
  std::string ladder;
  std::optional<std::uint64_t> seed;
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 1000;
  std::uint64_t thin = 1;
  std::uint64_t samples = 100000;
  double epsilon = 0.01;
};

int cmd_degen(const Options& o, std::ostream& out) {
  const Graph g = read_edge_list(std::filesystem::path(o.graph_file));
  const CoreDecomposition cores = core_decompose(g);
  out << "n " << g.order() << '\n';
  out << "edges " << g.edge_count() << '\n';
  out << "degeneracy " << cores.degeneracy << '\n';
  out << "core_numbers";
  for (auto c : cores.core_number) out << ' ' << c;
  out << '\n';
  return kExitOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  const Polytope p = build_polytope(o.n);
  if (o.json) {
    out << polytope_json(p).dump(2) << '\n';
    return kExitOk;
  }
  const Rational pn = interior_proportion(o.n);
  out << "n " << o.n << '\n';
  out << "vertices " << p.vertices.size() << '\n';
  for (const auto& v : p.vertices) out << v.edges << ' ' << v.degen << '\n';
  out << "integer_points " << count_integer_points(o.n) << '\n';
  out << "p_n " << to_string(pn) << ' ' << format_double(to_double(pn)) << '\n';
  return kExitOk;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const Graph g = realize(o.n, o.d, o.e);
  emit(out, o.output, [&](std::ostream& s) { write_edge_list(s, g); });
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  const CensusTable census = obtain_census(o.n, o.cache, o.allow_large);
  if (!verify_census(census)) {
    err << "census verification failed for n = " << o.n << '\n';
    return kExitDomain;
  }
  emit(out, o.output, [&](std::ostream& s) { write_census(s, census); });
  return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  const ModelParams theta = parse_params(o.theta, "theta");
  const CensusTable census = obtain_census(o.n, o.cache, o.allow_large);
  const auto dist = exact_distribution(census, theta, o.raw ? Scaling::Raw : Scaling::Normalized);
  emit(out, o.output, [&](std::ostream& s) { write_distribution_csv(s, dist); });
  return kExitOk;
}

int cmd_mle(const Options& o, std::ostream& out) {
  const auto [a, b] = split_pair(o.observed, "observed");
  ExactStat observed{parse_exact(a, "observed"), parse_exact(b, "observed")};
  if (o.raw) observed = {observed.x / choose2(o.n), observed.y / (o.n - 1)};
  if (!mle_exists_normalized(o.n, observed)) {
    out << "status NoMLE\n";
    return kExitDomain;
  }
  const CensusTable census = obtain_census(o.n, o.cache, o.allow_large);
  const MleResult fit = mle_fit(census, observed);
  out << "status " << to_string(fit.status) << '\n';
  out << "theta " << format_double(fit.theta.theta_edges) << ' '
      << format_double(fit.theta.theta_degen) << '\n';
  out << "iterations " << fit.iterations << '\n';
  out << "residual " << format_double(fit.residual) << '\n';
  return fit.status == MleResult::Status::Converged ? kExitOk : kExitDomain;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Direction d = parse_direction(o.direction);
  if (o.json) {
    out << direction_json(d).dump(2) << '\n';
    return kExitOk;
  }
  const ConeClass cone = classify_direction(d);
  out << "direction " << to_string(d.x()) << ' ' << to_string(d.y()) << '\n';
  out << "cone " << to_string(cone) << '\n';
  if (cone == ConeClass::Boundary) {
    out << "alpha none\n";
  } else {
    const ExactStat a = alpha_exact(d);
    out << "alpha " << to_string(a.x) << ' ' << to_string(a.y) << '\n';
  }
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (!o.seed) throw UsageError("sample requires --seed");
  if (o.steps < o.thin) throw UsageError("--steps must be at least --thin");
  const ChainConfig config{.n = o.n,
                           .theta = parse_params(o.theta, "theta"),
                           .burn_in = o.burn_in,
                           .samples = o.steps / o.thin,
                           .thinning = o.thin,
                           .seed = *o.seed};
  const auto trace = run_chain(config);
  emit(out, o.output, [&](std::ostream& s) { write_trace_csv(s, trace); });
  return kExitOk;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const bool uses_chain = o.n > kCensusDefaultMaxN;
  if (uses_chain && !o.seed) throw UsageError("extremal above the census range requires --seed");
  const ModelParams beta = parse_params(o.beta, "beta");
  const Direction d = parse_direction(o.direction);
  const Rational eta = parse_exact(o.eta, "eta");
  const auto ladder = o.ladder.empty() ? default_r_ladder() : parse_ladder(o.ladder);

  std::optional<CensusTable> census;
  if (!uses_chain && !o.cache.empty()) census = obtain_census(o.n, o.cache, false);
  const ExperimentOptions options{.epsilon = o.epsilon,
                                  .burn_in = o.burn_in,
                                  .samples = o.samples,
                                  .seed = o.seed.value_or(0),
                                  .census = census ? &*census : nullptr};
  const ExtremalReport report = extremal_experiment(o.n, beta, d, ladder, eta, options);
  emit(out, o.output, [&](std::ostream& s) { s << extremal_report_json(report).dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-degeneracy exponential random graph model toolkit", "edegen"};
  app.require_subcommand(1);
  Options o;

  auto* degen = app.add_subcommand("degen", "Edge count, degeneracy and core numbers of a graph");
  degen->add_option("graph", o.graph_file, "Edge-list file")->required();

  auto* polytope = app.add_subcommand("polytope", "Vertices, integer-point count and p_n of P_n");
  polytope->add_option("n", o.n, "Node count")->required();
  polytope->add_flag("--json", o.json, "Emit JSON");

  auto* realize_cmd = app.add_subcommand("realize", "Graph with e edges and degeneracy d");
  realize_cmd->add_option("n", o.n, "Node count")->required();
  realize_cmd->add_option("d", o.d, "Degeneracy")->required();
  realize_cmd->add_option("e", o.e, "Edge count")->required();
  realize_cmd->add_option("-o,--output", o.output, "Write the edge list to this file");

  auto* census = app.add_subcommand("census", "Build and verify the (e, d) census");
  census->add_option("n", o.n, "Node count")->required();
  census->add_option("--cache", o.cache, "Cache directory");
  census->add_flag("--allow-large", o.allow_large, "Permit n above the default guard");
  census->add_option("-o,--output", o.output, "Write the table to this file");

  auto* dist = app.add_subcommand("dist", "Exact class distribution as CSV");
  dist->add_option("n", o.n, "Node count")->required();
  dist->add_option("--theta", o.theta, "Natural parameter a,b")->required();
  dist->add_flag("--raw", o.raw, "Use raw (E, degen) instead of normalized statistics");
  dist->add_option("--cache", o.cache, "Census cache directory");
  dist->add_flag("--allow-large", o.allow_large, "Permit n above the default guard");
  dist->add_option("-o,--output", o.output, "Write the CSV to this file");

  auto* mle = app.add_subcommand("mle", "Maximum likelihood estimate for an observed mean");
  mle->add_option("n", o.n, "Node count")->required();
  mle->add_option("--observed", o.observed, "Mean statistic x,y (decimals or p/q)")->required();
  mle->add_flag("--raw", o.raw, "Observed value is the raw (E, degen) mean");
  mle->add_option("--cache", o.cache, "Census cache directory");
  mle->add_flag("--allow-large", o.allow_large, "Permit n above the default guard");

  auto* classify = app.add_subcommand("classify-dir", "Cone of the normal fan and alpha(d)");
  classify->add_option("direction", o.direction, "Direction a,b")->required();
  classify->add_flag("--json", o.json, "Emit JSON");

  auto* sample = app.add_subcommand("sample", "Metropolis trace as CSV");
  sample->add_option("n", o.n, "Node count")->required();
  sample->add_option("--theta", o.theta, "Natural parameter a,b")->required();
  sample->add_option("--steps", o.steps, "Steps after burn-in")->required();
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--burn-in", o.burn_in, "Steps discarded first")->capture_default_str();
  sample->add_option("--thin", o.thin, "Record every k-th step")->capture_default_str();
  sample->add_option("-o,--output", o.output, "Write the CSV to this file");

  auto* extremal = app.add_subcommand("extremal", "Concentration report along beta + r d");
  extremal->add_option("n", o.n, "Node count")->required();
  extremal->add_option("--beta", o.beta, "Base parameter a,b")->required();
  extremal->add_option("--dir", o.direction, "Direction c,d")->required();
  extremal->add_option("--eta", o.eta, "Radius around alpha(d)")->required();
  extremal->add_option("--ladder", o.ladder, "Comma-separated r values");
  extremal->add_option("--epsilon", o.epsilon, "Mass threshold 1 - epsilon")->capture_default_str();
  extremal->add_option("--seed", o.seed, "RNG seed (needed above the census range)");
  extremal->add_option("--burn-in", o.burn_in, "Chain burn-in")->capture_default_str();
  extremal->add_option("--samples", o.samples, "Chain samples per r")->capture_default_str();
  extremal->add_option("--cache", o.cache, "Census cache directory");
  extremal->add_option("-o,--output", o.output, "Write the JSON to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (degen->parsed()) return cmd_degen(o, out);
    if (polytope->parsed()) return cmd_polytope(o, out);
    if (realize_cmd->parsed()) return cmd_realize(o, out);
    if (census->parsed()) return cmd_census(o, out, err);
    if (dist->parsed()) return cmd_dist(o, out);
    if (mle->parsed()) return cmd_mle(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (extremal->parsed()) return cmd_extremal(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::logic_error& e) {
    // DomainError, invalid_argument and out_of_range all describe inputs
    // outside an operation's domain.
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edegen::cli

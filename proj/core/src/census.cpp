#include "edegen/census.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "edegen/errors.hpp"
#include "edegen/polytope.hpp"

namespace edegen {
namespace {

constexpr const char* kMagic = "edegen-census";
constexpr const char* kPairOrderId = "lex-uv";

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Counts over subset indices [begin, end), visited in reflected Gray-code
// order so each step toggles a single edge of one working graph.
std::vector<std::uint64_t> census_range(std::int64_t n, std::uint64_t begin, std::uint64_t end) {
  const auto pairs = pair_order(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>((choose2(n) + 1) * n), 0);
  if (begin >= end) return counts;

  Graph g = graph_from_subset(n, gray(begin));
  for (std::uint64_t i = begin;;) {
    const auto degen = degeneracy(g);
    ++counts[g.edge_count() * static_cast<std::size_t>(n) + degen];
    if (++i == end) break;
    const auto& [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(i))];
    g.toggle_edge(u, v);
  }
  return counts;
}

}  // namespace

std::uint64_t CensusTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [stat, c] : counts) sum += c;
  return sum;
}

std::uint64_t CensusTable::count(StatPair s) const {
  const auto it = counts.find(s);
  return it == counts.end() ? 0 : it->second;
}

std::vector<Edge> pair_order(std::int64_t n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(choose2(n)));
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

Graph graph_from_subset(std::int64_t n, std::uint64_t subset) {
  Graph g(static_cast<std::size_t>(n));
  const auto pairs = pair_order(n);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((subset >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

CensusTable build_census(std::int64_t n, const CensusOptions& options) {
  if (n < 3) throw std::invalid_argument("census requires n >= 3");
  if (n > kCensusHardMaxN) {
    throw ResourceLimit("census for n = " + std::to_string(n) + " exceeds the hard limit n <= " +
                        std::to_string(kCensusHardMaxN));
  }
  if (n > kCensusDefaultMaxN && !options.allow_large) {
    throw ResourceLimit("census for n = " + std::to_string(n) +
                        " enumerates 2^" + std::to_string(choose2(n)) +
                        " graphs; pass the allow-large override to proceed");
  }

  const std::uint64_t total = std::uint64_t{1} << choose2(n);
  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1U, 64U);
  const std::uint64_t chunk = (total + workers - 1) / workers;

  std::vector<std::vector<std::uint64_t>> partial(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back([&partial, w, n, begin, end] { partial[w] = census_range(n, begin, end); });
    }
  }

  CensusTable table;
  table.n = n;
  for (std::int64_t e = 0; e <= choose2(n); ++e) {
    for (std::int64_t d = 0; d < n; ++d) {
      std::uint64_t c = 0;
      for (const auto& p : partial) c += p[static_cast<std::size_t>(e * n + d)];
      if (c != 0) table.counts[{e, d}] = c;
    }
  }
  return table;
}

bool verify_census(const CensusTable& census) {
  const std::int64_t n = census.n;
  if (n < 3 || n > kCensusHardMaxN) return false;
  if (census.total() != (std::uint64_t{1} << choose2(n))) return false;
  const auto expected = realizable_points(n);
  if (expected.size() != census.counts.size()) return false;
  for (const auto& s : expected) {
    if (census.count(s) == 0) return false;
  }
  return true;
}

void write_census(std::ostream& out, const CensusTable& census) {
  out << kMagic << ' ' << kCensusFormatVersion << '\n';
  out << "n " << census.n << '\n';
  out << "pair-order " << kPairOrderId << '\n';
  std::vector<std::pair<StatPair, std::uint64_t>> rows(census.counts.begin(), census.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.degen, a.first.edges) < std::tie(b.first.degen, b.first.edges);
  });
  for (const auto& [s, c] : rows) out << s.edges << ' ' << s.degen << ' ' << c << '\n';
}

CensusTable read_census(std::istream& in) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) throw ParseError("not a census cache file");
  if (version != kCensusFormatVersion) {
    throw ParseError("unsupported census format version " + std::to_string(version));
  }
  std::string tag;
  CensusTable table;
  if (!(in >> tag >> table.n) || tag != "n") throw ParseError("census cache: missing 'n'");
  std::string order;
  if (!(in >> tag >> order) || tag != "pair-order") {
    throw ParseError("census cache: missing 'pair-order'");
  }
  if (order != kPairOrderId) throw ParseError("census cache: unknown pair order '" + order + "'");

  std::int64_t e = 0;
  std::int64_t d = 0;
  std::uint64_t c = 0;
  while (in >> e >> d >> c) {
    if (!table.counts.emplace(StatPair{e, d}, c).second) {
      throw ParseError("census cache: duplicate row");
    }
  }
  if (!in.eof()) throw ParseError("census cache: malformed row");
  return table;
}

std::filesystem::path census_cache_path(const std::filesystem::path& dir, std::int64_t n) {
  return dir / ("census_n" + std::to_string(n) + ".v" + std::to_string(kCensusFormatVersion) + ".txt");
}

CensusTable load_or_build_census(const std::filesystem::path& dir, std::int64_t n,
                                 const CensusOptions& options) {
  const auto path = census_cache_path(dir, n);
  if (std::ifstream in(path); in) {
    try {
      CensusTable cached = read_census(in);
      if (cached.n == n && verify_census(cached)) return cached;
    } catch (const ParseError&) {
      // Fall through and rebuild.
    }
  }
  CensusTable table = build_census(n, options);
  std::filesystem::create_directories(dir);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write census cache " + path.string());
  write_census(out, table);
  return table;
}

}  // namespace edegen

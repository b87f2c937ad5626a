#ifndef EDEGEN_CENSUS_HPP
#define EDEGEN_CENSUS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>

#include "edegen/graph.hpp"

namespace edegen {

/// Number of labeled graphs on n nodes per (edges, degeneracy) class.
struct CensusTable {
  std::int64_t n = 0;
  std::map<StatPair, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t count(StatPair s) const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Largest n built without `allow_large`.
inline constexpr std::int64_t kCensusDefaultMaxN = 7;
/// Hard ceiling: 2^C(n,2) must fit in 64 bits.
inline constexpr std::int64_t kCensusHardMaxN = 11;

struct CensusOptions {
  /// Lift the n <= 7 cost guard (still capped at kCensusHardMaxN).
  bool allow_large = false;
  /// 0 = std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Node pairs in bit order of the edge-subset index: (0,1), (0,2), ...,
/// (0,n-1), (1,2), ... Bit i of a subset index selects pair i.
std::vector<Edge> pair_order(std::int64_t n);

/// Graph selected by an edge-subset index under pair_order(n).
Graph graph_from_subset(std::int64_t n, std::uint64_t subset);

/// Exhaustive census of all 2^C(n,2) labeled graphs.
/// Throws std::invalid_argument for n < 3 and ResourceLimit above the guard.
CensusTable build_census(std::int64_t n, const CensusOptions& options = {});

/// Checks that counts sum to 2^C(n,2) and that the support is exactly the
/// set of realizable lattice points of P_n.
bool verify_census(const CensusTable& census);

// Cache file format (version 1):
//
//   edegen-census 1
//   n <n>
//   pair-order lex-uv
//   <e> <d> <count>      rows sorted by (d, e)
//
inline constexpr int kCensusFormatVersion = 1;

void write_census(std::ostream& out, const CensusTable& census);
/// Throws ParseError on malformed input or an unknown version/pair order.
CensusTable read_census(std::istream& in);

std::filesystem::path census_cache_path(const std::filesystem::path& dir, std::int64_t n);

/// Loads the cached table for n from `dir` if present and verified,
/// otherwise builds it and writes the cache.
CensusTable load_or_build_census(const std::filesystem::path& dir, std::int64_t n,
                                 const CensusOptions& options = {});

}  // namespace edegen

#endif  // EDEGEN_CENSUS_HPP

#ifndef EDEGEN_EXTREMAL_HPP
#define EDEGEN_EXTREMAL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "edegen/graph.hpp"

namespace edegen {

/// K_{d+1} on nodes 0..d plus n-d-1 isolated nodes: the unique graph (up to
/// isomorphism) at (U_n(d), d).
Graph upper_witness(std::int64_t n, std::int64_t d);

/// A graph with exactly `e` edges and degeneracy exactly `d`.
///
/// Starts from upper_witness(n, d) and adds e - U_n(d) edges; the j-th extra
/// edge (j = 1, 2, ...) goes from pool node v_i, i = ((j-1) mod (n-d-1)) + 1,
/// to the lowest-indexed clique node it is not yet adjacent to. Pool nodes
/// never exceed degree d, so the degeneracy stays at d.
///
/// Throws NotRealizable when (e, d) is outside the polytope row bounds.
Graph realize(std::int64_t n, std::int64_t d, std::int64_t e);

/// Complement of upper_witness(n, d), i.e. an empty graph on d+1 nodes joined
/// with K_{n-d-1}. It is maximally (n-d-1)-degenerate: L_n(n-d-1) edges.
Graph lower_witness_complement(std::int64_t n, std::int64_t d);

/// The two lower-boundary classes with a known characterization.
struct BoundaryClass {
  enum class Kind { Trees, CompleteMinusEdge };

  Kind kind;
  std::int64_t n;
  std::int64_t d;
  StatPair stats;
  /// One member of the class.
  Graph representative;
  /// Certificate: true iff `g` (on n nodes) belongs to the class.
  std::function<bool(const Graph&)> contains;
  std::string description;
};

/// d = 1: the trees on n nodes (connected with n-1 edges).
/// d = n-2: K_n minus one edge.
/// Throws DomainError for any other d; n must be at least 3.
BoundaryClass named_boundary_graphs(std::int64_t n, std::int64_t d);

}  // namespace edegen

#endif  // EDEGEN_EXTREMAL_HPP

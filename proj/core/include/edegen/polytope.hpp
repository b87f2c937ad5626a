#ifndef EDEGEN_POLYTOPE_HPP
#define EDEGEN_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "edegen/graph.hpp"
#include "edegen/rational.hpp"

namespace edegen {

/// Fewest edges of an n-node graph with degeneracy d: C(d+1, 2).
/// Throws std::out_of_range unless 0 <= d <= n-1.
std::int64_t upper_bound(std::int64_t n, std::int64_t d);

/// Most edges of an n-node graph with degeneracy d: C(d+1, 2) + (n-d-1) d.
std::int64_t lower_bound(std::int64_t n, std::int64_t d);

/// Model polytope P_n = conv{(E(G), degen(G)) : G on n nodes}, in raw
/// (unnormalized) coordinates.
///
/// `vertices` walks the boundary cycle: (U_n(d), d) for d = 0..n-1, then
/// (L_n(d), d) for d = n-2 down to 1. Every boundary lattice point is a
/// vertex, so there are exactly 2n-2 of them.
struct Polytope {
  std::int64_t n = 0;
  std::vector<StatPair> vertices;

  /// Center of the 180-degree rotational symmetry: (n(n-1)/4, (n-1)/2).
  ExactStat center() const;
  /// Image of `p` under the 180-degree rotation about center().
  StatPair rotate(StatPair p) const;
};

/// Throws std::invalid_argument for n < 3.
Polytope build_polytope(std::int64_t n);

enum class PointClass { InteriorRealizable, BoundaryVertex, NotRealizable };

const char* to_string(PointClass c);

/// Row test: (e, d) is realizable iff 0 <= d <= n-1 and U_n(d) <= e <= L_n(d).
PointClass classify_point(std::int64_t n, std::int64_t e, std::int64_t d);

inline bool is_realizable(std::int64_t n, std::int64_t e, std::int64_t d) {
  return classify_point(n, e, d) != PointClass::NotRealizable;
}

/// All realizable (e, d) pairs, ordered by (d, e).
std::vector<StatPair> realizable_points(std::int64_t n);

/// sum_{d=0}^{n-1} [(n-d-1) d + 1]. Defined for n >= 1.
std::int64_t count_integer_points(std::int64_t n);

/// Proportion of realizable points off the boundary:
/// (count - (2n-2)) / count, exact. Requires n >= 3.
Rational interior_proportion(std::int64_t n);

/// Whether the raw-coordinate point `mean` lies in the interior of P_n
/// (P_n is full-dimensional for n >= 3). Exact; no tolerance.
/// Throws std::invalid_argument for n < 3.
bool mle_exists(std::int64_t n, const ExactStat& mean_raw);

/// Interior test for a point given in normalized coordinates.
bool mle_exists_normalized(std::int64_t n, const ExactStat& mean_normalized);

/// Membership of a raw-coordinate point in the closed polytope.
bool polytope_contains(std::int64_t n, const ExactStat& point_raw);

}  // namespace edegen

#endif  // EDEGEN_POLYTOPE_HPP

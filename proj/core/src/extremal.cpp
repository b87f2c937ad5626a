#include "edegen/extremal.hpp"

#include <stdexcept>
#include <string>

#include "edegen/errors.hpp"
#include "edegen/polytope.hpp"

namespace edegen {
namespace {

void check_args(std::int64_t n, std::int64_t d) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  if (d < 0 || d > n - 1) {
    throw std::out_of_range("degeneracy " + std::to_string(d) + " outside [0, " +
                            std::to_string(n - 1) + "]");
  }
}

}  // namespace

Graph upper_witness(std::int64_t n, std::int64_t d) {
  check_args(n, d);
  Graph g(static_cast<std::size_t>(n));
  for (Node u = 0; u <= d; ++u) {
    for (Node v = u + 1; v <= d; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph realize(std::int64_t n, std::int64_t d, std::int64_t e) {
  check_args(n, d);
  if (classify_point(n, e, d) == PointClass::NotRealizable) {
    throw NotRealizable("(e=" + std::to_string(e) + ", d=" + std::to_string(d) +
                        ") is not realizable on " + std::to_string(n) + " nodes");
  }
  Graph g = upper_witness(n, d);
  const std::int64_t pool = n - d - 1;
  const std::int64_t extra = e - upper_bound(n, d);
  if (pool == 0) return g;

  for (std::int64_t j = 1; j <= extra; ++j) {
    const auto v = static_cast<Node>(d + 1 + (j - 1) % pool);
    for (Node c = 0; c <= d; ++c) {
      if (g.add_edge(v, c)) break;
    }
  }
  return g;
}

Graph lower_witness_complement(std::int64_t n, std::int64_t d) {
  return complement(upper_witness(n, d));
}

BoundaryClass named_boundary_graphs(std::int64_t n, std::int64_t d) {
  if (n < 3) throw std::invalid_argument("named boundary classes need n >= 3");
  if (d == 1) {
    // Path 0-1-...-(n-1).
    Graph path(static_cast<std::size_t>(n));
    for (Node v = 0; v + 1 < n; ++v) path.add_edge(v, v + 1);
    return {BoundaryClass::Kind::Trees,
            n,
            d,
            {lower_bound(n, 1), 1},
            std::move(path),
            [n](const Graph& g) { return static_cast<std::int64_t>(g.order()) == n && is_tree(g); },
            "trees on " + std::to_string(n) + " nodes"};
  }
  if (d == n - 2) {
    Graph g = Graph::complete(static_cast<std::size_t>(n));
    g.remove_edge(0, 1);
    const auto target = choose2(n) - 1;
    return {BoundaryClass::Kind::CompleteMinusEdge,
            n,
            d,
            {lower_bound(n, d), d},
            std::move(g),
            [n, target](const Graph& h) {
              return static_cast<std::int64_t>(h.order()) == n &&
                     static_cast<std::int64_t>(h.edge_count()) == target;
            },
            "K_" + std::to_string(n) + " minus one edge"};
  }
  throw DomainError("the boundary class at (L_n(d), d) is only characterized for d = 1 and d = n-2");
}

}  // namespace edegen

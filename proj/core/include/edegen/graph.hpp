#ifndef EDEGEN_GRAPH_HPP
#define EDEGEN_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "edegen/rational.hpp"

namespace edegen {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

/// C(n, 2) = n(n-1)/2.
constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

/// Labeled simple undirected graph on nodes {0, ..., n-1}.
///
/// Adjacency lists are kept sorted, so membership tests are logarithmic and
/// complement/join are exact set operations. Isolated nodes are explicit:
/// they change n and therefore the normalized statistics.
class Graph {
 public:
  /// Edgeless graph on `n >= 1` nodes.
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Node u, Node v) const;
  /// Returns false if the edge was already present.
  bool add_edge(Node u, Node v);
  /// Returns false if the edge was absent.
  bool remove_edge(Node u, Node v);
  /// Returns true if the edge is present after the call.
  bool toggle_edge(Node u, Node v);

  std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
  std::size_t degree(Node v) const { return adjacency_[v].size(); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Node u, Node v) const;

  std::vector<std::vector<Node>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct CoreDecomposition {
  std::vector<std::uint32_t> core_number;
  std::uint32_t degeneracy = 0;
};

/// Raw sufficient statistic (E(G), degen(G)).
struct StatPair {
  std::int64_t edges = 0;
  std::int64_t degen = 0;

  friend auto operator<=>(const StatPair&, const StatPair&) = default;
};

/// Statistic rescaled into [0,1]^2: (E / C(n,2), degen / (n-1)).
struct NormalizedStat {
  double x = 0.0;
  double y = 0.0;
};

/// Same rescaling, kept exact.
struct ExactStat {
  Rational x;
  Rational y;

  friend bool operator==(const ExactStat&, const ExactStat&) = default;
};

/// Bucket-queue peeling (Batagelj–Zaversnik), O(n + |E|).
CoreDecomposition core_decompose(const Graph& g);

std::uint32_t degeneracy(const Graph& g);

StatPair stat_pair(const Graph& g);

/// Throws std::invalid_argument for n < 2.
NormalizedStat normalize(StatPair s, std::int64_t n);
ExactStat normalize_exact(StatPair s, std::int64_t n);

Graph complement(const Graph& g);

/// Disjoint union plus every edge between the two node sets. Nodes of `g2`
/// are relabeled to follow those of `g1`.
Graph join(const Graph& g1, const Graph& g2);

/// Nodes of `g2` are relabeled to follow those of `g1`.
Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Subgraph induced by the nodes flagged true, relabeled in increasing order.
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

}  // namespace edegen

#endif  // EDEGEN_GRAPH_HPP

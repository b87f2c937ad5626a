#include "edegen/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edegen {

Graph::Graph(std::size_t n) : adjacency_(n) {
  if (n == 0) {
    throw std::invalid_argument("graph must have at least one node");
  }
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Node v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    adj.reserve(n - 1);
    for (Node u = 0; u < n; ++u) {
      if (u != v) adj.push_back(u);
    }
  }
  g.edge_count_ = static_cast<std::size_t>(choose2(static_cast<std::int64_t>(n)));
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (!g.add_edge(u, v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
  }
  return g;
}

void Graph::check_pair(Node u, Node v) const {
  if (u >= order() || v >= order()) {
    throw std::out_of_range("node label out of range");
  }
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
}

bool Graph::has_edge(Node u, Node v) const {
  if (u >= order() || v >= order() || u == v) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::add_edge(Node u, Node v) {
  check_pair(u, v);
  auto& au = adjacency_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Node u, Node v) {
  check_pair(u, v);
  auto& au = adjacency_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adjacency_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edge_count_;
  return true;
}

bool Graph::toggle_edge(Node u, Node v) {
  if (remove_edge(u, v)) return false;
  add_edge(u, v);
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Node u = 0; u < order(); ++u) {
    const auto& adj = adjacency_[u];
    for (auto it = std::upper_bound(adj.begin(), adj.end(), u); it != adj.end(); ++it) {
      out.emplace_back(u, *it);
    }
  }
  return out;
}

CoreDecomposition core_decompose(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (Node v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }

  // bin[k] = start of the block of nodes with current degree k in `order`.
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (Node v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<Node> order(n);
  std::vector<std::size_t> pos(n);
  for (Node v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (std::size_t k = max_deg; k > 0; --k) bin[k] = bin[k - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const Node v = order[i];
    for (const Node u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        // Swap u with the first node of its bin, then shrink that bin.
        const std::uint32_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const Node w = order[pw];
        if (u != w) {
          order[pu] = w;
          pos[w] = pu;
          order[pw] = u;
          pos[u] = pw;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }

  CoreDecomposition result;
  result.degeneracy = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
  result.core_number = std::move(deg);
  return result;
}

std::uint32_t degeneracy(const Graph& g) { return core_decompose(g).degeneracy; }

StatPair stat_pair(const Graph& g) {
  return {static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(degeneracy(g))};
}

NormalizedStat normalize(StatPair s, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("normalization requires n >= 2");
  return {static_cast<double>(s.edges) / static_cast<double>(choose2(n)),
          static_cast<double>(s.degen) / static_cast<double>(n - 1)};
}

ExactStat normalize_exact(StatPair s, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("normalization requires n >= 2");
  return {Rational(s.edges, choose2(n)), Rational(s.degen, n - 1)};
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto offset = static_cast<Node>(g1.order());
  Graph out(g1.order() + g2.order());
  for (const auto& [u, v] : g1.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : g2.edges()) out.add_edge(u + offset, v + offset);
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  const auto offset = static_cast<Node>(g1.order());
  for (Node u = 0; u < g1.order(); ++u) {
    for (Node v = 0; v < g2.order(); ++v) out.add_edge(u, v + offset);
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Node> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (const Node u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.order();
}

bool is_forest(const Graph& g) {
  // A graph is acyclic iff |E| = n - (number of components).
  std::vector<bool> seen(g.order(), false);
  std::size_t components = 0;
  for (Node s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<Node> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Node v = stack.back();
      stack.pop_back();
      for (const Node u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return g.edge_count() + components == g.order();
}

bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.order() && is_connected(g); }

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Node> label(g.order(), 0);
  Node next = 0;
  for (Node v = 0; v < g.order(); ++v) {
    if (keep[v]) label[v] = next++;
  }
  if (next == 0) throw std::invalid_argument("induced subgraph would be empty");
  Graph out(next);
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) out.add_edge(label[u], label[v]);
  }
  return out;
}

}  // namespace edegen

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ktfree/bitset.hpp"
#include "ktfree/errors.hpp"

namespace ktfree {

using Vertex = std::size_t;

/// Simple undirected graph stored as a symmetric bit-matrix.
///
/// Vertices are 0..order()-1. Adjacency rows never contain the vertex itself
/// or any index >= order().
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n) {
    if (n > kMaxVertices)
      throw CapacityError("graph order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(kMaxVertices));
  }

  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const { return adj_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop on vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }

  /// N(v).
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }

  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& row : adj_) d = std::max(d, row.count());
    return d;
  }

  VertexSet vertices() const { return VertexSet::prefix(order()); }

  bool is_clique(const VertexSet& s) const {
    for (Vertex v : s)
      if (!(s - VertexSet::singleton(v)).is_subset_of(adj_[v])) return false;
    return true;
  }

  bool is_clique(std::span<const Vertex> vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) return false;
    return true;
  }

  /// G[S], relabelled 0..|S|-1 in increasing index order.
  Graph induced(const VertexSet& s) const {
    std::vector<Vertex> keep;
    for (Vertex v : s) {
      check_vertex(v);
      keep.push_back(v);
    }
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
    return h;
  }

  /// G - v.
  Graph without(Vertex v) const {
    check_vertex(v);
    return induced(vertices() - VertexSet::singleton(v));
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const {
    if (v >= order())
      throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(order()));
  }

  std::vector<VertexSet> adj_;
};

/// K_n.
inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// G(v) = G[N(v)], keeping the relative order of the neighbours.
inline Graph neighborhood_subgraph(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  return g.induced(g.neighbors(v));
}

/// Glues g2 onto g1 by identifying map2[i] with map1[i]. Vertices of g1 keep their labels;
/// the remaining vertices of g2 follow in increasing order.
inline Graph paste(const Graph& g1, const Graph& g2, std::span<const Vertex> map1, std::span<const Vertex> map2) {
  if (map1.size() != map2.size())
    throw ArgumentError("paste: identification lists have sizes " + std::to_string(map1.size()) + " and " +
                        std::to_string(map2.size()));
  for (Vertex v : map1)
    if (v >= g1.order()) throw ArgumentError("paste: vertex out of range in first graph");
  for (Vertex v : map2)
    if (v >= g2.order()) throw ArgumentError("paste: vertex out of range in second graph");
  if (!g1.is_clique(map1)) throw PreconditionError("paste: identification set is not a clique in the first graph");
  if (!g2.is_clique(map2)) throw PreconditionError("paste: identification set is not a clique in the second graph");

  const std::size_t r = map1.size();
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(g2.order(), kUnset);
  for (std::size_t i = 0; i < r; ++i) relabel[map2[i]] = map1[i];
  Vertex next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v)
    if (relabel[v] == kUnset) relabel[v] = next++;

  Graph g(g1.order() + g2.order() - r);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(relabel[u], relabel[v]);
  return g;
}

struct Degeneracy {
  std::size_t degeneracy = 0;
  /// Elimination order: every vertex has at most `degeneracy` neighbours after it.
  std::vector<Vertex> order;
};

/// Repeatedly removes a minimum-degree vertex (lowest index on ties).
inline Degeneracy degeneracy(const Graph& g) {
  Degeneracy out;
  VertexSet alive = g.vertices();
  out.order.reserve(g.order());
  for (std::size_t step = 0; step < g.order(); ++step) {
    Vertex best = 0;
    std::size_t best_degree = kMaxVertices + 1;
    for (Vertex v : alive) {
      const std::size_t d = (g.neighbors(v) & alive).count();
      if (d < best_degree) {
        best_degree = d;
        best = v;
      }
    }
    out.degeneracy = std::max(out.degeneracy, best_degree);
    out.order.push_back(best);
    alive.reset(best);
  }
  return out;
}

}  // namespace ktfree

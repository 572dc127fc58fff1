#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ktfree/constructions.hpp"
#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"

namespace ktfree {

/// Branch sets of a complete-graph minor: disjoint, each connected, pairwise joined by an edge.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  std::size_t size() const { return branch_sets.size(); }
};

struct MinorOptions {
  /// Exact search refuses graphs larger than this. The engine itself tops out at 64.
  std::size_t max_vertices = 14;
};

struct MinorResult {
  bool found = false;
  std::optional<MinorModel> model;

  explicit operator bool() const { return found; }
};

/// Whether s induces a connected subgraph of g. The empty set is not connected.
inline bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.none()) return false;
  VertexSet reached = VertexSet::singleton(s.first());
  VertexSet frontier = reached;
  while (frontier.any()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= s;
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

inline bool verify_minor_model(const Graph& g, const MinorModel& model) {
  const VertexSet all = g.vertices();
  for (const auto& b : model.branch_sets)
    if (!b.is_subset_of(all)) throw ArgumentError("minor model refers to a vertex outside the graph");
  VertexSet used;
  std::vector<VertexSet> reach;
  for (const auto& b : model.branch_sets) {
    if (b.intersects(used) || !is_connected_set(g, b)) return false;
    used |= b;
    VertexSet n;
    for (Vertex v : b) n |= g.neighbors(v);
    reach.push_back(n);
  }
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = i + 1; j < model.size(); ++j)
      if (!reach[i].intersects(model.branch_sets[j])) return false;
  return true;
}

namespace detail {

/// Exact K_t-minor search on one connected graph of order <= 64.
///
/// A connected graph has a K_t minor iff its vertex set splits into t connected parts that are
/// pairwise adjacent, so the search walks partitions into connected parts by contracting one
/// quotient edge at a time, memoising visited partitions. A part of quotient degree < t-1 must
/// eventually merge with a neighbour, so only those contractions are tried when one exists.
class ContractionSearch {
 public:
  ContractionSearch(std::vector<std::uint64_t> adjacency, std::size_t t) : adj_(std::move(adjacency)), t_(t) {}

  std::optional<std::vector<std::uint64_t>> run(std::uint64_t vertices) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t rest = vertices; rest != 0; rest &= rest - 1) parts.push_back(rest & -rest);
    witness_.clear();
    if (search(parts)) return witness_;
    return std::nullopt;
  }

 private:
  struct PartsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& parts) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto p : parts) h = (h ^ (p * 0x9E3779B97F4A7C15ULL)) * 1099511628211ULL;
      return h;
    }
  };

  bool search(std::vector<std::uint64_t>& parts) {
    const std::size_t p = parts.size();
    if (p < t_) return false;

    std::vector<std::uint64_t> reach(p, 0);
    for (std::size_t i = 0; i < p; ++i)
      for (std::uint64_t rest = parts[i]; rest != 0; rest &= rest - 1)
        reach[i] |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
    std::vector<std::uint64_t> quotient(p, 0);
    std::size_t twice_edges = 0;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j)
        if (i != j && (reach[i] & parts[j]) != 0) quotient[i] |= std::uint64_t{1} << j;
      twice_edges += static_cast<std::size_t>(std::popcount(quotient[i]));
    }
    // Each contraction removes at least one quotient edge.
    if (twice_edges / 2 < t_ * (t_ - 1) / 2 + (p - t_)) return false;

    if (auto clique = find_clique(quotient)) {
      for (std::uint64_t rest = *clique; rest != 0; rest &= rest - 1)
        witness_.push_back(parts[static_cast<std::size_t>(std::countr_zero(rest))]);
      return true;
    }
    if (p == t_) return false;

    std::sort(parts.begin(), parts.end());
    if (!visited_.insert(parts).second) return false;
    // Sorting moved parts around; rebuild the quotient in the canonical order.
    std::fill(reach.begin(), reach.end(), 0);
    for (std::size_t i = 0; i < p; ++i)
      for (std::uint64_t rest = parts[i]; rest != 0; rest &= rest - 1)
        reach[i] |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
    for (std::size_t i = 0; i < p; ++i) {
      quotient[i] = 0;
      for (std::size_t j = 0; j < p; ++j)
        if (i != j && (reach[i] & parts[j]) != 0) quotient[i] |= std::uint64_t{1} << j;
    }

    std::size_t low = 0;
    for (std::size_t i = 1; i < p; ++i)
      if (std::popcount(quotient[i]) < std::popcount(quotient[low])) low = i;

    std::vector<std::pair<std::size_t, std::size_t>> moves;
    if (static_cast<std::size_t>(std::popcount(quotient[low])) < t_ - 1) {
      for (std::uint64_t rest = quotient[low]; rest != 0; rest &= rest - 1)
        moves.emplace_back(low, static_cast<std::size_t>(std::countr_zero(rest)));
    } else {
      for (std::size_t i = 0; i < p; ++i)
        for (std::uint64_t rest = quotient[i] & ~((std::uint64_t{2} << i) - 1); rest != 0; rest &= rest - 1)
          moves.emplace_back(i, static_cast<std::size_t>(std::countr_zero(rest)));
      // Contractions that lose fewer quotient edges first.
      std::stable_sort(moves.begin(), moves.end(), [&](const auto& a, const auto& b) {
        return std::popcount(quotient[a.first] & quotient[a.second]) <
               std::popcount(quotient[b.first] & quotient[b.second]);
      });
    }

    for (auto [i, j] : moves) {
      std::vector<std::uint64_t> next;
      next.reserve(p - 1);
      for (std::size_t x = 0; x < p; ++x)
        if (x != i && x != j) next.push_back(parts[x]);
      next.push_back(parts[i] | parts[j]);
      if (search(next)) return true;
    }
    return false;
  }

  /// A t-clique of the quotient graph, as a mask over part indices.
  std::optional<std::uint64_t> find_clique(const std::vector<std::uint64_t>& quotient) const {
    std::uint64_t eligible = 0;
    for (std::size_t i = 0; i < quotient.size(); ++i)
      if (static_cast<std::size_t>(std::popcount(quotient[i])) + 1 >= t_) eligible |= std::uint64_t{1} << i;
    std::uint64_t found = 0;
    auto grow = [&](auto&& self, std::uint64_t chosen, std::size_t size, std::uint64_t candidates) -> bool {
      if (size == t_) {
        found = chosen;
        return true;
      }
      while (candidates != 0) {
        if (size + static_cast<std::size_t>(std::popcount(candidates)) < t_) return false;
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        if (self(self, chosen | (std::uint64_t{1} << v), size + 1, candidates & quotient[v])) return true;
      }
      return false;
    };
    if (grow(grow, 0, 0, eligible)) return found;
    return std::nullopt;
  }

  std::vector<std::uint64_t> adj_;
  std::size_t t_;
  std::vector<std::uint64_t> witness_;
  std::unordered_set<std::vector<std::uint64_t>, PartsHash> visited_;
};

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left.any()) {
    VertexSet comp = VertexSet::singleton(left.first());
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

}  // namespace detail

/// Exact test for a K_t minor. Graphs above options.max_vertices are refused.
inline MinorResult has_kt_minor(const Graph& g, std::size_t t, const MinorOptions& options = {}) {
  if (t < 1) throw ArgumentError("has_kt_minor needs t >= 1");
  const std::size_t limit = std::min<std::size_t>(options.max_vertices, 64);
  if (g.order() > limit)
    throw CapacityError("exact minor search is limited to " + std::to_string(limit) + " vertices; graph has " +
                        std::to_string(g.order()));
  if (g.order() < t) return {};

  std::vector<std::uint64_t> adjacency(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) adjacency[v] = g.neighbors(v).words()[0];

  for (const VertexSet& comp : detail::connected_components(g)) {
    if (comp.count() < t) continue;
    detail::ContractionSearch search(adjacency, t);
    if (auto parts = search.run(comp.words()[0])) {
      MinorModel model;
      for (auto mask : *parts) {
        VertexSet b;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
          b.set(static_cast<std::size_t>(std::countr_zero(rest)));
        model.branch_sets.push_back(b);
      }
      return {true, std::move(model)};
    }
  }
  return {};
}

/// Largest t such that K_t is a minor of g, searching downwards from the edge-count bound.
inline std::size_t hadwiger_number(const Graph& g, const MinorOptions& options = {}) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const std::size_t m = g.edge_count();
  std::size_t t = 1;
  while (t < n && (t + 1) * t / 2 <= m) ++t;
  for (; t > 1; --t)
    if (has_kt_minor(g, t, options).found) return t;
  if (n > std::min<std::size_t>(options.max_vertices, 64))
    throw CapacityError("exact minor search is limited to " + std::to_string(options.max_vertices) + " vertices");
  return 1;
}

/// min{floor((n+c)/2) + 1, n - n_1 + 2}: the complete multipartite graph has no K_t minor but
/// has a K_{t-1} minor.
inline std::int64_t multipartite_minor_free_order(const MultipartiteSpec& spec) { return spec.minor_free_order(); }

/// K_{floor(3c/2)} model in K_{c x 2} (parts {2i, 2i+1}): the singletons {2i} form a K_c, and the
/// leftover vertices are matched across parts into floor(c/2) two-vertex branch sets.
inline MinorModel kc2_minor_witness(std::size_t c) {
  if (c < 2) throw ArgumentError("kc2_minor_witness needs c >= 2");
  if (2 * c > kMaxVertices) throw CapacityError("K_{c x 2} exceeds the vertex cap");
  MinorModel model;
  for (std::size_t i = 0; i < c; ++i) model.branch_sets.push_back(VertexSet::singleton(2 * i));
  for (std::size_t j = 0; 2 * j + 1 < c; ++j) {
    VertexSet pair;
    pair.set(2 * (2 * j) + 1);
    pair.set(2 * (2 * j + 1) + 1);
    model.branch_sets.push_back(pair);
  }
  return model;
}

}  // namespace ktfree

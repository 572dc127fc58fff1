#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ktfree/bigint.hpp"
#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"

namespace ktfree {

/// Part sizes of a complete multipartite graph K_{n_1,...,n_c}, kept sorted non-increasing.
class MultipartiteSpec {
 public:
  explicit MultipartiteSpec(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ArgumentError("multipartite spec needs at least one part");
    for (auto p : parts_)
      if (p < 1) throw ArgumentError("multipartite part sizes must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (auto p : parts_) order_ += p;
  }

  /// c copies of part size 2, preceded by `singletons` parts of size 1 (K_{1,..,1,c x 2}).
  static MultipartiteSpec pairs(std::int64_t c, std::int64_t singletons = 0) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(c), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(singletons), 1);
    return MultipartiteSpec(std::move(parts));
  }

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t order() const { return order_; }
  std::int64_t part_count() const { return static_cast<std::int64_t>(parts_.size()); }
  std::int64_t largest_part() const { return parts_.front(); }

  /// Average part size n/c.
  Rational average_part_size() const { return Rational(order_, part_count()); }

  /// floor((n+c)/2) <= n - n_1 + 1.
  bool balanced() const { return (order_ + part_count()) / 2 <= order_ - largest_part() + 1; }

  /// Least t with the graph K_t-minor-free: min{floor((n+c)/2) + 1, n - n_1 + 2}.
  std::int64_t minor_free_order() const {
    return std::min((order_ + part_count()) / 2 + 1, order_ - largest_part() + 2);
  }

  /// prod (n_i + 1).
  BigInt total_cliques() const {
    BigInt r = 1;
    for (auto p : parts_) r *= p + 1;
    return r;
  }

  /// e_k(n_1, ..., n_c) for k = 0..c.
  std::vector<BigInt> kclique_counts() const { return elementary_symmetric(parts_); }

  std::string name() const {
    std::string s = "K_{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "}";
  }

  bool operator==(const MultipartiteSpec&) const = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t order_ = 0;
};

/// Parts are laid out consecutively in the given (sorted) order: part 0 is {0..n_1-1}, and so on.
inline Graph complete_multipartite(const MultipartiteSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.order());
  Graph g(n);
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t i = 0; i < spec.parts().size(); ++i)
    part_of.insert(part_of.end(), static_cast<std::size_t>(spec.parts()[i]), i);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

/// Part sizes of the Turán graph T(n, t-1); the first n mod (t-1) parts get the extra vertex.
inline std::vector<std::int64_t> turan_parts(std::size_t n, std::size_t t) {
  if (t < 2) throw ArgumentError("turan_graph needs t >= 2");
  const std::size_t r = t - 1;
  std::vector<std::int64_t> parts;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t size = n / r + (i < n % r ? 1 : 0);
    if (size > 0) parts.push_back(static_cast<std::int64_t>(size));
  }
  return parts;
}

/// Balanced complete (t-1)-partite graph on n vertices.
inline Graph turan_graph(std::size_t n, std::size_t t) {
  const auto parts = turan_parts(n, t);
  if (parts.empty()) return Graph(0);
  return complete_multipartite(MultipartiteSpec(parts));
}

/// l-tree on n vertices grown from K_l. Without a seed every new vertex joins the l most recent
/// vertices (a path-like l-tree); with a seed it joins an l-clique drawn uniformly from all
/// l-cliques present so far.
inline Graph ell_tree(std::size_t ell, std::size_t n, std::optional<std::uint64_t> seed = std::nullopt) {
  if (ell < 1) throw ArgumentError("ell_tree needs l >= 1");
  if (n < ell) throw ArgumentError("ell_tree needs n >= l");
  Graph g = complete_graph(ell);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);

  if (!seed) {
    for (Vertex v = ell; v < n; ++v)
      for (Vertex u = v - ell; u < v; ++u) out.add_edge(u, v);
    return out;
  }

  std::mt19937_64 rng(*seed);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base(ell);
  for (Vertex i = 0; i < ell; ++i) base[i] = i;
  cliques.push_back(base);
  for (Vertex v = ell; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const std::vector<Vertex> host = cliques[pick(rng)];
    for (Vertex u : host) out.add_edge(u, v);
    for (std::size_t drop = 0; drop < ell; ++drop) {
      std::vector<Vertex> fresh = host;
      fresh[drop] = v;
      cliques.push_back(std::move(fresh));
    }
  }
  return out;
}

/// Lexicographically least k-clique (as a sorted vertex list), if any.
inline std::optional<std::vector<Vertex>> least_clique(const Graph& g, std::size_t k) {
  std::vector<Vertex> chosen;
  auto search = [&](auto&& self, VertexSet candidates) -> bool {
    if (chosen.size() == k) return true;
    while (candidates.any() && chosen.size() + candidates.count() >= k) {
      const Vertex v = candidates.first();
      candidates.reset(v);
      chosen.push_back(v);
      if (self(self, candidates & g.neighbors(v))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, g.vertices())) return chosen;
  return std::nullopt;
}

enum class PasteRule {
  /// Every copy is glued onto the least k-clique of the original base copy.
  kBaseClique,
  /// Every copy is glued onto the image of the least k-clique in the previous copy, away from
  /// the shared clique when possible (a chain of copies).
  kChain,
};

struct CockadeSpec {
  Graph base;
  std::size_t k = 0;
  std::size_t copies = 1;
  PasteRule rule = PasteRule::kBaseClique;
};

/// (H,k)-cockade made of `copies` copies of H.
inline Graph cockade(const CockadeSpec& spec) {
  if (spec.copies < 1) throw ArgumentError("cockade needs at least one copy");
  const auto clique = least_clique(spec.base, spec.k);
  if (!clique) throw PreconditionError("cockade base has no " + std::to_string(spec.k) + "-clique");
  const std::size_t h = spec.base.order();
  const std::size_t total = h + (spec.copies - 1) * (h - spec.k);
  if (total > kMaxVertices) throw CapacityError("cockade order " + std::to_string(total) + " exceeds vertex cap");

  Graph g = spec.base;
  // Label of each base vertex inside the most recently added copy.
  std::vector<Vertex> latest(h);
  for (Vertex v = 0; v < h; ++v) latest[v] = v;
  for (std::size_t copy = 1; copy < spec.copies; ++copy) {
    std::vector<Vertex> host;
    if (spec.rule == PasteRule::kBaseClique) {
      host = *clique;
    } else {
      // Glue onto the copy's least k-clique that avoids the previous attachment when the
      // base allows it; fall back to the least clique.
      host.clear();
      for (Vertex v : *clique) host.push_back(latest[v]);
      std::vector<Vertex> fresh_vertices;
      for (Vertex v = 0; v < h; ++v)
        if (std::find(clique->begin(), clique->end(), v) == clique->end()) fresh_vertices.push_back(v);
      VertexSet fresh_set;
      for (Vertex v : fresh_vertices) fresh_set.set(v);
      if (auto alt = least_clique(spec.base.induced(fresh_set), spec.k)) {
        host.clear();
        for (Vertex i : *alt) host.push_back(latest[fresh_vertices[i]]);
      }
    }
    const std::size_t before = g.order();
    g = paste(g, spec.base, host, *clique);
    // paste() appends the non-identified base vertices in increasing order.
    Vertex next = before;
    for (Vertex v = 0; v < h; ++v) {
      const auto it = std::find(clique->begin(), clique->end(), v);
      latest[v] = it != clique->end() ? host[static_cast<std::size_t>(it - clique->begin())] : next++;
    }
  }
  return g;
}

}  // namespace ktfree

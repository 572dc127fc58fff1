#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ktfree/bigint.hpp"
#include "ktfree/graph.hpp"
#include "ktfree/parallel.hpp"

namespace ktfree {

/// counts[k] = number of k-cliques, for k = 0..omega(G). Trailing zeros are always trimmed,
/// so two vectors compare equal iff they agree for every k.
class CliqueVector {
 public:
  CliqueVector() : counts_{1} {}

  explicit CliqueVector(std::vector<BigInt> counts) : counts_(std::move(counts)) { trim(); }

  /// Number of k-cliques; zero above the clique number.
  BigInt operator[](std::size_t k) const { return k < counts_.size() ? counts_[k] : BigInt(0); }

  /// Largest k with a k-clique.
  std::size_t clique_number() const { return counts_.size() - 1; }

  std::size_t size() const { return counts_.size(); }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  const std::vector<BigInt>& counts() const { return counts_; }

  std::vector<std::string> decimal() const {
    std::vector<std::string> out;
    out.reserve(counts_.size());
    for (const auto& c : counts_) out.push_back(c.str());
    return out;
  }

  bool operator==(const CliqueVector&) const = default;

 private:
  void trim() {
    while (counts_.size() > 1 && counts_.back() == 0) counts_.pop_back();
    if (counts_.empty()) counts_.push_back(1);
  }

  std::vector<BigInt> counts_;
};

namespace detail {

/// Per-depth counters: machine words on the hot path, spilling into big integers on overflow.
class CliqueTally {
 public:
  explicit CliqueTally(std::size_t depth) : fast_(depth + 2, 0), slow_(depth + 2, 0) {}

  void add(std::size_t k, std::uint64_t v) {
    if (__builtin_add_overflow(fast_[k], v, &fast_[k])) {
      slow_[k] += BigInt(fast_[k]) + (BigInt(1) << 64);
      fast_[k] = 0;
    }
  }

  void add(std::size_t k, const BigInt& v) { slow_[k] += v; }

  void merge_into(std::vector<BigInt>& out) const {
    for (std::size_t k = 0; k < fast_.size(); ++k) out[k] += slow_[k] + fast_[k];
  }

 private:
  std::vector<std::uint64_t> fast_;
  std::vector<BigInt> slow_;
};

/// Pascal rows up to the vertex cap, stored as big integers plus a machine-word copy when it fits.
struct BinomialTable {
  BinomialTable() : big(kMaxVertices + 1), small(kMaxVertices + 1), fits(kMaxVertices + 1) {
    for (std::size_t n = 0; n <= kMaxVertices; ++n) {
      big[n].assign(n + 1, 1);
      small[n].assign(n + 1, 1);
      fits[n].assign(n + 1, true);
      for (std::size_t k = 1; k < n; ++k) {
        big[n][k] = big[n - 1][k - 1] + big[n - 1][k];
        fits[n][k] = big[n][k] <= std::numeric_limits<std::uint64_t>::max();
        small[n][k] = fits[n][k] ? static_cast<std::uint64_t>(big[n][k]) : 0;
      }
    }
  }
  std::vector<std::vector<BigInt>> big;
  std::vector<std::vector<std::uint64_t>> small;
  std::vector<std::vector<bool>> fits;
};

inline const BinomialTable& binomials() {
  static const BinomialTable table;
  return table;
}

class CliqueCounter {
 public:
  CliqueCounter(const Graph& g, const std::vector<VertexSet>& forward, CliqueTally& tally)
      : g_(g), forward_(forward), tally_(tally) {}

  /// Counts every clique R + S with S a non-empty subset of candidates, where |R| = depth and
  /// candidates are the common later neighbours of R.
  void extend(const VertexSet& candidates, std::size_t depth) {
    if (candidates.none()) return;
    if (g_.is_clique(candidates)) {
      const std::size_t size = candidates.count();
      const auto& table = binomials();
      for (std::size_t j = 1; j <= size; ++j) {
        if (table.fits[size][j])
          tally_.add(depth + j, table.small[size][j]);
        else
          tally_.add(depth + j, table.big[size][j]);
      }
      return;
    }
    for (Vertex u : candidates) {
      tally_.add(depth + 1, 1);
      extend(candidates & forward_[u], depth + 1);
    }
  }

 private:
  const Graph& g_;
  const std::vector<VertexSet>& forward_;
  CliqueTally& tally_;
};

}  // namespace detail

/// Exact k-clique counts for every k.
///
/// Vertices are processed along a degeneracy order; each clique is counted once, from its
/// earliest vertex, by recursing into common forward neighbourhoods. Candidate sets that are
/// already cliques are finished off with binomial coefficients.
inline CliqueVector clique_vector(const Graph& g, unsigned threads = 1) {
  const std::size_t n = g.order();
  const Degeneracy dg = degeneracy(g);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[dg.order[i]] = i;
  std::vector<VertexSet> forward(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (position[u] > position[v]) forward[v].set(u);

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1)));
  std::vector<detail::CliqueTally> tallies(workers, detail::CliqueTally(dg.degeneracy + 1));
  parallel_for(n, workers, [&](unsigned worker, std::size_t i) {
    const Vertex v = dg.order[i];
    tallies[worker].add(1, 1);
    detail::CliqueCounter(g, forward, tallies[worker]).extend(forward[v], 1);
  });

  std::vector<BigInt> counts(dg.degeneracy + 3, 0);
  for (const auto& t : tallies) t.merge_into(counts);
  counts[0] = 1;
  return CliqueVector(std::move(counts));
}

inline BigInt count_cliques_k(const Graph& g, std::size_t k) { return clique_vector(g)[k]; }

namespace detail {

inline void grow_max_clique(const Graph& g, VertexSet candidates, std::size_t size, std::size_t& best) {
  if (candidates.none()) {
    best = std::max(best, size);
    return;
  }
  while (candidates.any()) {
    if (size + candidates.count() <= best) return;
    const Vertex v = candidates.first();
    candidates.reset(v);
    grow_max_clique(g, candidates & g.neighbors(v), size + 1, best);
  }
}

}  // namespace detail

/// Clique number, by branch and bound with the |R| + |P| bound.
inline std::size_t max_clique(const Graph& g) {
  std::size_t best = 0;
  const Degeneracy dg = degeneracy(g);
  VertexSet later = g.vertices();
  for (Vertex v : dg.order) {
    later.reset(v);
    detail::grow_max_clique(g, later & g.neighbors(v), 1, best);
  }
  return best;
}

}  // namespace ktfree

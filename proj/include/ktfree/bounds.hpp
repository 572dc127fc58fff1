#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ktfree/bigint.hpp"
#include "ktfree/constructions.hpp"
#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"

namespace ktfree {

// Closed-form clique counts and extremal values. Fractional formulas are evaluated as exact
// rationals and must come out integral; a non-integral result throws std::logic_error.

/// k-cliques in any l-tree on n vertices: C(l,k-1) (n - (l+1)(k-1)/k).
inline BigInt ell_tree_kcliques(std::int64_t ell, std::int64_t n, std::int64_t k) {
  if (ell < 1 || n < ell || k < 0) throw ArgumentError("ell_tree_kcliques needs l >= 1, n >= l, k >= 0");
  if (k == 0) return 1;
  const Rational value = Rational(binomial(ell, k - 1)) * (Rational(n) - Rational((ell + 1) * (k - 1), k));
  return require_integral(value, "ell_tree_kcliques");
}

/// Total cliques in any l-tree on n vertices: 2^l (n - l + 1).
inline BigInt ell_tree_total(std::int64_t ell, std::int64_t n) {
  if (ell < 1 || n < ell) throw ArgumentError("ell_tree_total needs l >= 1, n >= l");
  return pow2(ell) * (n - ell + 1);
}

/// C(t-2,k-1) (n - (k-1)(t-1)/k), attained by (t-2)-trees.
inline BigInt lower_bound_kcliques(std::int64_t n, std::int64_t t, std::int64_t k) {
  if (!(t > k && k >= 1) || n < t - 2) throw ArgumentError("lower_bound_kcliques needs n >= t-2 and t > k >= 1");
  if (t == 2) return n;
  return ell_tree_kcliques(t - 2, n, k);
}

/// 2^{t-2} (n - t + 3).
inline BigInt lower_bound_total(std::int64_t n, std::int64_t t) {
  if (t < 2 || n < t - 2) throw ArgumentError("lower_bound_total needs t >= 2 and n >= t-2");
  return pow2(t - 2) * (n - t + 3);
}

enum class WitnessFamily {
  kEllTree,
  kCockadeK22222,
  kCockadeK122222,
  kK22233,
  kCompleteGraph,
};

inline std::string_view witness_family_name(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::kEllTree:
      return "ell-tree";
    case WitnessFamily::kCockadeK22222:
      return "cockade(K_{2,2,2,2,2},5)";
    case WitnessFamily::kCockadeK122222:
      return "cockade(K_{1,2,2,2,2,2},6)";
    case WitnessFamily::kK22233:
      return "K_{2,2,2,3,3}";
    case WitnessFamily::kCompleteGraph:
      return "complete-graph";
  }
  return "unknown";
}

/// Maximum number of k-cliques (or of all cliques when k is empty) in a K_t-minor-free graph
/// on n vertices.
struct ExtremalRecord {
  std::int64_t t = 0;
  std::optional<std::int64_t> k;
  std::int64_t n = 0;
  BigInt value;
  bool exceptional = false;
  WitnessFamily witness = WitnessFamily::kEllTree;
};

/// Orders n at which the k-clique maximum for K_t-minor-free graphs exceeds the (t-2)-tree
/// count by one:
///   (8,2): (K_{2,2,2,2,2},5)-cockades, n = 10, 15, 20, ...
///   (9,2): (K_{1,2,2,2,2,2},6)-cockades, n = 11, 16, 21, ..., and K_{2,2,2,3,3} at n = 12
///   (9,3): K_{1,2,2,2,2,2} at n = 11
inline std::optional<WitnessFamily> exceptional_witness(std::int64_t n, std::int64_t t, std::int64_t k) {
  if (t == 8 && k == 2 && n >= 10 && n % 5 == 0) return WitnessFamily::kCockadeK22222;
  if (t == 9 && k == 2) {
    if (n == 12) return WitnessFamily::kK22233;
    if (n >= 11 && n % 5 == 1) return WitnessFamily::kCockadeK122222;
  }
  if (t == 9 && k == 3 && n == 11) return WitnessFamily::kCockadeK122222;
  return std::nullopt;
}

inline void check_exact_range(std::int64_t t) {
  if (t < 3 || t > 9)
    throw UnsupportedError("exact extremal values are known only for 3 <= t <= 9 (got t = " + std::to_string(t) + ")");
}

inline ExtremalRecord extremal_kcliques(std::int64_t n, std::int64_t t, std::int64_t k) {
  check_exact_range(t);
  if (k < 1 || k > t - 1) throw ArgumentError("extremal_kcliques needs 1 <= k <= t-1");
  if (n < 1) throw ArgumentError("extremal_kcliques needs n >= 1");
  ExtremalRecord r{t, k, n, 0, false, WitnessFamily::kEllTree};
  if (n <= t - 1) {
    r.value = binomial(n, k);
    r.witness = WitnessFamily::kCompleteGraph;
    return r;
  }
  r.value = lower_bound_kcliques(n, t, k);
  if (auto family = exceptional_witness(n, t, k)) {
    r.value += 1;
    r.exceptional = true;
    r.witness = *family;
  }
  return r;
}

inline ExtremalRecord extremal_total(std::int64_t n, std::int64_t t) {
  check_exact_range(t);
  if (n < 1) throw ArgumentError("extremal_total needs n >= 1");
  ExtremalRecord r{t, std::nullopt, n, 0, false, WitnessFamily::kEllTree};
  if (n <= t - 1) {
    r.value = pow2(n);
    r.witness = WitnessFamily::kCompleteGraph;
  } else {
    r.value = lower_bound_total(n, t);
  }
  return r;
}

/// Graph attaining an extremal record's value.
inline Graph extremal_witness_graph(std::int64_t n, std::int64_t t, WitnessFamily family) {
  switch (family) {
    case WitnessFamily::kCompleteGraph:
      return complete_graph(static_cast<std::size_t>(n));
    case WitnessFamily::kEllTree:
      return ell_tree(static_cast<std::size_t>(t - 2), static_cast<std::size_t>(n));
    case WitnessFamily::kCockadeK22222:
      if (n < 10 || n % 5 != 0) throw ArgumentError("no (K_{2,2,2,2,2},5)-cockade on " + std::to_string(n) + " vertices");
      return cockade({complete_multipartite(MultipartiteSpec::pairs(5)), 5, static_cast<std::size_t>((n - 5) / 5)});
    case WitnessFamily::kCockadeK122222:
      if (n < 11 || n % 5 != 1)
        throw ArgumentError("no (K_{1,2,2,2,2,2},6)-cockade on " + std::to_string(n) + " vertices");
      return cockade({complete_multipartite(MultipartiteSpec::pairs(5, 1)), 6, static_cast<std::size_t>((n - 6) / 5)});
    case WitnessFamily::kK22233:
      if (n != 12) throw ArgumentError("K_{2,2,2,3,3} has 12 vertices");
      return complete_multipartite(MultipartiteSpec({2, 2, 2, 3, 3}));
  }
  throw ArgumentError("unknown witness family");
}

/// Zykov: k-cliques in an n-vertex graph with no K_t subgraph, at most C(t-1,k) (n/(t-1))^k.
inline Rational zykov_kcliques(std::int64_t n, std::int64_t t, std::int64_t k) {
  if (!(t > k && k >= 0) || n < k) throw ArgumentError("zykov_kcliques needs t > k >= 0 and n >= k");
  Rational part(n, t - 1);
  Rational power = 1;
  for (std::int64_t i = 0; i < k; ++i) power *= part;
  return Rational(binomial(t - 1, k)) * power;
}

/// Zykov: (n/(t-1) + 1)^{t-1}.
inline Rational zykov_total(std::int64_t n, std::int64_t t) {
  if (t < 2 || n < 0) throw ArgumentError("zykov_total needs t >= 2 and n >= 0");
  const Rational base = Rational(n, t - 1) + 1;
  Rational power = 1;
  for (std::int64_t i = 0; i < t - 1; ++i) power *= base;
  return power;
}

/// k-cliques after pasting two graphs on an r-clique: c1 + c2 - C(r,k).
inline BigInt paste_count_k(const BigInt& c1, const BigInt& c2, std::int64_t r, std::int64_t k) {
  if (!(r >= k && k >= 0)) throw ArgumentError("paste_count_k needs r >= k >= 0");
  return c1 + c2 - binomial(r, k);
}

/// Total cliques after pasting two graphs on an r-clique: c1 + c2 - 2^r.
inline BigInt paste_count_total(const BigInt& c1, const BigInt& c2, std::int64_t r) {
  if (r < 0) throw ArgumentError("paste_count_total needs r >= 0");
  return c1 + c2 - pow2(r);
}

inline void check_cockade_order(std::int64_t c, std::int64_t n) {
  if (c < 1 || n < 2 * c || n % c != 0)
    throw ArgumentError("no (K_{c x 2},c)-cockade with c = " + std::to_string(c) + " on " + std::to_string(n) +
                        " vertices");
}

/// k-cliques in any (K_{c x 2},c)-cockade on n vertices: (1/c) C(c,k) (2^k - 1)(n - c) + C(c,k).
inline BigInt cockade_cliques(std::int64_t c, std::int64_t n, std::int64_t k) {
  check_cockade_order(c, n);
  if (k < 0 || k > c) throw ArgumentError("cockade_cliques needs 0 <= k <= c");
  const BigInt ck = binomial(c, k);
  const Rational value = Rational(ck * (pow2(k) - 1) * (n - c), c) + Rational(ck);
  return require_integral(value, "cockade_cliques");
}

/// Total cliques in any (K_{c x 2},c)-cockade on n vertices: (1/c)(3^c - 2^c)(n - c) + 2^c.
inline BigInt cockade_total(std::int64_t c, std::int64_t n) {
  check_cockade_order(c, n);
  const Rational value =
      Rational((ipow(3, static_cast<std::uint64_t>(c)) - pow2(c)) * (n - c), c) + Rational(pow2(c));
  return require_integral(value, "cockade_total");
}

/// k-cliques in a d-degenerate graph on n >= d+1 vertices: at most C(d,k-1)(n - (k-1)(d+1)/k).
inline BigInt degenerate_bound(std::int64_t d, std::int64_t n, std::int64_t k) {
  if (d < 0 || n < d + 1 || k < 1) throw ArgumentError("degenerate_bound needs d >= 0, n >= d+1, k >= 1");
  const Rational value = Rational(binomial(d, k - 1)) * (Rational(n) - Rational((k - 1) * (d + 1), k));
  return require_integral(value, "degenerate_bound");
}

/// Maximum number of K_{t-1} subgraphs in a K_t-minor-free graph: n - t + 2.
inline std::int64_t top_clique_bound(std::int64_t n, std::int64_t t) {
  if (t < 2 || n < t - 1) throw ArgumentError("top_clique_bound needs t >= 2 and n >= t-1");
  return n - t + 2;
}

/// Triangle bound 4m - 7n for 6-connected K_9-minor-free graphs.
inline std::int64_t triangle_bound_6conn(std::int64_t n, std::int64_t m) { return 4 * m - 7 * n; }

struct K222Condition {
  bool holds = false;
  BigInt lhs;
  BigInt rhs;
};

/// 2^{k+1} prod_{i<k} (c - i)  <=  (k+3) prod_{i<k} (3c/2 - i), for even c. Equivalent to
/// K_{c x 2} having at most the (t-2)-tree number of k-cliques with t = 3c/2 + 1.
inline K222Condition k222_condition(std::int64_t c, std::int64_t k) {
  if (c < 2 || c % 2 != 0) throw ArgumentError("k222_condition needs an even c >= 2");
  if (k < 1) throw ArgumentError("k222_condition needs k >= 1");
  K222Condition out;
  out.lhs = pow2(k + 1);
  out.rhs = k + 3;
  for (std::int64_t i = 1; i <= k - 1; ++i) {
    out.lhs *= c - i;
    out.rhs *= 3 * c / 2 - i;
  }
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace ktfree

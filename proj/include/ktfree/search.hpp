#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktfree/bigint.hpp"
#include "ktfree/bounds.hpp"
#include "ktfree/cliques.hpp"
#include "ktfree/constructions.hpp"
#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"
#include "ktfree/graph_io.hpp"
#include "ktfree/minors.hpp"
#include "ktfree/parallel.hpp"

namespace ktfree {

/// Complete multipartite graph whose clique count exceeds 2^{t-2}(n-t+3) at its own minor-free order t.
struct Violation {
  std::int64_t t = 0;
  MultipartiteSpec spec{{1}};
  BigInt cliques;
  BigInt bound;

  std::int64_t n() const { return spec.order(); }
  /// Recomputes both sides from the spec.
  bool reverifies() const {
    const std::int64_t order = spec.minor_free_order();
    return order == t && spec.total_cliques() == cliques && lower_bound_total(spec.order(), t) == bound &&
           cliques > bound;
  }
};

/// One member of a family scan.
struct FamilyRow {
  std::string family;
  std::int64_t c = 0;
  std::int64_t n = 0;
  std::int64_t t = 0;
  BigInt cliques;
  BigInt bound;
  bool violates = false;
};

struct SearchReport {
  std::string kind;
  std::int64_t t_max = 0;
  std::uint64_t candidates_examined = 0;
  /// Candidates per minor-free order t.
  std::map<std::int64_t, std::uint64_t> candidates_by_t;
  std::vector<Violation> violations;
  /// Least t among the violations.
  std::optional<std::int64_t> minimal_violating_t;
  /// Family scans only: least T such that every order t in [T, t_max] carried by some member
  /// has a violating member.
  std::optional<std::int64_t> sustained_threshold_t;
  std::vector<FamilyRow> rows;
  double runtime_seconds = 0;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct PartitionScan {
  std::int64_t n = 0;
  std::int64_t t = 0;
  BigInt bound;
  std::vector<std::int64_t> parts;
  std::uint64_t examined = 0;
  std::vector<Violation> violations;

  /// Non-increasing completions of `parts` with `count` more parts summing to `sum`, none above `cap`.
  void enumerate(std::int64_t sum, std::int64_t count, std::int64_t cap, const BigInt& product) {
    if (count == 0) {
      ++examined;
      if (product > bound) violations.push_back({t, MultipartiteSpec(parts), product, bound});
      return;
    }
    const std::int64_t hi = std::min(cap, sum - (count - 1));
    for (std::int64_t p = hi; p >= 1 && p * count >= sum; --p) {
      parts.push_back(p);
      enumerate(sum - p, count - 1, p, product * (p + 1));
      parts.pop_back();
    }
  }
};

}  // namespace detail

/// Every balanced complete multipartite graph (c >= 2 parts) with average part size below 3 and
/// minor-free order t <= t_max, checked against 2^{t-2}(n-t+3). Only such graphs can exceed
/// that bound; balanced graphs have t = floor((n+c)/2) + 1.
inline SearchReport multipartite_conjecture_scan(std::int64_t t_max, unsigned threads = 1) {
  if (t_max < 3) throw ArgumentError("multipartite_conjecture_scan needs t_max >= 3");
  detail::Stopwatch clock;
  SearchReport report;
  report.kind = "multipartite";
  report.t_max = t_max;

  // Part counts c with at least one candidate: n = c gives t = c + 1.
  const std::int64_t c_hi = t_max - 1;
  std::vector<std::vector<detail::PartitionScan>> per_c(static_cast<std::size_t>(std::max<std::int64_t>(c_hi - 1, 0)));
  parallel_for(per_c.size(), threads, [&](unsigned, std::size_t idx) {
    const std::int64_t c = static_cast<std::int64_t>(idx) + 2;
    for (std::int64_t n = c; n < 3 * c; ++n) {
      const std::int64_t t = (n + c) / 2 + 1;
      if (t > t_max) break;
      const std::int64_t largest = std::min(n - c + 1, n + 1 - (n + c) / 2);
      detail::PartitionScan scan;
      scan.n = n;
      scan.t = t;
      scan.bound = lower_bound_total(n, t);
      scan.enumerate(n, c, largest, BigInt(1));
      per_c[idx].push_back(std::move(scan));
    }
  });

  for (auto& scans : per_c) {
    for (auto& scan : scans) {
      report.candidates_examined += scan.examined;
      if (scan.examined > 0) report.candidates_by_t[scan.t] += scan.examined;
      for (auto& v : scan.violations) report.violations.push_back(std::move(v));
    }
  }
  for (const auto& v : report.violations)
    if (!report.minimal_violating_t || v.t < *report.minimal_violating_t) report.minimal_violating_t = v.t;
  report.runtime_seconds = clock.seconds();
  return report;
}

enum class PairsFamily {
  kPairs,         // K_{c x 2}
  kOnePlusPairs,  // K_{1, c x 2}
  kTwoPlusPairs,  // K_{1,1, c x 2}
};

inline std::string family_name(PairsFamily f) {
  switch (f) {
    case PairsFamily::kPairs:
      return "K_{c x 2}";
    case PairsFamily::kOnePlusPairs:
      return "K_{1,c x 2}";
    case PairsFamily::kTwoPlusPairs:
      return "K_{1,1,c x 2}";
  }
  return "unknown";
}

inline std::int64_t family_singletons(PairsFamily f) {
  switch (f) {
    case PairsFamily::kPairs:
      return 0;
    case PairsFamily::kOnePlusPairs:
      return 1;
    case PairsFamily::kTwoPlusPairs:
      return 2;
  }
  return 0;
}

/// Scans K_{c x 2}-type families for c = 1, 2, ... while the member's minor-free order is at
/// most t_max, using the closed-form totals 3^c, 2*3^c, 4*3^c.
inline SearchReport family_threshold_scan(const std::vector<PairsFamily>& families, std::int64_t t_max) {
  if (t_max < 3) throw ArgumentError("family_threshold_scan needs t_max >= 3");
  detail::Stopwatch clock;
  SearchReport report;
  report.kind = "family";
  report.t_max = t_max;

  for (PairsFamily family : families) {
    const std::int64_t singles = family_singletons(family);
    for (std::int64_t c = 1;; ++c) {
      const MultipartiteSpec spec = MultipartiteSpec::pairs(c, singles);
      const std::int64_t t = spec.minor_free_order();
      if (t > t_max) break;
      FamilyRow row;
      row.family = family_name(family);
      row.c = c;
      row.n = spec.order();
      row.t = t;
      row.cliques = ipow(3, static_cast<std::uint64_t>(c)) * pow2(singles);
      row.bound = lower_bound_total(row.n, t);
      row.violates = row.cliques > row.bound;
      ++report.candidates_examined;
      ++report.candidates_by_t[t];
      if (row.violates) report.violations.push_back({t, spec, row.cliques, row.bound});
      report.rows.push_back(std::move(row));
    }
  }

  for (const auto& v : report.violations)
    if (!report.minimal_violating_t || v.t < *report.minimal_violating_t) report.minimal_violating_t = v.t;

  std::map<std::int64_t, bool> covered;
  for (const auto& row : report.rows) covered[row.t] = covered[row.t] || row.violates;
  for (auto it = covered.rbegin(); it != covered.rend() && it->second; ++it) report.sustained_threshold_t = it->first;

  report.runtime_seconds = clock.seconds();
  return report;
}

inline SearchReport family_threshold_scan(PairsFamily family, std::int64_t t_max) {
  return family_threshold_scan(std::vector<PairsFamily>{family}, t_max);
}

struct LambdaRow {
  std::int64_t c = 0;
  std::int64_t t = 0;
  /// Least k such that the K_{c x 2} condition holds for every k' in [k, c].
  std::int64_t k_min = 0;
  /// Values of k in 1..c where the condition fails.
  std::vector<std::int64_t> failing_k;
  /// The condition and the direct comparison C(c,k) 2^k <= lower_bound_kcliques(2c, t, k)
  /// agreed for every k.
  bool routes_agree = true;

  Rational ratio() const { return Rational(k_min, c); }
};

struct LambdaReport {
  std::int64_t c_max = 0;
  std::vector<LambdaRow> rows;
  double runtime_seconds = 0;

  bool routes_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const LambdaRow& r) { return r.routes_agree; });
  }
};

/// For every even c in [2, c_max], where K_{c x 2} meets the (t-2)-tree k-clique bound with
/// t = 3c/2 + 1.
inline LambdaReport lambda_scan(std::int64_t c_max, unsigned threads = 1) {
  if (c_max < 4 || c_max % 2 != 0) throw ArgumentError("lambda_scan needs an even c_max >= 4");
  detail::Stopwatch clock;
  LambdaReport report;
  report.c_max = c_max;
  report.rows.resize(static_cast<std::size_t>(c_max / 2));
  parallel_for(report.rows.size(), threads, [&](unsigned, std::size_t idx) {
    LambdaRow& row = report.rows[idx];
    row.c = 2 * (static_cast<std::int64_t>(idx) + 1);
    row.t = 3 * row.c / 2 + 1;
    row.k_min = row.c + 1;
    bool suffix_holds = true;
    for (std::int64_t k = row.c; k >= 1; --k) {
      const bool holds = k222_condition(row.c, k).holds;
      const bool direct = binomial(row.c, k) * pow2(k) <= lower_bound_kcliques(2 * row.c, row.t, k);
      if (holds != direct) row.routes_agree = false;
      if (!holds) row.failing_k.push_back(k);
      suffix_holds = suffix_holds && holds;
      if (suffix_holds) row.k_min = k;
    }
    std::reverse(row.failing_k.begin(), row.failing_k.end());
  });
  report.runtime_seconds = clock.seconds();
  return report;
}

struct ExhaustiveOptions {
  bool allow_slow = false;
  unsigned threads = 1;
  MinorOptions minor;
};

/// Maxima of clique counts over all labelled K_t-minor-free graphs on n vertices.
struct ExhaustiveTable {
  std::int64_t n = 0;
  std::int64_t t = 0;
  /// max_k[k] for k = 0..t-1, with the lowest-mask graph attaining it.
  std::vector<BigInt> max_k;
  std::vector<std::string> argmax_k;
  BigInt max_total;
  std::string argmax_total;
  std::uint64_t graphs = 0;
  std::uint64_t minor_free = 0;
  std::uint64_t edge_maximal = 0;
  std::uint64_t minor_tests = 0;
};

/// Exhaustive maxima over all 2^{C(n,2)} labelled graphs. n <= 6 by default; n = 7 needs
/// allow_slow.
///
/// Edge subsets are visited in increasing mask order, so every single-edge deletion has
/// already been classified and "contains a K_t minor" propagates upwards without a search.
/// Only edge-maximal minor-free graphs are counted, since adding edges never loses cliques.
inline ExhaustiveTable exhaustive_extremal(std::int64_t n, std::int64_t t, const ExhaustiveOptions& options = {}) {
  if (n < 0 || t < 1) throw ArgumentError("exhaustive_extremal needs n >= 0 and t >= 1");
  const std::int64_t limit = options.allow_slow ? 7 : 6;
  if (n > limit)
    throw CapacityError("exhaustive_extremal is limited to n <= " + std::to_string(limit) +
                        (options.allow_slow ? "" : " (n = 7 needs allow_slow)"));

  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  const std::size_t m = slots.size();
  const std::uint64_t total = std::uint64_t{1} << m;

  auto build = [&](std::uint64_t mask) {
    Graph g(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1U) g.add_edge(slots[e].first, slots[e].second);
    return g;
  };

  ExhaustiveTable table;
  table.n = n;
  table.t = t;
  table.graphs = total;

  std::vector<std::uint8_t> has_minor(total, 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool inherited = false;
    for (std::uint64_t rest = mask; rest != 0 && !inherited; rest &= rest - 1)
      inherited = has_minor[mask ^ (rest & (~rest + 1))] != 0;
    if (inherited) {
      has_minor[mask] = 1;
      continue;
    }
    ++table.minor_tests;
    has_minor[mask] = has_kt_minor(build(mask), static_cast<std::size_t>(t), options.minor).found ? 1 : 0;
  }

  struct Best {
    std::vector<BigInt> k;
    std::vector<std::uint64_t> k_mask;
    BigInt total = -1;
    std::uint64_t total_mask = 0;
    std::uint64_t minor_free = 0;
    std::uint64_t maximal = 0;
  };
  const auto rows = static_cast<std::size_t>(t);
  const unsigned workers = resolve_threads(options.threads);
  std::vector<Best> best(workers);
  for (auto& b : best) {
    b.k.assign(rows, -1);
    b.k_mask.assign(rows, 0);
  }
  const std::uint64_t full = total - 1;
  const std::uint64_t stripes = std::min<std::uint64_t>(total, 256);
  parallel_for(stripes, workers, [&](unsigned w, std::size_t stripe) {
    Best& mine = best[w];
    for (std::uint64_t mask = stripe; mask < total; mask += stripes) {
      if (has_minor[mask]) continue;
      ++mine.minor_free;
      bool maximal = true;
      for (std::uint64_t missing = full & ~mask; missing != 0 && maximal; missing &= missing - 1)
        maximal = has_minor[mask | (missing & (~missing + 1))] != 0;
      if (!maximal) continue;
      ++mine.maximal;
      const CliqueVector cv = clique_vector(build(mask));
      for (std::size_t k = 0; k < rows; ++k) {
        const BigInt value = cv[k];
        if (value > mine.k[k] || (value == mine.k[k] && mask < mine.k_mask[k])) {
          mine.k[k] = value;
          mine.k_mask[k] = mask;
        }
      }
      const BigInt sum = cv.total();
      if (sum > mine.total || (sum == mine.total && mask < mine.total_mask)) {
        mine.total = sum;
        mine.total_mask = mask;
      }
    }
  });

  Best merged = best[0];
  for (std::size_t w = 1; w < best.size(); ++w) {
    const Best& b = best[w];
    for (std::size_t k = 0; k < rows; ++k)
      if (b.k[k] > merged.k[k] || (b.k[k] == merged.k[k] && b.k_mask[k] < merged.k_mask[k])) {
        merged.k[k] = b.k[k];
        merged.k_mask[k] = b.k_mask[k];
      }
    if (b.total > merged.total || (b.total == merged.total && b.total_mask < merged.total_mask)) {
      merged.total = b.total;
      merged.total_mask = b.total_mask;
    }
    merged.minor_free += b.minor_free;
    merged.maximal += b.maximal;
  }

  table.minor_free = merged.minor_free;
  table.edge_maximal = merged.maximal;
  table.max_k = merged.k;
  for (auto mask : merged.k_mask) table.argmax_k.push_back(encode_graph6(build(mask)));
  table.max_total = merged.total;
  table.argmax_total = encode_graph6(build(merged.total_mask));
  return table;
}

struct VerifyConfig {
  std::int64_t t = 5;
  std::int64_t n_min = 1;
  std::int64_t n_max = 6;
  /// Cross-check against exhaustive_extremal where it is feasible.
  bool oracle = false;
  bool allow_slow = false;
  /// Witnesses up to this order are also checked to be K_t-minor-free by exact search.
  std::size_t minor_check_max_order = 12;
  unsigned threads = 1;
};

struct VerifyRow {
  std::int64_t n = 0;
  /// Empty for the total-clique row.
  std::optional<std::int64_t> k;
  BigInt expected;
  bool exceptional = false;
  std::string witness_family;
  std::string witness_graph6;
  BigInt attained;
  std::optional<BigInt> oracle;
  std::optional<bool> witness_minor_free;
  bool pass = true;
  std::string reproducer;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<VerifyRow> rows;
  double runtime_seconds = 0;

  bool pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; }));
  }
};

/// Checks extremal_kcliques/extremal_total for one t over a range of n: the designated witness
/// must attain each value exactly, be K_t-minor-free where exact search is cheap, and agree with
/// the exhaustive oracle when enabled.
inline VerifyReport verify_theorem_suite(const VerifyConfig& config) {
  check_exact_range(config.t);
  if (config.n_min < 1 || config.n_max < config.n_min) throw ArgumentError("verify needs 1 <= n_min <= n_max");
  detail::Stopwatch clock;
  VerifyReport report;
  report.config = config;
  const std::int64_t t = config.t;
  const std::int64_t oracle_limit = config.allow_slow ? 7 : 6;

  for (std::int64_t n = config.n_min; n <= config.n_max; ++n) {
    std::optional<ExhaustiveTable> oracle;
    if (config.oracle && n <= oracle_limit)
      oracle = exhaustive_extremal(n, t, {config.allow_slow, config.threads, {}});

    std::map<WitnessFamily, std::pair<Graph, CliqueVector>> witnesses;
    std::map<WitnessFamily, bool> minor_free;
    auto witness = [&](WitnessFamily family) -> const std::pair<Graph, CliqueVector>& {
      auto it = witnesses.find(family);
      if (it == witnesses.end()) {
        Graph g = extremal_witness_graph(n, t, family);
        CliqueVector cv = clique_vector(g, config.threads);
        it = witnesses.emplace(family, std::make_pair(std::move(g), std::move(cv))).first;
      }
      return it->second;
    };
    auto check_minor_free = [&](WitnessFamily family) -> std::optional<bool> {
      const Graph& g = witness(family).first;
      if (g.order() > config.minor_check_max_order) return std::nullopt;
      auto it = minor_free.find(family);
      if (it == minor_free.end())
        it = minor_free.emplace(family, !has_kt_minor(g, static_cast<std::size_t>(t)).found).first;
      return it->second;
    };

    auto finish = [&](VerifyRow row, WitnessFamily family, const BigInt& attained) {
      row.witness_family = std::string(witness_family_name(family));
      row.witness_graph6 = encode_graph6(witness(family).first);
      row.attained = attained;
      row.witness_minor_free = check_minor_free(family);
      row.pass = row.attained == row.expected && row.witness_minor_free.value_or(true) &&
                 (!row.oracle || *row.oracle == row.expected);
      if (!row.pass) {
        row.reproducer = "bound --t " + std::to_string(t) + (row.k ? " --k " + std::to_string(*row.k) : " --total") +
                         " --n " + std::to_string(n) + "  # witness " + row.witness_graph6;
      }
      report.rows.push_back(std::move(row));
    };

    for (std::int64_t k = 1; k <= t - 1; ++k) {
      const ExtremalRecord rec = extremal_kcliques(n, t, k);
      VerifyRow row;
      row.n = n;
      row.k = k;
      row.expected = rec.value;
      row.exceptional = rec.exceptional;
      if (oracle) row.oracle = oracle->max_k[static_cast<std::size_t>(k)];
      finish(std::move(row), rec.witness, witness(rec.witness).second[static_cast<std::size_t>(k)]);
    }
    const ExtremalRecord rec = extremal_total(n, t);
    VerifyRow row;
    row.n = n;
    row.expected = rec.value;
    if (oracle) row.oracle = oracle->max_total;
    finish(std::move(row), rec.witness, witness(rec.witness).second.total());
  }
  report.runtime_seconds = clock.seconds();
  return report;
}

}  // namespace ktfree

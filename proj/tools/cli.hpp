#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ktfree/ktfree.hpp"

namespace ktfree::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2 };

namespace detail {

inline std::vector<std::int64_t> parse_list(const std::string& text, const std::string& what, char sep = ',') {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    std::int64_t value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last)
      throw ArgumentError("cannot parse " + what + " from '" + text + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

inline std::vector<std::int64_t> parse_tuple(const std::string& text, const std::string& what, std::size_t lo,
                                             std::size_t hi) {
  auto values = parse_list(text, what);
  if (values.size() < lo || values.size() > hi)
    throw ArgumentError(what + " expects " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                        " comma-separated integers");
  return values;
}

inline std::size_t non_negative(std::int64_t v, const std::string& what) {
  if (v < 0) throw ArgumentError(what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

/// A cockade base is either parts joined by '-' (a complete multipartite graph) or graph6.
inline Graph parse_base(const std::string& text) {
  if (!text.empty() && text.find_first_not_of("0123456789-") == std::string::npos)
    return complete_multipartite(MultipartiteSpec(parse_list(text, "cockade base parts", '-')));
  return decode_graph6(text);
}

inline std::vector<Graph> load_graphs(const std::string& path, std::istream& in) {
  if (path == "-") return read_graphs(in);
  std::ifstream file(path);
  if (!file) throw ArgumentError("cannot open '" + path + "'");
  return read_graphs(file);
}

}  // namespace detail

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Runs one command line (args excludes the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Clique counts, minor tests and extremal bounds for K_t-minor-free graphs", "ktfree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  unsigned threads = 0;
  std::string format;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string ell_tree_arg, multipartite_arg, cockade_arg, turan_arg, paste_rule = "base";
  std::optional<std::uint64_t> seed;
  auto* g_ell = gen->add_option("--ell-tree", ell_tree_arg, "L,N: l-tree on N vertices");
  auto* g_mp = gen->add_option("--multipartite", multipartite_arg, "a,b,c,...: complete multipartite graph");
  auto* g_ck = gen->add_option("--cockade", cockade_arg, "BASE,K,COPIES: BASE is parts joined by '-' or graph6");
  auto* g_tu = gen->add_option("--turan", turan_arg, "N,T: Turan graph T(N,T-1)");
  gen->add_option("--seed", seed, "Seed for random l-tree attachment (default: path-like l-tree)");
  gen->add_option("--paste-rule", paste_rule, "Cockade gluing rule")->check(CLI::IsMember({"base", "chain"}));
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"graph6", "json"}));
  for (auto* a : {g_ell, g_mp, g_ck, g_tu})
    for (auto* b : {g_ell, g_mp, g_ck, g_tu})
      if (a != b) a->excludes(b);

  // count
  auto* count = app.add_subcommand("count", "Count cliques of every size");
  std::string in_path;
  std::optional<std::int64_t> count_k;
  count->add_option("--in", in_path, "Input file, or - for stdin (graph6 lines or JSON)")->required();
  count->add_option("--k", count_k, "Report only k-cliques");
  count->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // minor
  auto* minor = app.add_subcommand("minor", "Exact K_t-minor test or Hadwiger number");
  std::optional<std::int64_t> minor_t;
  bool hadwiger = false, witness = false;
  std::size_t max_vertices = MinorOptions{}.max_vertices;
  minor->add_option("--in", in_path, "Input file, or - for stdin")->required();
  auto* m_t = minor->add_option("--t", minor_t, "Test for a K_t minor");
  auto* m_h = minor->add_flag("--hadwiger", hadwiger, "Compute the Hadwiger number");
  m_t->excludes(m_h);
  minor->add_flag("--witness", witness, "Include branch sets");
  minor->add_option("--max-vertices", max_vertices, "Refuse graphs larger than this (at most 64)");

  // bound
  auto* bound = app.add_subcommand("bound", "Closed-form bounds and extremal values");
  std::optional<std::int64_t> b_t, b_k, b_n;
  bool b_total = false;
  std::string zykov_arg, degen_arg, k222_arg;
  bound->add_option("--t", b_t, "Excluded minor K_t");
  bound->add_option("--k", b_k, "Clique size");
  bound->add_option("--n", b_n, "Number of vertices");
  bound->add_flag("--total", b_total, "All cliques instead of k-cliques");
  bound->add_option("--zykov", zykov_arg, "N,T[,K]: Zykov bound for K_t-subgraph-free graphs");
  bound->add_option("--degen", degen_arg, "D,N,K: k-clique bound for d-degenerate graphs");
  bound->add_option("--k222", k222_arg, "C,K: K_{c x 2} k-clique condition (c even)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check exact extremal values against witnesses and the oracle");
  std::int64_t v_t = 0, v_n_max = 0, v_n_min = 1;
  bool oracle = false, allow_slow = false;
  verify->add_option("--t", v_t, "Excluded minor K_t (3..9)")->required();
  verify->add_option("--n-max", v_n_max, "Largest order")->required();
  verify->add_option("--n-min", v_n_min, "Smallest order");
  verify->add_flag("--oracle", oracle, "Cross-check against exhaustive enumeration (n <= 6)");
  verify->add_flag("--allow-slow", allow_slow, "Let the oracle run at n = 7");

  // search
  auto* search = app.add_subcommand("search", "Computer searches");
  std::string scan, family = "c2", csv_path;
  std::int64_t t_max = 50, c_max = 200, s_n = 5, s_t = 4;
  search->add_option("--scan", scan, "Scan kind")
      ->required()
      ->check(CLI::IsMember({"multipartite", "family", "lambda", "exhaustive", "verify"}));
  search->add_option("--t-max", t_max, "Largest minor-free order (multipartite, family)");
  search->add_option("--c-max", c_max, "Largest even part count (lambda)");
  search->add_option("--n", s_n, "Order (exhaustive) or largest order (verify)");
  search->add_option("--t", s_t, "Excluded minor K_t (exhaustive, verify)");
  search->add_option("--family", family, "Family for the family scan")->check(CLI::IsMember({"c2", "1c2", "11c2", "all"}));
  search->add_flag("--allow-slow", allow_slow, "Permit n = 7 exhaustive runs");
  search->add_option("--csv", csv_path, "Also write per-row CSV to this path");

  std::vector<std::string> argv_store{"ktfree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const nlohmann::json& j) { io.out << j.dump() << "\n"; };

  try {
    if (gen->parsed()) {
      Graph g(0);
      if (!ell_tree_arg.empty()) {
        const auto v = detail::parse_tuple(ell_tree_arg, "--ell-tree", 2, 2);
        g = ell_tree(detail::non_negative(v[0], "L"), detail::non_negative(v[1], "N"), seed);
      } else if (!multipartite_arg.empty()) {
        g = complete_multipartite(MultipartiteSpec(detail::parse_list(multipartite_arg, "--multipartite")));
      } else if (!cockade_arg.empty()) {
        const auto comma = cockade_arg.find(',');
        if (comma == std::string::npos) throw ArgumentError("--cockade expects BASE,K,COPIES");
        const auto rest = detail::parse_tuple(cockade_arg.substr(comma + 1), "--cockade K,COPIES", 2, 2);
        CockadeSpec spec{detail::parse_base(cockade_arg.substr(0, comma)), detail::non_negative(rest[0], "K"),
                         detail::non_negative(rest[1], "COPIES"),
                         paste_rule == "chain" ? PasteRule::kChain : PasteRule::kBaseClique};
        g = cockade(spec);
      } else if (!turan_arg.empty()) {
        const auto v = detail::parse_tuple(turan_arg, "--turan", 2, 2);
        g = turan_graph(detail::non_negative(v[0], "N"), detail::non_negative(v[1], "T"));
      } else {
        throw ArgumentError("gen needs one of --ell-tree, --multipartite, --cockade, --turan");
      }
      if (format == "json")
        emit(graph_to_json(g));
      else
        io.out << encode_graph6(g) << "\n";
      return kOk;
    }

    if (count->parsed()) {
      const auto graphs = detail::load_graphs(in_path, io.in);
      if (format == "csv") io.out << "graph,k,count\n";
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const CliqueVector cv = clique_vector(graphs[i], threads);
        if (format == "csv") {
          for (std::size_t k = 0; k < cv.size(); ++k)
            if (!count_k || static_cast<std::int64_t>(k) == *count_k) io.out << i << "," << k << "," << cv[k].str() << "\n";
          continue;
        }
        nlohmann::json j;
        j["n"] = graphs[i].order();
        j["m"] = graphs[i].edge_count();
        if (count_k) {
          if (*count_k < 0) throw ArgumentError("--k must be non-negative");
          j["k"] = *count_k;
          j["count"] = cv[static_cast<std::size_t>(*count_k)].str();
        } else {
          j["clique_vector"] = cv.decimal();
          j["clique_number"] = cv.clique_number();
          j["total"] = cv.total().str();
        }
        emit(j);
      }
      return kOk;
    }

    if (minor->parsed()) {
      if (!minor_t && !hadwiger) throw ArgumentError("minor needs --t or --hadwiger");
      const MinorOptions options{max_vertices};
      for (const Graph& g : detail::load_graphs(in_path, io.in)) {
        nlohmann::json j;
        j["n"] = g.order();
        std::optional<MinorResult> result;
        if (hadwiger) {
          const std::size_t h = hadwiger_number(g, options);
          j["hadwiger"] = h;
          if (witness && h > 0) result = has_kt_minor(g, h, options);
        } else {
          if (*minor_t < 1) throw ArgumentError("--t must be positive");
          j["t"] = *minor_t;
          result = has_kt_minor(g, static_cast<std::size_t>(*minor_t), options);
          j["has_minor"] = result->found;
        }
        if (witness && result && result->model) {
          nlohmann::json sets = nlohmann::json::array();
          for (const auto& b : result->model->branch_sets) {
            std::vector<std::size_t> vs(b.begin(), b.end());
            sets.push_back(vs);
          }
          j["branch_sets"] = sets;
        }
        emit(j);
      }
      return kOk;
    }

    if (bound->parsed()) {
      if (!zykov_arg.empty()) {
        const auto v = detail::parse_tuple(zykov_arg, "--zykov", 2, 3);
        const Rational q = v.size() == 3 ? zykov_kcliques(v[0], v[1], v[2]) : zykov_total(v[0], v[1]);
        nlohmann::json j{{"kind", "zykov"}, {"n", v[0]}, {"t", v[1]}, {"value", numerator(q).str() + "/" + denominator(q).str()},
                         {"floor", (numerator(q) / denominator(q)).str()}};
        if (v.size() == 3) j["k"] = v[2];
        emit(j);
      } else if (!degen_arg.empty()) {
        const auto v = detail::parse_tuple(degen_arg, "--degen", 3, 3);
        emit({{"kind", "degenerate"}, {"d", v[0]}, {"n", v[1]}, {"k", v[2]}, {"value", degenerate_bound(v[0], v[1], v[2]).str()}});
      } else if (!k222_arg.empty()) {
        const auto v = detail::parse_tuple(k222_arg, "--k222", 2, 2);
        const K222Condition r = k222_condition(v[0], v[1]);
        emit({{"kind", "k222"}, {"c", v[0]}, {"k", v[1]}, {"holds", r.holds}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}});
      } else {
        if (!b_t || !b_n) throw ArgumentError("bound needs --t and --n (or --zykov, --degen, --k222)");
        if (b_total == b_k.has_value()) throw ArgumentError("bound needs exactly one of --k or --total");
        emit(to_json(b_total ? extremal_total(*b_n, *b_t) : extremal_kcliques(*b_n, *b_t, *b_k)));
      }
      return kOk;
    }

    if (verify->parsed()) {
      VerifyConfig config;
      config.t = v_t;
      config.n_min = v_n_min;
      config.n_max = v_n_max;
      config.oracle = oracle;
      config.allow_slow = allow_slow;
      config.threads = threads;
      const VerifyReport report = verify_theorem_suite(config);
      emit(to_json(report));
      for (const auto& row : report.rows)
        if (!row.pass) io.err << "mismatch: " << row.reproducer << "\n";
      return report.pass() ? kOk : kClaimFailed;
    }

    if (search->parsed()) {
      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw ArgumentError("cannot write '" + csv_path + "'");
      }
      // The bound is known to hold for every candidate with t <= 49.
      auto unexpected = [](const SearchReport& r) {
        return std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) { return v.t <= 49; });
      };
      if (scan == "multipartite") {
        const SearchReport r = multipartite_conjecture_scan(t_max, threads);
        emit(to_json(r));
        if (csv.is_open()) {
          csv << "t,spec,n,cliques,bound\n";
          for (const auto& v : r.violations) csv << v.t << ",\"" << v.spec.name() << "\"," << v.n() << "," << v.cliques << "," << v.bound << "\n";
        }
        return unexpected(r) ? kClaimFailed : kOk;
      }
      if (scan == "family") {
        std::vector<PairsFamily> fams;
        if (family == "c2" || family == "all") fams.push_back(PairsFamily::kPairs);
        if (family == "1c2" || family == "all") fams.push_back(PairsFamily::kOnePlusPairs);
        if (family == "11c2" || family == "all") fams.push_back(PairsFamily::kTwoPlusPairs);
        const SearchReport r = family_threshold_scan(fams, t_max);
        emit(to_json(r));
        if (csv.is_open()) {
          csv << "family,c,n,t,cliques,bound,violates\n";
          for (const auto& row : r.rows)
            csv << "\"" << row.family << "\"," << row.c << "," << row.n << "," << row.t << "," << row.cliques << ","
                << row.bound << "," << (row.violates ? 1 : 0) << "\n";
        }
        return unexpected(r) ? kClaimFailed : kOk;
      }
      if (scan == "lambda") {
        const LambdaReport r = lambda_scan(c_max, threads);
        emit(to_json(r));
        if (csv.is_open()) {
          csv << "c,t,k_min,ratio\n";
          for (const auto& row : r.rows) csv << row.c << "," << row.t << "," << row.k_min << "," << static_cast<double>(row.ratio()) << "\n";
        }
        return r.routes_agree() ? kOk : kClaimFailed;
      }
      if (scan == "exhaustive") {
        ExhaustiveOptions options;
        options.allow_slow = allow_slow;
        options.threads = threads;
        const ExhaustiveTable table = exhaustive_extremal(s_n, s_t, options);
        nlohmann::json j = to_json(table);
        bool agrees = true;
        if (s_t >= 3 && s_t <= 9 && s_n >= 1) {
          for (std::int64_t k = 1; k < s_t; ++k)
            agrees = agrees && table.max_k[static_cast<std::size_t>(k)] == extremal_kcliques(s_n, s_t, k).value;
          agrees = agrees && table.max_total == extremal_total(s_n, s_t).value;
          j["matches_exact_values"] = agrees;
        }
        emit(j);
        if (csv.is_open()) {
          csv << "k,max,argmax\n";
          for (std::size_t k = 1; k < table.max_k.size(); ++k) csv << k << "," << table.max_k[k] << "," << table.argmax_k[k] << "\n";
          csv << "total," << table.max_total << "," << table.argmax_total << "\n";
        }
        return agrees ? kOk : kClaimFailed;
      }
      VerifyConfig config;
      config.t = s_t;
      config.n_max = s_n;
      config.oracle = true;
      config.allow_slow = allow_slow;
      config.threads = threads;
      const VerifyReport report = verify_theorem_suite(config);
      emit(to_json(report));
      return report.pass() ? kOk : kClaimFailed;
    }
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ktfree::cli

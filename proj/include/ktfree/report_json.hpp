#pragma once

#include <nlohmann/json.hpp>

#include "ktfree/bounds.hpp"
#include "ktfree/search.hpp"

namespace ktfree {

// JSON views of records and reports. Integers that may exceed 64 bits are written as decimal
// strings.

inline nlohmann::json to_json(const ExtremalRecord& r) {
  nlohmann::json j;
  j["t"] = r.t;
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["n"] = r.n;
  j["value"] = r.value.str();
  j["exceptional"] = r.exceptional;
  j["witness_family"] = std::string(witness_family_name(r.witness));
  return j;
}

inline nlohmann::json to_json(const Violation& v) {
  return {{"t", v.t},           {"spec", v.spec.name()},  {"parts", v.spec.parts()},
          {"n", v.n()},         {"cliques", v.cliques.str()}, {"bound", v.bound.str()}};
}

inline nlohmann::json to_json(const FamilyRow& r) {
  return {{"family", r.family},         {"c", r.c},
          {"n", r.n},                   {"t", r.t},
          {"cliques", r.cliques.str()}, {"bound", r.bound.str()},
          {"violates", r.violates}};
}

inline nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["t_max"] = r.t_max;
  j["candidates_examined"] = r.candidates_examined;
  nlohmann::json by_t = nlohmann::json::object();
  for (const auto& [t, count] : r.candidates_by_t) by_t[std::to_string(t)] = count;
  j["candidates_by_t"] = by_t;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["violation_count"] = r.violations.size();
  j["minimal_violating_t"] = r.minimal_violating_t ? nlohmann::json(*r.minimal_violating_t) : nlohmann::json(nullptr);
  if (r.kind == "family") {
    j["sustained_threshold_t"] =
        r.sustained_threshold_t ? nlohmann::json(*r.sustained_threshold_t) : nlohmann::json(nullptr);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) j["rows"].push_back(to_json(row));
  }
  j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

inline nlohmann::json to_json(const LambdaReport& r) {
  nlohmann::json j;
  j["kind"] = "lambda";
  j["c_max"] = r.c_max;
  j["routes_agree"] = r.routes_agree();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    const Rational q = row.ratio();
    j["rows"].push_back({{"c", row.c},
                         {"t", row.t},
                         {"k_min", row.k_min},
                         {"ratio", numerator(q).str() + "/" + denominator(q).str()},
                         {"ratio_decimal", static_cast<double>(q)},
                         {"failing_k", row.failing_k},
                         {"routes_agree", row.routes_agree}});
  }
  j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

inline nlohmann::json to_json(const ExhaustiveTable& table) {
  nlohmann::json j;
  j["kind"] = "exhaustive";
  j["n"] = table.n;
  j["t"] = table.t;
  j["graphs"] = table.graphs;
  j["minor_free"] = table.minor_free;
  j["edge_maximal"] = table.edge_maximal;
  j["minor_tests"] = table.minor_tests;
  j["max_k"] = nlohmann::json::array();
  for (std::size_t k = 1; k < table.max_k.size(); ++k)
    j["max_k"].push_back({{"k", k}, {"max", table.max_k[k].str()}, {"argmax", table.argmax_k[k]}});
  j["max_total"] = table.max_total.str();
  j["argmax_total"] = table.argmax_total;
  return j;
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["kind"] = "verify";
  j["t"] = r.config.t;
  j["n_min"] = r.config.n_min;
  j["n_max"] = r.config.n_max;
  j["oracle"] = r.config.oracle;
  j["pass"] = r.pass();
  j["failures"] = r.failures();
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json x;
    x["n"] = row.n;
    x["k"] = row.k ? nlohmann::json(*row.k) : nlohmann::json("total");
    x["expected"] = row.expected.str();
    x["attained"] = row.attained.str();
    x["oracle"] = row.oracle ? nlohmann::json(row.oracle->str()) : nlohmann::json(nullptr);
    x["exceptional"] = row.exceptional;
    x["witness_family"] = row.witness_family;
    x["witness"] = row.witness_graph6;
    x["witness_minor_free"] = row.witness_minor_free ? nlohmann::json(*row.witness_minor_free) : nlohmann::json(nullptr);
    x["pass"] = row.pass;
    if (!row.pass) x["reproducer"] = row.reproducer;
    j["rows"].push_back(std::move(x));
  }
  j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

}  // namespace ktfree

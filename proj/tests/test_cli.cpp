#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace ktfree;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, GenGraph6) {
  const Result r = call({"gen", "--multipartite", "2,2,2,2,2", "--format", "graph6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, encode_graph6(complete_multipartite(MultipartiteSpec::pairs(5))) + "\n");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(Cli, GenVariants) {
  EXPECT_EQ(call({"gen", "--ell-tree", "3,9"}).out, encode_graph6(ell_tree(3, 9)) + "\n");
  EXPECT_EQ(call({"gen", "--ell-tree", "3,9", "--seed", "5"}).out, encode_graph6(ell_tree(3, 9, 5)) + "\n");
  EXPECT_EQ(call({"gen", "--turan", "10,3"}).out, encode_graph6(turan_graph(10, 3)) + "\n");
  const Graph k22222 = complete_multipartite(MultipartiteSpec::pairs(5));
  EXPECT_EQ(call({"gen", "--cockade", "2-2-2-2-2,5,3"}).out, encode_graph6(cockade({k22222, 5, 3})) + "\n");
  EXPECT_EQ(call({"gen", "--cockade", encode_graph6(k22222) + ",5,2"}).out, encode_graph6(cockade({k22222, 5, 2})) + "\n");
  const Result j = call({"gen", "--turan", "6,4", "--format", "json"});
  EXPECT_EQ(graph_from_json(json_of(j)), turan_graph(6, 4));
}

TEST(Cli, CountMatchesLibrary) {
  const Graph g = complete_multipartite(MultipartiteSpec::pairs(5, 1));
  const Result r = call({"count", "--in", "-"}, encode_graph6(g) + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["total"], "486");
  EXPECT_EQ(j["clique_vector"], nlohmann::json(clique_vector(g).decimal()));

  const Result k = call({"count", "--in", "-", "--k", "5"}, encode_graph6(g));
  EXPECT_EQ(json_of(k)["count"], "112");

  const Result csv = call({"count", "--in", "-", "--format", "csv"}, encode_graph6(complete_graph(3)));
  EXPECT_EQ(csv.out, "graph,k,count\n0,0,1\n0,1,3\n0,2,3\n0,3,1\n");
}

TEST(Cli, Minor) {
  const std::string k22222 = encode_graph6(complete_multipartite(MultipartiteSpec::pairs(5)));
  const auto h = json_of(call({"minor", "--in", "-", "--hadwiger", "--witness"}, k22222));
  EXPECT_EQ(h["hadwiger"], 7);
  EXPECT_EQ(h["branch_sets"].size(), 7u);
  EXPECT_EQ(json_of(call({"minor", "--in", "-", "--t", "8"}, k22222))["has_minor"], false);
  EXPECT_EQ(call({"minor", "--in", "-"}, k22222).code, 2);
  EXPECT_EQ(call({"minor", "--in", "-", "--t", "3"}, encode_graph6(Graph(20))).code, 2);
}

TEST(Cli, Bound) {
  const auto j = json_of(call({"bound", "--t", "8", "--k", "2", "--n", "10"}));
  EXPECT_EQ(j["value"], "40");
  EXPECT_EQ(j["exceptional"], true);
  EXPECT_EQ(j, to_json(extremal_kcliques(10, 8, 2)));
  EXPECT_EQ(json_of(call({"bound", "--t", "9", "--total", "--n", "12"}))["value"], "768");
  EXPECT_EQ(json_of(call({"bound", "--zykov", "8,5"}))["value"], "81/1");
  EXPECT_EQ(json_of(call({"bound", "--degen", "8,10,3"}))["value"], "112");
  const auto k = json_of(call({"bound", "--k222", "8,2"}));
  EXPECT_EQ(k["holds"], false);
  EXPECT_EQ(k["lhs"], "56");
  EXPECT_EQ(k["rhs"], "55");
  EXPECT_EQ(call({"bound", "--t", "12", "--k", "2", "--n", "20"}).code, 2);
  EXPECT_EQ(call({"bound", "--t", "5", "--k", "2", "--total", "--n", "20"}).code, 2);
  EXPECT_EQ(call({"bound", "--k222", "7,2"}).code, 2);
}

TEST(Cli, VerifyAndSearch) {
  const Result v = call({"verify", "--t", "4", "--n-max", "6", "--oracle"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(json_of(v)["pass"], true);

  const Result m = call({"search", "--scan", "multipartite", "--t-max", "20", "--threads", "2"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(json_of(m)["candidates_examined"], multipartite_conjecture_scan(20).candidates_examined);

  const Result f = call({"search", "--scan", "family", "--t-max", "100"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(json_of(f)["sustained_threshold_t"], 62);

  const Result l = call({"search", "--scan", "lambda", "--c-max", "40"});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(json_of(l)["rows"].size(), 20u);

  const Result e = call({"search", "--scan", "exhaustive", "--n", "5", "--t", "4"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(json_of(e)["max_total"], "16");
  EXPECT_EQ(call({"search", "--scan", "exhaustive", "--n", "7", "--t", "4"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"gen"}).code, 2);
  EXPECT_EQ(call({"gen", "--ell-tree", "3"}).code, 2);
  EXPECT_EQ(call({"gen", "--ell-tree", "3,x"}).code, 2);
  EXPECT_EQ(call({"gen", "--ell-tree", "2,5", "--turan", "5,3"}).code, 2);
  EXPECT_EQ(call({"search", "--scan", "bogus"}).code, 2);
  EXPECT_EQ(call({"count", "--in", "-"}, "B!\n").code, 2);
  EXPECT_EQ(call({"count", "--in", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

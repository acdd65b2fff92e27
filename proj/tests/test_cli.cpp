#include <doctest.h>

#include <cstdlib>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "beilc/commands.hpp"
#include "beilc/report.hpp"
#include "oracles/figures.hpp"

using namespace beilc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kP4 = "4\n1 2\n2 3\n3 4\n";

// Edges of a DOT digraph as (from, to) node ids.
std::vector<std::pair<std::string, std::string>> dot_edges(const std::string& dot) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::regex edge(R"((\w+) -> (\w+);)");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
    out.emplace_back((*it)[1], (*it)[2]);
  }
  return out;
}

std::size_t dot_nodes(const std::string& dot) {
  const std::regex node(R"((\w+) \[label=)");
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()));
}

// Acyclic, and no edge is implied by a longer path.
bool is_hasse_diagram(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, std::set<std::string>> next;
  for (const auto& [a, b] : edges) next[a].insert(b);
  std::map<std::string, std::set<std::string>> reach;
  auto reachable = [&](auto&& self, const std::string& v, std::set<std::string>& on_path) -> std::set<std::string> {
    if (auto it = reach.find(v); it != reach.end()) return it->second;
    if (!on_path.insert(v).second) throw std::runtime_error("cycle");
    std::set<std::string> out;
    for (const auto& w : next[v]) {
      out.insert(w);
      for (const auto& x : self(self, w, on_path)) out.insert(x);
    }
    on_path.erase(v);
    return reach[v] = out;
  };
  try {
    for (const auto& [a, b] : edges) {
      std::set<std::string> path;
      reachable(reachable, a, path);
    }
  } catch (const std::runtime_error&) {
    return false;
  }
  for (const auto& [a, c] : edges) {
    for (const auto& b : next[a]) {
      if (b != c && reach[b].count(c)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze P4 with both engines") {
  const auto r = run({"analyze", "-", "--engine", "verify"}, kP4);
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "match");
  CHECK(j["engine"] == "both");
  CHECK(j["report"]["depth"] == 5);
  CHECK(j["report"]["dimension"] == 5);
  CHECK(j["report"]["cohen_macaulay"] == true);
  CHECK(j["decomposition"].size() == 7);
  CHECK(j["report"]["cohomological_dimension"] == "unknown");
}

TEST_CASE("JSON output round-trips and is deterministic") {
  for (const char* engine : {"closed", "generic", "verify"}) {
    const auto a = run({"analyze", "-", "--engine", engine, "--char", "3"}, kP4);
    const auto b = run({"analyze", "-", "--engine", engine, "--char", "3"}, kP4);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    const Report rep = report_from_json(j);
    CHECK(to_json(rep).dump(2) + "\n" == a.out);
  }
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema": 1})")), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema": 7})")), std::invalid_argument);
}

TEST_CASE("the ten-vertex example in characteristic 2 and 0") {
  const std::string text = to_edge_list(oracle::ten_vertex_example());
  const auto r2 = run({"analyze", "-", "--char", "2"}, text);
  REQUIRE(r2.code == kExitOk);
  const auto j2 = nlohmann::json::parse(r2.out);
  CHECK(j2["report"]["cohomological_dimension"] == 16);
  CHECK(j2["report"]["arithmetic_rank"] == nlohmann::json::array({16, 20}));
  CHECK(j2["poset"]["elements"] == 24);
  const auto r0 = run({"analyze", "-"}, text);
  const auto j0 = nlohmann::json::parse(r0.out);
  CHECK(j0["report"]["cohomological_dimension"] == "unknown");
  CHECK(j0["report"]["arithmetic_rank"] == "unknown");
  const auto table = run({"analyze", "-", "--char", "2", "--format", "table"}, text);
  CHECK(table.out.find("cd           16") != std::string::npos);
  CHECK(table.out.find("ara          [16, 20]") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
  const std::string k3 = "3\n1 2\n2 3\n1 3\n";
  auto closed = run({"analyze", "-", "--engine", "closed"}, k3);
  CHECK(closed.code == kExitError);
  CHECK(closed.err.find("girth 3 < 5") != std::string::npos);
  CHECK(run({"analyze", "-", "--engine", "generic"}, k3).code == kExitOk);
  auto dup = run({"analyze", "-"}, "3\n1 2\n1 2\n");
  CHECK(dup.code == kExitError);
  CHECK(dup.err.find("parse error") != std::string::npos);
  CHECK(run({"analyze", "-", "--char", "4"}, kP4).code == kExitError);
  CHECK(run({"analyze", "-", "--engine", "fast"}, kP4).code == kExitError);
  CHECK(run({"analyze", "/nonexistent/graph.txt"}).code == kExitError);
  CHECK(run({}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("poset DOT output") {
  const auto r = run({"poset", "-", "--complement"}, to_edge_list(Graph::path(5)));
  REQUIRE(r.code == kExitOk);
  CHECK(dot_nodes(r.out) == 13);
  const auto edges = dot_edges(r.out);
  CHECK(edges.size() == 22);
  CHECK(is_hasse_diagram(edges));
  CHECK(r.out.find("label=\"e_3\"") != std::string::npos);
  CHECK_FALSE(is_hasse_diagram({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  CHECK_FALSE(is_hasse_diagram({{"a", "b"}, {"b", "a"}}));

  // J(K4) is prime: the poset is that ideal under the top.
  const auto single = run({"poset", "-"}, to_edge_list(Graph::complete(4)));
  CHECK(dot_nodes(single.out) == 2);
  CHECK(dot_edges(single.out).size() == 1);
}

TEST_CASE("sweep") {
  const auto ex = run({"sweep", "--nmax", "6", "--char", "0", "--char", "2", "--exhaustive"});
  CHECK(ex.code == kExitOk);
  CHECK(ex.out.find("0 mismatch") != std::string::npos);
  const auto a = run({"sweep", "--nmin", "8", "--nmax", "9", "--random", "20,4"});
  const auto b = run({"sweep", "--nmin", "8", "--nmax", "9", "--random", "20,4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"sweep", "--nmax", "30", "--random", "5,1"}).code == kExitError);
  CHECK(run({"sweep", "--nmax", "12", "--exhaustive"}).code == kExitError);
  CHECK(run({"sweep", "--nmax", "6"}).code == kExitError);
  CHECK(run({"sweep", "--nmax", "6", "--random", "five"}).code == kExitError);
}

TEST_CASE("subset bound from the environment") {
  ::setenv("BEILC_MAX_SUBSET_N", "5", 1);
  const auto bounded = run({"analyze", "-", "--engine", "generic"}, to_edge_list(Graph::path(6)));
  CHECK(bounded.code == kExitError);
  CHECK(bounded.err.find("bound exceeded") != std::string::npos);
  ::setenv("BEILC_MAX_SUBSET_N", "0", 1);
  CHECK(run({"analyze", "-"}, kP4).code == kExitError);
  ::unsetenv("BEILC_MAX_SUBSET_N");
  CHECK(run({"analyze", "-", "--engine", "generic"}, to_edge_list(Graph::path(6))).code == kExitOk);
}

TEST_CASE("graph6 input and cut sets") {
  const auto r = run({"analyze", "-", "--format", "table"}, to_graph6(Graph::path(4)) + "\n");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("depth        5") != std::string::npos);
  const auto cuts = run({"cutsets", "-", "--format", "json"}, kP4);
  REQUIRE(cuts.code == kExitOk);
  const auto j = nlohmann::json::parse(cuts.out);
  CHECK(j["cut_sets"].size() == 3);
  CHECK(j["cut_sets"][1]["set"] == nlohmann::json::array({2}));
  CHECK(j["cut_sets"][1]["components"] == 2);
}

}

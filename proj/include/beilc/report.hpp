#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "beilc/girth5.hpp"

namespace beilc {

inline constexpr int kReportSchema = 1;

struct DecompositionEntry {
  std::size_t degree;  // r in H^r
  std::string ideal;
  std::string tag;
  std::size_t dimension;
  std::size_t multiplicity;
  bool operator==(const DecompositionEntry&) const = default;
};

struct PosetSummary {
  std::size_t elements = 0;
  std::map<std::string, std::size_t> kinds;  // tag kind -> count; "untagged" without tags
  bool operator==(const PosetSummary&) const = default;
};

/// Everything `beilc analyze` prints.
struct Report {
  int schema = kReportSchema;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::string girth;
  std::vector<Vertex> core_vertices;
  std::vector<Edge> free_edges;
  std::string classification;
  std::string target;  // "complement" or "input": whose binomial edge ideal was analysed
  unsigned long characteristic = 0;
  std::string engine;  // closed-form | generic | trivial | both
  std::optional<std::string> verdict;  // match | mismatch, only for engine "both"
  std::vector<std::string> diffs;
  std::optional<PosetSummary> poset;
  std::vector<DecompositionEntry> decomposition;
  HomologicalReport homological;

  bool operator==(const Report&) const = default;
};

/// Fills the input echo (n, edges, girth, H, free edges, classification).
Report describe_input(const Graph& g);

void set_poset(Report& r, const IdealPoset& p);
void set_decomposition(Report& r, const LCDecomposition& d);

nlohmann::ordered_json to_json(const Report& r);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Report report_from_json(const nlohmann::json& j);

void print_table(std::ostream& out, const Report& r);

}  // namespace beilc

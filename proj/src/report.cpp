#include "beilc/report.hpp"

#include <stdexcept>

namespace beilc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kUnknown = "unknown";

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (Edge e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    out.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return out;
}

std::string kind_of(const std::string& tag) { return tag.substr(0, tag.find('_')); }

std::string edge_string(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

Report describe_input(const Graph& g) {
  Report r;
  r.n = g.n();
  r.edges = g.edges();
  r.girth = to_string(girth(g));
  r.core_vertices = core_subgraph(g).vertices.to_vector();
  r.free_edges = beilc::free_edges(g);
  r.classification = to_string(classify(g).classification);
  return r;
}

void set_poset(Report& r, const IdealPoset& p) {
  PosetSummary s;
  s.elements = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) ++s.kinds[p.has_tags() ? kind_of(p.label(i)) : "untagged"];
  r.poset = std::move(s);
}

void set_decomposition(Report& r, const LCDecomposition& d) {
  r.decomposition.clear();
  for (const auto& [degree, summands] : d.modules()) {
    for (const auto& s : summands) {
      r.decomposition.push_back({degree, s.ideal.to_string(), s.tag, s.dimension, s.multiplicity});
    }
  }
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["schema"] = r.schema;
  j["input"] = {{"n", r.n},
                {"edges", edges_json(r.edges)},
                {"girth", r.girth},
                {"core_vertices", r.core_vertices},
                {"free_edges", edges_json(r.free_edges)}};
  j["classification"] = r.classification;
  j["target"] = r.target;
  j["characteristic"] = r.characteristic;
  j["engine"] = r.engine;
  if (r.verdict) {
    j["verdict"] = *r.verdict;
    j["diffs"] = r.diffs;
  }
  if (r.poset) j["poset"] = {{"elements", r.poset->elements}, {"kinds", r.poset->kinds}};
  ordered_json rows = ordered_json::array();
  for (const auto& e : r.decomposition) {
    rows.push_back({{"degree", e.degree},
                    {"ideal", e.ideal},
                    {"tag", e.tag},
                    {"dimension", e.dimension},
                    {"multiplicity", e.multiplicity}});
  }
  j["decomposition"] = std::move(rows);
  const auto& h = r.homological;
  ordered_json hj = {{"depth", h.depth},
                     {"dimension", h.dimension},
                     {"cohen_macaulay", h.cohen_macaulay},
                     {"regularity", h.regularity}};
  if (h.cohomological_dimension) {
    hj["cohomological_dimension"] = *h.cohomological_dimension;
  } else {
    hj["cohomological_dimension"] = kUnknown;
  }
  if (h.ara) {
    hj["arithmetic_rank"] = {h.ara->lower, h.ara->upper};
  } else {
    hj["arithmetic_rank"] = kUnknown;
  }
  j["report"] = std::move(hj);
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != kReportSchema) throw std::invalid_argument("unsupported schema " + std::to_string(r.schema));
    const auto& in = j.at("input");
    r.n = in.at("n").get<std::size_t>();
    r.edges = edges_from(in.at("edges"));
    r.girth = in.at("girth").get<std::string>();
    r.core_vertices = in.at("core_vertices").get<std::vector<Vertex>>();
    r.free_edges = edges_from(in.at("free_edges"));
    r.classification = j.at("classification").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.characteristic = j.at("characteristic").get<unsigned long>();
    r.engine = j.at("engine").get<std::string>();
    if (j.contains("verdict")) {
      r.verdict = j.at("verdict").get<std::string>();
      r.diffs = j.at("diffs").get<std::vector<std::string>>();
    }
    if (j.contains("poset")) {
      r.poset = PosetSummary{j.at("poset").at("elements").get<std::size_t>(),
                             j.at("poset").at("kinds").get<std::map<std::string, std::size_t>>()};
    }
    for (const auto& e : j.at("decomposition")) {
      r.decomposition.push_back({e.at("degree").get<std::size_t>(), e.at("ideal").get<std::string>(),
                                 e.at("tag").get<std::string>(), e.at("dimension").get<std::size_t>(),
                                 e.at("multiplicity").get<std::size_t>()});
    }
    const auto& h = j.at("report");
    r.homological.depth = h.at("depth").get<std::size_t>();
    r.homological.dimension = h.at("dimension").get<std::size_t>();
    r.homological.cohen_macaulay = h.at("cohen_macaulay").get<bool>();
    r.homological.regularity = h.at("regularity").get<std::size_t>();
    if (h.at("cohomological_dimension").is_number()) {
      r.homological.cohomological_dimension = h.at("cohomological_dimension").get<std::size_t>();
    }
    if (h.at("arithmetic_rank").is_array()) {
      const auto& a = h.at("arithmetic_rank");
      r.homological.ara = AraBounds{a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

void print_table(std::ostream& out, const Report& r) {
  out << "graph        n=" << r.n << ", " << r.edges.size() << " edges, girth " << r.girth << "\n";
  out << "class        " << r.classification << "\n";
  out << "core H       {";
  for (std::size_t i = 0; i < r.core_vertices.size(); ++i) out << (i ? "," : "") << r.core_vertices[i];
  out << "}\n";
  out << "free edges   ";
  if (r.free_edges.empty()) out << "none";
  for (std::size_t i = 0; i < r.free_edges.size(); ++i) out << (i ? " " : "") << edge_string(r.free_edges[i]);
  out << "\n";
  out << "target       J(" << (r.target == "complement" ? "complement" : "G") << "), char " << r.characteristic
      << ", engine " << r.engine << "\n";
  if (r.verdict) {
    out << "verdict      " << *r.verdict << "\n";
    for (const auto& d : r.diffs) out << "  " << d << "\n";
  }
  if (r.poset) {
    out << "poset        " << r.poset->elements << " elements";
    for (const auto& [kind, count] : r.poset->kinds) out << ", " << kind << " " << count;
    out << "\n";
  }
  if (!r.decomposition.empty()) {
    out << "\n  r  d_q  mult  tag        ideal\n";
    for (const auto& e : r.decomposition) {
      std::string tag = e.tag.empty() ? "-" : e.tag;
      tag.resize(std::max<std::size_t>(tag.size(), 10), ' ');
      out << (e.degree < 10 ? "  " : " ") << e.degree << (e.dimension < 10 ? "    " : "   ") << e.dimension
          << (e.multiplicity < 10 ? "     " : "    ") << e.multiplicity << "  " << tag << " " << e.ideal << "\n";
    }
    out << "\n";
  }
  const auto& h = r.homological;
  out << "depth        " << h.depth << "\n";
  out << "dimension    " << h.dimension << "\n";
  out << "CM           " << (h.cohen_macaulay ? "yes" : "no") << "\n";
  out << "regularity   " << h.regularity << "\n";
  out << "cd           " << (h.cohomological_dimension ? std::to_string(*h.cohomological_dimension) : kUnknown)
      << "\n";
  out << "ara          "
      << (h.ara ? "[" + std::to_string(h.ara->lower) + ", " + std::to_string(h.ara->upper) + "]" : kUnknown) << "\n";
}

}  // namespace beilc

#include "beilc/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "beilc/corpus.hpp"
#include "beilc/cut_sets.hpp"
#include "beilc/errors.hpp"
#include "beilc/girth5.hpp"
#include "beilc/report.hpp"

namespace beilc {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  EngineLimits limits;
};

Graph load_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_graph(text, detect_format(text));
}

IdealPoset generic_poset(const Graph& target, const EngineLimits& limits) {
  return build_poset(associated_primes(target, limits.max_subset_n), limits.max_poset_elements);
}

struct AnalyzeOptions {
  std::string input;
  unsigned long characteristic = 0;
  std::string engine = "auto";
  std::string format = "json";
  bool direct = false;
};

void run_generic(Report& r, const Graph& target, const Girth5Input& c, Field field, const EngineLimits& limits) {
  IdealPoset p = generic_poset(target, limits);
  if (r.target == "complement" && c.classification == Girth5Class::General) p.copy_tags_from(build_P_poset(c));
  LCDecomposition d = decompose_poset(p, target.n(), field);
  set_poset(r, p);
  set_decomposition(r, d);
  r.homological = report(d);
  r.engine = "generic";
}

int analyze(const AnalyzeOptions& o, Context& ctx) {
  const Graph g = load_graph(o.input, ctx.in);
  const Field field(o.characteristic);
  const Girth5Input c = classify(g);
  Report r = describe_input(g);
  r.characteristic = o.characteristic;
  r.target = o.direct ? "input" : "complement";

  if (o.direct) {
    if (o.engine != "auto" && o.engine != "generic") {
      throw PreconditionError("--direct works with the generic engine only");
    }
    run_generic(r, g, c, field, ctx.limits);
  } else {
    std::string engine = o.engine;
    if (engine == "auto") engine = c.classification == Girth5Class::General ? "closed" : "generic";
    if ((engine == "closed" || engine == "verify") && c.classification == Girth5Class::Inapplicable) {
      throw PreconditionError(*girth5_assumption_failure(g));
    }
    const bool trivial = c.classification != Girth5Class::General && c.classification != Girth5Class::Inapplicable;
    if (engine == "generic") {
      run_generic(r, complement(g), c, field, ctx.limits);
    } else if (engine == "closed" && trivial) {
      r.engine = "trivial";
      r.homological = trivial_report(c, field);
    } else if (engine == "closed") {
      r.engine = "closed-form";
      set_poset(r, build_P_poset(c));
      set_decomposition(r, closed_form_decompose(c, field));
      r.homological = closed_form_report(c, field);
    } else if (trivial) {
      run_generic(r, complement(g), c, field, ctx.limits);
      r.engine = "both";
      const HomologicalReport expected = trivial_report(c, field);
      if (!(expected == r.homological)) {
        r.diffs.push_back("report differs from the " + to_string(c.classification) + " formulas");
      }
      r.verdict = r.diffs.empty() ? "match" : "mismatch";
    } else {
      EquivalenceVerdict v = verify_equivalence(c, field, ctx.limits);
      r.engine = "both";
      r.verdict = v.match() ? "match" : "mismatch";
      r.diffs = v.diffs;
      set_poset(r, *v.generic_poset);
      set_decomposition(r, *v.generic_decomposition);
      r.homological = *v.generic_report;
    }
  }

  if (o.format == "table") {
    print_table(ctx.out, r);
  } else {
    ctx.out << to_json(r).dump(2) << "\n";
  }
  return r.verdict && *r.verdict != "match" ? kExitMismatch : kExitOk;
}

struct PosetOptions {
  std::string input;
  std::string dot_path;
  bool complement = false;
};

int poset(const PosetOptions& o, Context& ctx) {
  const Graph g = load_graph(o.input, ctx.in);
  IdealPoset p = generic_poset(o.complement ? complement(g) : g, ctx.limits);
  const Girth5Input c = classify(g);
  if (o.complement && c.classification == Girth5Class::General) p.copy_tags_from(build_P_poset(c));
  const std::string dot = poset_to_dot(p);
  if (o.dot_path.empty() || o.dot_path == "-") {
    ctx.out << dot;
  } else {
    std::ofstream file(o.dot_path);
    if (!file) throw PreconditionError("cannot write " + o.dot_path);
    file << dot;
  }
  return kExitOk;
}

struct CutSetOptions {
  std::string input;
  bool complement = false;
  std::string format = "table";
};

int cutsets(const CutSetOptions& o, Context& ctx) {
  const Graph g = load_graph(o.input, ctx.in);
  const Graph target = o.complement ? complement(g) : g;
  const auto sets = cut_sets(target, ctx.limits.max_subset_n);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["n"] = target.n();
    j["target"] = o.complement ? "complement" : "input";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& s : sets) list.push_back({{"set", s.vertices.to_vector()}, {"components", s.component_count}});
    j["cut_sets"] = std::move(list);
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& s : sets) ctx.out << to_string(s.vertices) << "  " << s.component_count << " components\n";
  }
  return kExitOk;
}

struct SweepOptions {
  std::size_t nmin = 4;
  std::size_t nmax = 0;
  std::vector<unsigned long> characteristics{0};
  bool exhaustive = false;
  std::string random;
};

int sweep(const SweepOptions& o, Context& ctx) {
  if (o.nmin < 4) throw PreconditionError("--nmin must be at least 4");
  if (o.nmax < o.nmin) throw PreconditionError("--nmax must be at least --nmin");
  if (o.nmax > ctx.limits.max_subset_n) {
    throw BoundExceeded("--nmax " + std::to_string(o.nmax) + " exceeds the generic engine bound " +
                        std::to_string(ctx.limits.max_subset_n));
  }
  if (o.exhaustive == !o.random.empty()) throw PreconditionError("choose exactly one of --exhaustive and --random");

  std::vector<Graph> corpus;
  if (o.exhaustive) {
    if (o.nmax > kMaxExhaustiveN) {
      throw BoundExceeded("exhaustive sweeps support --nmax <= " + std::to_string(kMaxExhaustiveN));
    }
    for (std::size_t n = o.nmin; n <= o.nmax; ++n) {
      for (Graph& g : general_girth5_graphs(n)) corpus.push_back(std::move(g));
    }
    ctx.out << "sweep exhaustive n=" << o.nmin << ".." << o.nmax << "\n";
  } else {
    const auto comma = o.random.find(',');
    if (comma == std::string::npos) throw PreconditionError("--random expects COUNT,SEED");
    std::size_t count = 0;
    std::uint64_t seed = 0;
    try {
      count = std::stoul(o.random.substr(0, comma));
      seed = std::stoull(o.random.substr(comma + 1));
    } catch (const std::exception&) {
      throw PreconditionError("--random expects COUNT,SEED, got " + o.random);
    }
    corpus = random_general_girth5_graphs(count, o.nmin, o.nmax, seed);
    ctx.out << "sweep random " << count << " graphs, seed " << seed << ", n=" << o.nmin << ".." << o.nmax << "\n";
  }

  std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_n;  // n -> (checked, matched)
  std::size_t mismatches = 0;
  std::string first_diff;
  for (const Graph& g : corpus) {
    const Girth5Input c = classify(g);
    for (unsigned long p : o.characteristics) {
      EquivalenceVerdict v = verify_equivalence(c, Field(p), ctx.limits);
      auto& [checked, matched] = per_n[g.n()];
      ++checked;
      if (v.match()) {
        ++matched;
      } else if (mismatches++ == 0) {
        first_diff = to_graph6(g) + " char " + std::to_string(p) + ": " +
                     (v.diffs.empty() ? std::string("reports differ") : v.diffs.front());
      }
    }
  }
  std::size_t total = 0;
  for (const auto& [n, counts] : per_n) {
    ctx.out << "n=" << n << ": " << counts.first << " checks, " << counts.second << " match\n";
    total += counts.first;
  }
  ctx.out << "total " << corpus.size() << " graphs, " << total << " checks, " << total - mismatches << " match, "
          << mismatches << " mismatch\n";
  if (mismatches > 0) ctx.out << "first mismatch: " << first_diff << "\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

std::size_t subset_bound_from_env() {
  const char* raw = std::getenv("BEILC_MAX_SUBSET_N");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxSubsetN;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0 || value > kMaxVertices) {
    throw PreconditionError(std::string("BEILC_MAX_SUBSET_N must be an integer in 1..64, got ") + raw);
  }
  return value;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string poset_to_dot(const IdealPoset& p) {
  auto id = [&](std::size_t i) { return i == p.top() ? std::string("top") : "n" + std::to_string(i); };
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i <= p.size(); ++i) out << "  " << id(i) << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (auto [lo, hi] : p.covers()) out << "  " << id(lo) << " -> " << id(hi) << ";\n";
  out << "}\n";
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local cohomology of binomial edge ideals", "beilc"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Local cohomology, depth, dimension, regularity of J(complement)");
  analyze_cmd->add_option("input", analyze_opts.input, "edge-list or graph6 file, - for stdin")->required();
  analyze_cmd->add_option("--char", analyze_opts.characteristic, "field characteristic: 0 or a prime");
  analyze_cmd->add_option("--engine", analyze_opts.engine, "auto, closed, generic or verify")
      ->check(CLI::IsMember({"auto", "closed", "generic", "verify"}));
  analyze_cmd->add_option("--format", analyze_opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  analyze_cmd->add_flag("--direct", analyze_opts.direct, "analyse J(G) itself instead of J(complement)");

  PosetOptions poset_opts;
  auto* poset_cmd = app.add_subcommand("poset", "Hasse diagram of the poset of sums of minimal primes, as DOT");
  poset_cmd->add_option("input", poset_opts.input, "edge-list or graph6 file, - for stdin")->required();
  poset_cmd->add_option("--dot", poset_opts.dot_path, "write DOT to this file instead of stdout");
  poset_cmd->add_flag("--complement", poset_opts.complement, "use J(complement) instead of J(G)");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check closed forms against the generic engine over a corpus");
  sweep_cmd->add_option("--nmin", sweep_opts.nmin, "smallest vertex count (default 4)");
  sweep_cmd->add_option("--nmax", sweep_opts.nmax, "largest vertex count")->required();
  sweep_cmd->add_option("--char", sweep_opts.characteristics, "characteristics to check (repeatable)");
  auto* exhaustive = sweep_cmd->add_flag("--exhaustive", sweep_opts.exhaustive, "every graph up to isomorphism");
  sweep_cmd->add_option("--random", sweep_opts.random, "COUNT,SEED random graphs")->excludes(exhaustive);

  CutSetOptions cut_opts;
  auto* cut_cmd = app.add_subcommand("cutsets", "List the cut sets of G");
  cut_cmd->add_option("input", cut_opts.input, "edge-list or graph6 file, - for stdin")->required();
  cut_cmd->add_flag("--complement", cut_opts.complement, "cut sets of the complement");
  cut_cmd->add_option("--format", cut_opts.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Context ctx{in, out, err, {}};
    ctx.limits.max_subset_n = subset_bound_from_env();
    if (*analyze_cmd) return analyze(analyze_opts, ctx);
    if (*poset_cmd) return poset(poset_opts, ctx);
    if (*sweep_cmd) return sweep(sweep_opts, ctx);
    return cutsets(cut_opts, ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace beilc

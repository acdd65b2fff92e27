#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beilc/graph.hpp"
#include "beilc/ideal_poset.hpp"
#include "beilc/local_cohomology.hpp"

namespace beilc {

// Closed forms for R/J(complement of G) when G has girth at least 5.

enum class Girth5Class {
  NoEdges,       // G = nK1, complement K_n
  Star,          // universal vertex, so G is a star on n >= 4 vertices
  SmallN,        // n <= 3 with an edge: K2, P3, K2 + K1
  General,       // girth >= 5, no universal vertex, an edge, n >= 4
  Inapplicable,  // girth < 5
};

std::string to_string(Girth5Class c);

struct Girth5Input {
  Graph graph;
  Girth5Class classification;
};

/// Precedence: girth < 5, then no edges, then n <= 3, then star, then general.
Girth5Input classify(const Graph& g);

/// Depth, dimension, regularity of the trivial classes (all Cohen-Macaulay).
/// Throws PreconditionError for General or Inapplicable inputs.
HomologicalReport trivial_report(const Girth5Input& c, Field field);

/// The explicit poset: j; a_v, b_v for v in V(H); a', b' per free edge; c, d
/// per edge of H; e_v when v has two H-neighbours; m when required. Tags use
/// the ASCII names j, a_2, ap_9_10, b_3, bp_9_10, c_2_3, d_2_3, e_3, m.
/// Throws PreconditionError unless the input is General.
IdealPoset build_P_poset(const Girth5Input& c);

/// Every summand of every H^r_m(R/J(complement)), each with multiplicity 1.
LCDecomposition closed_form_decompose(const Girth5Input& c, Field field);

/// Depth is 4 with a free edge, else 5 when H has an edge, else the least
/// |N[v]| + 2 over V(H). Dimension n+1, regularity 2 or 3 by whether H has edges.
/// Cohen-Macaulay exactly for P4 and K_{1,n-2} + K1.
HomologicalReport closed_form_report(const Girth5Input& c, Field field);

/// Outcome of running the generic engine on the complement next to the closed forms.
struct EquivalenceVerdict {
  bool poset_match = false;
  bool decomposition_match = false;
  bool report_match = false;
  std::vector<std::string> diffs;

  std::optional<IdealPoset> generic_poset;
  std::optional<LCDecomposition> generic_decomposition;
  std::optional<HomologicalReport> generic_report;

  bool match() const { return poset_match && decomposition_match && report_match; }
};

/// Compares build_poset(associated_primes(complement)) with build_P_poset,
/// the two decompositions, and the two reports. Requires a General input.
EquivalenceVerdict verify_equivalence(const Girth5Input& c, Field field, const EngineLimits& limits = {});

}  // namespace beilc

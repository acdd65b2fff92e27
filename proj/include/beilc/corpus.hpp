#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "beilc/graph.hpp"

namespace beilc {

inline constexpr std::size_t kMaxExhaustiveN = 10;

/// Isomorphism test by backtracking over colour-refined vertex classes.
bool isomorphic(const Graph& a, const Graph& b);

/// All graphs of girth >= 5 on exactly n vertices, one per isomorphism class,
/// in a fixed order. Throws BoundExceeded for n > kMaxExhaustiveN.
std::vector<Graph> girth5_graphs(std::size_t n);

/// Same, restricted to inputs classified as general.
std::vector<Graph> general_girth5_graphs(std::size_t n);

/// `count` random general girth >= 5 graphs with n cycling through [nmin, nmax].
/// Reproducible for a fixed seed on every platform.
std::vector<Graph> random_general_girth5_graphs(std::size_t count, std::size_t nmin, std::size_t nmax,
                                                std::uint64_t seed);

}  // namespace beilc

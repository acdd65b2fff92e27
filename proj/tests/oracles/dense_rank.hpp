#pragma once

// Textbook dense Gaussian elimination, kept separate from the library's
// sparse elimination so the two can be compared.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

inline std::size_t dense_rank_mod(std::vector<std::vector<long>> a, long p) {
  auto norm = [p](long v) { return ((v % p) + p) % p; };
  auto inverse = [&](long v) {
    for (long t = 1; t < p; ++t) {
      if (norm(v * t) == 1) return t;
    }
    return 0L;
  };
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && norm(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const long inv = inverse(norm(a[rank][c]));
    for (auto& v : a[rank]) v = norm(v * inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || norm(a[r][c]) == 0) continue;
      const long f = norm(a[r][c]);
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = norm(a[r][k] - f * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t dense_rank_rational(const std::vector<std::vector<long>>& in) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : in) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

#include "beilc/exact_rank.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace beilc {

namespace {

bool is_prime_number(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using BigInt = boost::multiprecision::cpp_int;

template <typename T>
using Row = std::vector<std::pair<std::size_t, T>>;

// Row elimination shared by both fields: `Arith` supplies combine(pivot, row)
// which must cancel the leading entry of `row` and return the reduced row.
template <typename T, typename Arith>
std::size_t incremental_rank(const SparseMatrix& m, Arith arith) {
  std::map<std::size_t, Row<T>> pivots;  // leading column -> pivot row
  for (const auto& raw : m.entries) {
    Row<T> row = arith.convert(raw);
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, arith.normalize(std::move(row)));
        break;
      }
      row = arith.combine(it->second, row);
    }
  }
  return pivots.size();
}

template <typename T, typename Scale>
Row<T> merge_rows(const Row<T>& a, const Row<T>& b, Scale fa, Scale fb, auto reduce) {
  // returns fa*a - fb*b with zero entries removed
  Row<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      T v = reduce(fa * a[i].second);
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      T v = reduce(-(fb * b[j].second));
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      T v = reduce(fa * a[i].second - fb * b[j].second);
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

struct RationalArith {
  Row<BigInt> convert(const std::vector<std::pair<std::size_t, long>>& raw) const {
    Row<BigInt> row;
    for (auto [c, v] : raw) {
      if (v != 0) row.emplace_back(c, BigInt(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  }
  Row<BigInt> normalize(Row<BigInt> row) const {
    BigInt g = 0;
    for (const auto& [c, v] : row) g = gcd(g, abs(v));
    if (g > 1) {
      for (auto& [c, v] : row) v /= g;
    }
    return row;
  }
  // pivot[c] * row - row[c] * pivot: fraction-free, then divide out the content.
  Row<BigInt> combine(const Row<BigInt>& pivot, const Row<BigInt>& row) const {
    BigInt fp = pivot.front().second;
    BigInt fr = row.front().second;
    BigInt g = gcd(abs(fp), abs(fr));
    fp /= g;
    fr /= g;
    return normalize(merge_rows<BigInt, BigInt>(row, pivot, fp, fr, [](BigInt v) { return v; }));
  }
};

struct ModularArith {
  std::uint64_t p;

  std::uint64_t reduce(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
  }
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  }
  Row<std::uint64_t> convert(const std::vector<std::pair<std::size_t, long>>& raw) const {
    Row<std::uint64_t> row;
    for (auto [c, v] : raw) {
      std::uint64_t r = reduce(v);
      if (r != 0) row.emplace_back(c, r);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  }
  Row<std::uint64_t> normalize(Row<std::uint64_t> row) const {
    std::uint64_t inv = inverse(row.front().second);
    for (auto& [c, v] : row) v = v * inv % p;
    return row;
  }
  // pivot is monic, so row - row[c] * pivot cancels the lead.
  Row<std::uint64_t> combine(const Row<std::uint64_t>& pivot, const Row<std::uint64_t>& row) const {
    const std::uint64_t f = row.front().second;
    Row<std::uint64_t> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
      std::uint64_t v = 0;
      std::size_t c = 0;
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        c = row[i].first;
        v = row[i++].second;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        c = pivot[j].first;
        v = (p - f * pivot[j++].second % p) % p;
      } else {
        c = row[i].first;
        v = (row[i++].second + p - f * pivot[j++].second % p) % p;
      }
      if (v != 0) out.emplace_back(c, v);
    }
    return out;
  }
};

}  // namespace

Field::Field(unsigned long p) : p_(p) {
  if (p != 0 && (!is_prime_number(p) || p >= (1UL << 31))) {
    throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  }
}

std::size_t rank(const SparseMatrix& m, Field field) {
  if (field.is_prime()) return incremental_rank<std::uint64_t>(m, ModularArith{field.characteristic()});
  return incremental_rank<BigInt>(m, RationalArith{});
}

}  // namespace beilc

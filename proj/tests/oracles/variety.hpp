#pragma once

// Points of V(q) over F_p for prime ideals of binomial-edge type, by direct
// evaluation of generators: killed variables vanish, and inside each block
// every 2x2 minor x_i y_j - x_j y_i vanishes.

#include <cstdint>
#include <functional>
#include <vector>

#include "beilc/prime_ideal.hpp"

namespace oracle {

struct Point {
  std::vector<unsigned> x;  // index v-1
  std::vector<unsigned> y;
};

inline bool vanishes_on(const beilc::PrimeIdeal& q, const Point& pt, unsigned p) {
  for (beilc::Vertex v : q.killed()) {
    if (pt.x[v - 1] != 0 || pt.y[v - 1] != 0) return false;
  }
  for (const auto& block : q.blocks()) {
    auto members = block.to_vector();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto i = members[a] - 1;
        const auto j = members[b] - 1;
        const auto lhs = (pt.x[i] * pt.y[j]) % p;
        const auto rhs = (pt.x[j] * pt.y[i]) % p;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

/// Calls f on every point of F_p^{2n}.
inline void for_each_point(std::size_t n, unsigned p, const std::function<void(const Point&)>& f) {
  Point pt{std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0)};
  const std::size_t coords = 2 * n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < coords; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      pt.x[i] = static_cast<unsigned>(c % p);
      c /= p;
      pt.y[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    f(pt);
  }
}

/// V(a + b) equals the union of V(parts) over F_p.
inline bool covers_variety(const beilc::PrimeIdeal& a, const beilc::PrimeIdeal& b,
                           const std::vector<beilc::PrimeIdeal>& parts, unsigned p) {
  bool ok = true;
  for_each_point(a.n(), p, [&](const Point& pt) {
    const bool in_sum = vanishes_on(a, pt, p) && vanishes_on(b, pt, p);
    bool in_union = false;
    for (const auto& q : parts) in_union = in_union || vanishes_on(q, pt, p);
    if (in_sum != in_union) ok = false;
  });
  return ok;
}

/// Some point of V(parts[i]) lies in no other V(parts[j]).
inline bool has_private_point(const std::vector<beilc::PrimeIdeal>& parts, std::size_t i, unsigned p) {
  bool found = false;
  for_each_point(parts[i].n(), p, [&](const Point& pt) {
    if (found || !vanishes_on(parts[i], pt, p)) return;
    bool elsewhere = false;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i && vanishes_on(parts[j], pt, p)) elsewhere = true;
    }
    found = !elsewhere;
  });
  return found;
}

}  // namespace oracle

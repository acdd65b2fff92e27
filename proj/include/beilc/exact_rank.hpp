#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace beilc {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  /// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
  explicit Field(unsigned long p);
  static Field rationals() { return Field(0); }

  unsigned long characteristic() const { return p_; }
  bool is_prime() const { return p_ != 0; }
  bool operator==(const Field&) const = default;

 private:
  unsigned long p_;
};

/// Sparse integer matrix; each row is a list of (column, value) with distinct columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long>>> entries;
};

/// Exact rank over `field`: fraction-free elimination with content removal
/// over Z for characteristic 0, modular elimination for F_p.
std::size_t rank(const SparseMatrix& m, Field field);

}  // namespace beilc

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beilc/prime_ideal.hpp"

namespace beilc {

inline constexpr std::size_t kDefaultMaxPosetElements = 100000;

/// Finite poset of prime ideals under reverse inclusion (q <= q' iff q ⊇ q'),
/// with an adjoined maximum. Elements are indexed 0..size()-1 in canonical
/// order (decreasing dimension, then ideal order); index size() is the top.
class IdealPoset {
 public:
  /// `leq` is the size x size reflexive, transitive relation over `elements`
  /// (row i, column j set iff elements[i] <= elements[j]). Elements are put
  /// into canonical order; `tags` (optional, same length) travel with them.
  IdealPoset(std::vector<PrimeIdeal> elements, std::vector<std::vector<bool>> leq,
             std::vector<std::string> tags = {});

  std::size_t size() const { return elements_.size(); }
  std::size_t top() const { return elements_.size(); }
  const PrimeIdeal& element(std::size_t i) const { return elements_[i]; }
  const std::vector<PrimeIdeal>& elements() const { return elements_; }

  /// Order relation on 0..size(), with top() above everything.
  bool leq(std::size_t i, std::size_t j) const;
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  std::optional<std::size_t> index_of(const PrimeIdeal& q) const;

  /// Cover relations (i, j): i < j with nothing strictly between, including covers of the top.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Elements covered by the top: the minimal primes of the ideal.
  std::vector<std::size_t> maximal_elements() const;

  bool has_tags() const { return !tags_.empty(); }
  /// Symbolic tag if present, otherwise the ideal's string form; "TOP" for the top.
  std::string label(std::size_t i) const;
  void set_tags(std::vector<std::string> tags);
  /// Takes over the tags of `other` when both hold the same ideals; returns whether it did.
  bool copy_tags_from(const IdealPoset& other);

  /// Reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

  /// Same elements and the same order (tags ignored).
  bool same_as(const IdealPoset& other) const;

 private:
  std::vector<PrimeIdeal> elements_;
  std::vector<std::uint8_t> leq_;  // row-major size x size
  std::vector<std::string> tags_;
};

/// Closes `minimal_primes` under pairwise sums (replacing each sum by its
/// minimal primes) and orders the result by reverse inclusion.
/// Throws BoundExceeded once more than `max_elements` ideals appear.
IdealPoset build_poset(const std::vector<PrimeIdeal>& minimal_primes,
                       std::size_t max_elements = kDefaultMaxPosetElements);

}  // namespace beilc

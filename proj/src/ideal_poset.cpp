#include "beilc/ideal_poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "beilc/errors.hpp"

namespace beilc {

IdealPoset::IdealPoset(std::vector<PrimeIdeal> elements, std::vector<std::vector<bool>> leq,
                       std::vector<std::string> tags) {
  const std::size_t k = elements.size();
  if (leq.size() != k) throw std::invalid_argument("order relation has the wrong size");
  for (const auto& row : leq) {
    if (row.size() != k) throw std::invalid_argument("order relation has the wrong size");
  }
  if (!tags.empty() && tags.size() != k) throw std::invalid_argument("one tag per element expected");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto da = elements[a].dimension();
    auto db = elements[b].dimension();
    if (da != db) return da > db;
    return elements[a] < elements[b];
  });
  for (std::size_t i = 1; i < k; ++i) {
    if (elements[order[i]] == elements[order[i - 1]]) {
      throw std::invalid_argument("duplicate poset element " + elements[order[i]].to_string());
    }
  }

  elements_.reserve(k);
  for (std::size_t i : order) elements_.push_back(elements[i]);
  if (!tags.empty()) {
    for (std::size_t i : order) tags_.push_back(tags[i]);
  }
  leq_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq_[i * k + j] = leq[order[i]][order[j]] ? 1 : 0;
  }
}

bool IdealPoset::leq(std::size_t i, std::size_t j) const {
  const std::size_t k = size();
  if (j == k) return true;
  if (i == k) return false;
  return leq_[i * k + j] != 0;
}

std::optional<std::size_t> IdealPoset::index_of(const PrimeIdeal& q) const {
  auto it = std::find(elements_.begin(), elements_.end(), q);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> IdealPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t total = size() + 1;
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (!less(i, j)) continue;
      bool between = false;
      for (std::size_t m = 0; m < total && !between; ++m) between = less(i, m) && less(m, j);
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> IdealPoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < size() && !covered; ++j) covered = less(i, j);
    if (!covered) out.push_back(i);
  }
  return out;
}

std::string IdealPoset::label(std::size_t i) const {
  if (i == top()) return "TOP";
  return tags_.empty() ? elements_[i].to_string() : tags_[i];
}

void IdealPoset::set_tags(std::vector<std::string> tags) {
  if (!tags.empty() && tags.size() != size()) throw std::invalid_argument("one tag per element expected");
  tags_ = std::move(tags);
}

bool IdealPoset::copy_tags_from(const IdealPoset& other) {
  if (!other.has_tags() || elements_ != other.elements_) return false;
  tags_ = other.tags_;
  return true;
}

bool IdealPoset::is_partial_order() const {
  const std::size_t k = size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!leq(i, i)) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (!leq(i, j)) continue;
      for (std::size_t m = 0; m < k; ++m) {
        if (leq(j, m) && !leq(i, m)) return false;
      }
    }
  }
  return true;
}

bool IdealPoset::same_as(const IdealPoset& other) const {
  return elements_ == other.elements_ && leq_ == other.leq_;
}

IdealPoset build_poset(const std::vector<PrimeIdeal>& minimal_primes, std::size_t max_elements) {
  std::vector<PrimeIdeal> elements;
  std::set<PrimeIdeal> seen;
  auto add = [&](const PrimeIdeal& q) {
    if (!seen.insert(q).second) return;
    elements.push_back(q);
    if (elements.size() > max_elements) {
      throw BoundExceeded("poset closure exceeded " + std::to_string(max_elements) + " elements");
    }
  };
  for (const auto& p : minimal_primes) add(p);

  // Worklist closure: each new element is summed with every earlier one.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const PrimeIdeal a = elements[i];
      const PrimeIdeal b = elements[j];
      for (const auto& q : sum_decompose(a, b)) add(q);
    }
  }

  const std::size_t k = elements.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = elements[i].contains(elements[j]);
  }
  return IdealPoset(std::move(elements), std::move(leq));
}

}  // namespace beilc

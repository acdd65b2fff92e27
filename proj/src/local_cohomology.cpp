#include "beilc/local_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "beilc/poset_topology.hpp"

namespace beilc {

void LCDecomposition::add(std::size_t r, Summand s) {
  if (s.multiplicity == 0) return;
  auto& list = modules_[r];
  auto pos = std::lower_bound(list.begin(), list.end(), s.ideal,
                              [](const Summand& x, const PrimeIdeal& q) { return x.ideal < q; });
  if (pos != list.end() && pos->ideal == s.ideal) {
    throw std::logic_error("H^" + std::to_string(r) + " already has a summand for " + s.ideal.to_string());
  }
  list.insert(pos, std::move(s));
}

std::size_t LCDecomposition::depth() const {
  if (modules_.empty()) throw std::logic_error("empty decomposition: the quotient ring is zero");
  return modules_.begin()->first;
}

std::size_t LCDecomposition::dimension() const {
  if (modules_.empty()) throw std::logic_error("empty decomposition: the quotient ring is zero");
  return modules_.rbegin()->first;
}

bool LCDecomposition::same_as(const LCDecomposition& other) const {
  if (n_ != other.n_ || !(field_ == other.field_) || modules_.size() != other.modules_.size()) return false;
  for (auto a = modules_.begin(), b = other.modules_.begin(); a != modules_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.size() != b->second.size()) return false;
    for (std::size_t i = 0; i < a->second.size(); ++i) {
      const Summand& x = a->second[i];
      const Summand& y = b->second[i];
      if (x.ideal != y.ideal || x.dimension != y.dimension || x.multiplicity != y.multiplicity) return false;
    }
  }
  return true;
}

LCDecomposition decompose_poset(const IdealPoset& poset, std::size_t n, Field field) {
  LCDecomposition out(n, field);
  auto profiles = interval_profiles(poset, field);
  for (std::size_t q = 0; q < poset.size(); ++q) {
    const std::size_t d = poset.element(q).dimension();
    for (auto [degree, mult] : profiles[q].nonzero()) {
      // degree = r - d - 1
      const long r = degree + static_cast<long>(d) + 1;
      if (r < 0 || r > static_cast<long>(2 * n)) {
        throw std::logic_error("cohomological degree " + std::to_string(r) + " outside [0, 2n]");
      }
      out.add(static_cast<std::size_t>(r),
              Summand{poset.element(q), d, mult, poset.has_tags() ? poset.label(q) : std::string{}});
    }
  }
  return out;
}

LCDecomposition decompose(const Graph& g, Field field, const EngineLimits& limits) {
  auto poset = build_poset(associated_primes(g, limits.max_subset_n), limits.max_poset_elements);
  return decompose_poset(poset, g.n(), field);
}

void set_prime_characteristic_bounds(HomologicalReport& r, std::size_t n, Field field) {
  if (field.is_prime()) {
    r.cohomological_dimension = 2 * n - r.depth;
    r.ara = AraBounds{2 * n - r.depth, 2 * n};
  } else {
    r.cohomological_dimension.reset();
    r.ara.reset();
  }
}

HomologicalReport report(const LCDecomposition& d, const RegularityFn& reg_per_prime) {
  HomologicalReport r;
  r.depth = d.depth();
  r.dimension = d.dimension();
  r.cohen_macaulay = r.depth == r.dimension;
  long best = 0;
  bool first = true;
  for (const auto& [degree, summands] : d.modules()) {
    for (const auto& s : summands) {
      const std::size_t reg = reg_per_prime ? reg_per_prime(s.ideal) : s.ideal.regularity();
      const long value = static_cast<long>(reg) - static_cast<long>(s.dimension) + static_cast<long>(degree);
      best = first ? value : std::max(best, value);
      first = false;
    }
  }
  if (best < 0) throw std::logic_error("negative regularity");
  r.regularity = static_cast<std::size_t>(best);
  set_prime_characteristic_bounds(r, d.n(), d.field());
  return r;
}

}  // namespace beilc

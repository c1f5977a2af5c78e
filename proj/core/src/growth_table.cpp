#include "gotzmann/growth_table.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace gotzmann {

const char* to_string(GrowthFormula formula) noexcept {
  switch (formula) {
    case GrowthFormula::BinomialRep:
      return "binomial-rep";
    case GrowthFormula::BelowBoundary:
      return "below-boundary";
    case GrowthFormula::Boundary:
      return "boundary";
    case GrowthFormula::Difference:
      return "difference";
  }
  return "?";
}

GrowthTable::GrowthTable() : GrowthTable(Options{}) {}

GrowthTable::GrowthTable(Options options) : options_(options) {}

template <class Key, class Compute>
Count GrowthTable::get_or_compute(std::map<Key, GrowthEntry>& memo, const Key& key, Compute&& compute) {
  if (options_.enabled) {
    std::shared_lock lock(mutex_);
    if (auto it = memo.find(key); it != memo.end()) return it->second.value;
  }
  const GrowthEntry entry = compute();
  if (options_.enabled) {
    std::unique_lock lock(mutex_);
    if (memo_s_.size() + memo_r_.size() < options_.capacity) memo.try_emplace(key, entry);
  }
  return entry.value;
}

Count GrowthTable::growth_S(Count d, std::size_t n) {
  return get_or_compute(memo_s_, KeyS{d, n}, [&] {
    GrowthEntry e{gotzmann::growth_S(d, n), GrowthFormula::BinomialRep, false};
    if (options_.check_with_oracle) {
      const Count oracle = growth_S_oracle(d, n);
      if (oracle != e.value)
        throw std::logic_error("growth_S(" + std::to_string(d) + ", " + std::to_string(n) +
                               ") disagrees with the shadow oracle");
      e.oracle_checked = true;
    }
    return e;
  });
}

Count GrowthTable::growth_R(Count d, std::size_t n, Exponent a, Degree t) {
  return get_or_compute(memo_r_, KeyR{d, n, a, t}, [&] {
    GrowthEntry e{gotzmann::growth_R(d, n, a, t), GrowthFormula::Difference, false};
    switch (quotient_regime(a, t)) {
      case QuotientRegime::BelowBoundary:
        e.formula = GrowthFormula::BelowBoundary;
        break;
      case QuotientRegime::Boundary:
        e.formula = GrowthFormula::Boundary;
        break;
      case QuotientRegime::Difference:
        e.formula = GrowthFormula::Difference;
        break;
    }
    if (options_.check_with_oracle) {
      const Count oracle = growth_R_oracle(d, n, a, t);
      if (oracle != e.value)
        throw std::logic_error("growth_R(" + std::to_string(d) + ", " + std::to_string(n) + ", " +
                               std::to_string(a) + ", " + std::to_string(t) + ") disagrees with the shadow oracle");
      e.oracle_checked = true;
    }
    return e;
  });
}

std::optional<GrowthEntry> GrowthTable::find_S(Count d, std::size_t n) const {
  std::shared_lock lock(mutex_);
  if (auto it = memo_s_.find(KeyS{d, n}); it != memo_s_.end()) return it->second;
  return std::nullopt;
}

std::optional<GrowthEntry> GrowthTable::find_R(Count d, std::size_t n, Exponent a, Degree t) const {
  std::shared_lock lock(mutex_);
  if (auto it = memo_r_.find(KeyR{d, n, a, t}); it != memo_r_.end()) return it->second;
  return std::nullopt;
}

std::size_t GrowthTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_s_.size() + memo_r_.size();
}

}  // namespace gotzmann

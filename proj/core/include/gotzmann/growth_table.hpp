#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>

#include "gotzmann/growth.hpp"

namespace gotzmann {

enum class GrowthFormula { BinomialRep, BelowBoundary, Boundary, Difference };

const char* to_string(GrowthFormula formula) noexcept;

struct GrowthEntry {
  Count value = 0;
  GrowthFormula formula = GrowthFormula::BinomialRep;
  bool oracle_checked = false;
};

/// Get-or-compute memo for growth_S and growth_R. Purely an optimization:
/// results are identical with memoization disabled. Thread-safe.
///
/// With oracle checking on, every freshly computed value is compared with
/// the direct-shadow oracle; a mismatch throws std::logic_error and the
/// value is not stored.
class GrowthTable {
 public:
  struct Options {
    std::size_t capacity = 1u << 16;
    bool enabled = true;
    bool check_with_oracle = false;
  };

  GrowthTable();
  explicit GrowthTable(Options options);

  Count growth_S(Count d, std::size_t n);
  Count growth_R(Count d, std::size_t n, Exponent a, Degree t);

  std::optional<GrowthEntry> find_S(Count d, std::size_t n) const;
  std::optional<GrowthEntry> find_R(Count d, std::size_t n, Exponent a, Degree t) const;

  std::size_t size() const;
  const Options& options() const noexcept { return options_; }

 private:
  using KeyS = std::tuple<Count, std::size_t>;
  using KeyR = std::tuple<Count, std::size_t, Exponent, Degree>;

  template <class Key, class Compute>
  Count get_or_compute(std::map<Key, GrowthEntry>& memo, const Key& key, Compute&& compute);

  Options options_;
  mutable std::shared_mutex mutex_;
  std::map<KeyS, GrowthEntry> memo_s_;
  std::map<KeyR, GrowthEntry> memo_r_;
};

}  // namespace gotzmann

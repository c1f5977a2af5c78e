#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Exact C(top, bottom); 0 when bottom > top. Throws std::overflow_error if
/// the result does not fit in 64 bits.
Count binomial(Count top, Count bottom);

struct BinomialTerm {
  Count top = 0;
  Count bottom = 0;
  bool operator==(const BinomialTerm&) const = default;
};

/// The n-variable binomial representation of a positive integer d:
///
///   d = C(q_n + n-2, n-1) + C(q_{n-1} + n-3, n-2) + ... + C(q_j + j-2, j-1)
///
/// with q_n >= q_{n-1} >= ... >= q_j >= 1, each q_k chosen greedily as large
/// as possible. Term k counts the complete x1-slices of a size-d lexsegment in
/// k variables before the remainder drops into k-1 variables. The shadow size
/// of that lexsegment is then sum_k C(q_k + k-1, k-1).
class BinomialRep {
 public:
  /// Validates that the terms form the greedy representation of d.
  BinomialRep(Count d, std::size_t num_vars, std::vector<BinomialTerm> terms);

  Count value() const noexcept { return value_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::span<const BinomialTerm> terms() const noexcept { return terms_; }

  /// sum C(top + 1, bottom): shadow size of the size-d lexsegment.
  Count growth() const;

 private:
  Count value_;
  std::size_t num_vars_;
  std::vector<BinomialTerm> terms_;
};

/// Greedy construction; d >= 1 and num_vars >= 1.
BinomialRep macaulay_rep(Count d, std::size_t num_vars);

}  // namespace gotzmann

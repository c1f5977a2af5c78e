#include "gotzmann/binomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gotzmann/errors.hpp"

namespace gotzmann {

Count binomial(Count top, Count bottom) {
  if (bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  unsigned __int128 acc = 1;
  for (Count i = 1; i <= bottom; ++i) {
    acc = acc * (top - bottom + i) / i;
    if (acc > static_cast<unsigned __int128>(~Count{0})) throw std::overflow_error("binomial coefficient overflows");
  }
  return static_cast<Count>(acc);
}

namespace {

/// C(top, bottom), or limit + 1 if it exceeds limit (or overflows).
Count binomial_capped(Count top, Count bottom, Count limit) {
  try {
    return std::min(binomial(top, bottom), limit + 1);
  } catch (const std::overflow_error&) {
    return limit + 1;
  }
}

/// Largest q >= 1 with C(q + k - 2, k - 1) <= rem, for k >= 2 and rem >= 1.
Count greedy_slices(Count rem, Count k) {
  if (k == 2) return rem;
  Count lo = 1;  // C(k-1, k-1) = 1 <= rem
  Count hi = 2;
  while (binomial_capped(hi + k - 2, k - 1, rem) <= rem) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Count mid = lo + (hi - lo) / 2;
    if (binomial_capped(mid + k - 2, k - 1, rem) <= rem)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BinomialRep::BinomialRep(Count d, std::size_t num_vars, std::vector<BinomialTerm> terms)
    : value_(d), num_vars_(num_vars), terms_(std::move(terms)) {
  if (d < 1) throw UsageError("binomial representation needs d >= 1");
  if (num_vars < 1) throw UsageError("binomial representation needs at least one variable");
  if (terms_.empty() || terms_.size() > num_vars) throw UsageError("binomial representation: bad term count");

  Count sum = 0;
  Count prev_q = ~Count{0};
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& term = terms_[i];
    if (term.bottom != num_vars - 1 - i) throw UsageError("binomial representation: bottoms must step down from n-1");
    if (term.top < term.bottom) throw UsageError("binomial representation: top below bottom");
    const Count q = term.top - term.bottom + 1;
    if (q > prev_q) throw UsageError("binomial representation: slice counts must be non-increasing");
    prev_q = q;
    sum += binomial(term.top, term.bottom);
  }
  if (sum != d) throw UsageError("binomial representation does not sum to " + std::to_string(d));

  // Greedy maximality: what follows term k must be smaller than C(top, bottom - 1).
  Count tail = 0;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    const auto& term = terms_[i];
    if (term.bottom == 0) {
      if (term.top != 0) throw UsageError("binomial representation: one-variable term must be C(0,0)");
    } else if (tail >= binomial(term.top, term.bottom - 1)) {
      throw UsageError("binomial representation is not greedy");
    }
    tail += binomial(term.top, term.bottom);
  }
}

Count BinomialRep::growth() const {
  Count g = 0;
  for (const auto& term : terms_) g += binomial(term.top + 1, term.bottom);
  return g;
}

BinomialRep macaulay_rep(Count d, std::size_t num_vars) {
  if (d < 1) throw UsageError("macaulay_rep: d must be positive");
  if (num_vars < 1) throw UsageError("macaulay_rep: need at least one variable");
  std::vector<BinomialTerm> terms;
  Count rem = d;
  for (Count k = num_vars; k >= 1 && rem > 0; --k) {
    if (k == 1) {
      // Only reachable with num_vars == 1: a stratum in one variable holds one monomial.
      if (rem != 1) throw DefinednessError("macaulay_rep: one variable admits d <= 1");
      terms.push_back({0, 0});
      rem = 0;
      break;
    }
    const Count q = greedy_slices(rem, k);
    const BinomialTerm term{q + k - 2, k - 1};
    terms.push_back(term);
    rem -= binomial(term.top, term.bottom);
  }
  return BinomialRep(d, num_vars, std::move(terms));
}

}  // namespace gotzmann

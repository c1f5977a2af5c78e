#include "gotzmann/growth.hpp"

#include <algorithm>
#include <string>

#include "gotzmann/errors.hpp"
#include "internal.hpp"

namespace gotzmann {

namespace {

void require_defined(Count d, Count dim, const char* what) {
  if (d > dim)
    throw DefinednessError(std::string(what) + ": d = " + std::to_string(d) + " exceeds stratum size " +
                           std::to_string(dim));
}

/// dim S_t in m variables (m may be 0).
Count polynomial_dim(std::size_t m, Degree t) {
  if (m == 0) return t == 0 ? 1 : 0;
  return binomial(Count{t} + m - 1, m - 1);
}

}  // namespace

MonomialSet lex_segment(const RingSpec& ring, Degree t, Count d) {
  require_defined(d, dim_degree(ring, t), "lex_segment");
  auto all = enumerate_degree(ring, t);
  all.resize(static_cast<std::size_t>(d));
  return make_trusted_set(ring, t, std::move(all));
}

bool is_lexsegment(const MonomialSet& set) {
  if (set.empty()) return true;
  const auto all = enumerate_degree(set.ring(), set.degree());
  return std::equal(set.begin(), set.end(), all.begin());
}

MonomialSet b_set(std::size_t n, Exponent a, Degree t) {
  if (n < 1) throw UsageError("b_set: need at least one variable");
  if (a < 1) throw UsageError("b_set: cap must be >= 1");
  const RingSpec s = RingSpec::polynomial(n);
  if (t < a) return MonomialSet(s, t);
  const Monomial shift = Monomial::pure_power(n, 0, a);
  auto base = enumerate_degree(s, t - a);
  for (auto& m : base) m = m.times(shift);
  return make_trusted_set(s, t, std::move(base));
}

Count lex_growth(Count d, std::size_t num_vars) {
  if (d == 0 || num_vars == 0) return 0;
  if (num_vars == 1) return 1;
  return macaulay_rep(d, num_vars).growth();
}

Count growth_S(Count d, std::size_t n, std::optional<Degree> hint_t) {
  if (n < 1) throw UsageError("growth_S: need at least one variable");
  if (hint_t) require_defined(d, polynomial_dim(n, *hint_t), "growth_S");
  if (n == 1 && d > 1) throw DefinednessError("growth_S: one variable admits d <= 1");
  return lex_growth(d, n);
}

Degree minimal_feasible_degree(Count d, std::size_t n) {
  if (n < 1) throw UsageError("minimal_feasible_degree: need at least one variable");
  if (n == 1) {
    if (d > 1) throw DefinednessError("one variable admits d <= 1");
    return 0;
  }
  Degree t = 0;
  while (polynomial_dim(n, t) < d) ++t;
  return t;
}

Count growth_S_oracle(Count d, std::size_t n, std::optional<Degree> t) {
  const Degree deg = t ? *t : minimal_feasible_degree(d, n);
  return shadow(lex_segment(RingSpec::polynomial(n), deg, d)).size();
}

const char* to_string(QuotientRegime regime) noexcept {
  switch (regime) {
    case QuotientRegime::BelowBoundary:
      return "below-boundary";
    case QuotientRegime::Boundary:
      return "boundary";
    case QuotientRegime::Difference:
      return "difference";
  }
  return "?";
}

QuotientRegime quotient_regime(Exponent a, Degree t) noexcept {
  if (Count{t} + 1 < a) return QuotientRegime::BelowBoundary;
  if (Count{t} + 1 == a) return QuotientRegime::Boundary;
  return QuotientRegime::Difference;
}

namespace {

void check_quotient_args(Count d, std::size_t n, Exponent a, Degree t, const char* what) {
  if (n < 1) throw UsageError(std::string(what) + ": need at least one variable");
  if (a < 1) throw UsageError(std::string(what) + ": cap must be >= 1");
  require_defined(d, dim_degree(RingSpec::pure_power(n, a), t), what);
}

}  // namespace

Count growth_R(Count d, std::size_t n, Exponent a, Degree t) {
  check_quotient_args(d, n, a, t, "growth_R");
  if (d == 0) return 0;
  switch (quotient_regime(a, t)) {
    case QuotientRegime::BelowBoundary:
      return lex_growth(d, n);
    case QuotientRegime::Boundary:
      return lex_growth(d, n) - 1;
    case QuotientRegime::Difference:
      return growth_R_difference(d, n, a, t);
  }
  return 0;
}

Count growth_R_slice_sum(Count d, std::size_t n, Exponent a, Degree t) {
  check_quotient_args(d, n, a, t, "growth_R_slice_sum");
  if (Count{t} + 1 < a) throw UsageError("growth_R_slice_sum: requires t >= a-1");
  // The lexsegment fills x1-slices from i = a-1 downwards; slice i is
  // x1^i times a lexsegment of S' in degree t-i.
  Count rem = d;
  Count total = 0;
  for (Degree i = a; i-- > 0 && rem > 0;) {
    const Count take = std::min(rem, polynomial_dim(n - 1, t - i));
    total += lex_growth(take, n - 1);
    rem -= take;
  }
  return total;
}

Count growth_R_difference(Count d, std::size_t n, Exponent a, Degree t) {
  check_quotient_args(d, n, a, t, "growth_R_difference");
  if (t < a) throw UsageError("growth_R_difference: requires t >= a");
  const Count b = polynomial_dim(n, t - a);
  return lex_growth(d + b, n) - lex_growth(b, n);
}

Count growth_R_oracle(Count d, std::size_t n, Exponent a, Degree t) {
  check_quotient_args(d, n, a, t, "growth_R_oracle");
  return shadow(lex_segment(RingSpec::pure_power(n, a), t, d)).size();
}

Count lex_target(const RingSpec& ring, Degree t, Count d) {
  require_defined(d, dim_degree(ring, t), "lex_target");
  if (ring.num_vars() == 0) return 0;
  if (ring.is_polynomial()) return growth_S(d, ring.num_vars(), t);
  if (const auto a = ring.single_cap()) return growth_R(d, ring.num_vars(), *a, t);
  if (!ring.caps_sorted())
    throw DefinednessError("caps are not sorted ascending; the lexsegment is not guaranteed to grow minimally");
  return shadow(lex_segment(ring, t, d)).size();
}

}  // namespace gotzmann

#pragma once

#include <optional>

#include "gotzmann/binomial.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// The d lex-largest monomials of the degree-t stratum.
/// Throws DefinednessError when d exceeds the stratum.
MonomialSet lex_segment(const RingSpec& ring, Degree t, Count d);

/// Closed upward under lex within its stratum.
bool is_lexsegment(const MonomialSet& set);

/// { m in S_t : exponent of x1 >= a } in n variables.
MonomialSet b_set(std::size_t n, Exponent a, Degree t);

/// Shadow size of a size-d lexsegment in `num_vars` variables (d^{<n-1>}
/// for n = num_vars). Degree-free; num_vars may be 0 (always 0) and in one
/// variable the value is min(d, 1).
Count lex_growth(Count d, std::size_t num_vars);

/// Minimal growth in S = F[x1..xn] via the binomial representation.
/// With a degree hint, d must fit in S_t.
Count growth_S(Count d, std::size_t n, std::optional<Degree> hint_t = std::nullopt);

/// Direct shadow of the lexsegment in S_t; t defaults to the smallest degree
/// whose stratum holds d monomials.
Count growth_S_oracle(Count d, std::size_t n, std::optional<Degree> t = std::nullopt);

/// Smallest t with d <= dim S_t.
Degree minimal_feasible_degree(Count d, std::size_t n);

/// Which closed form growth_R used.
enum class QuotientRegime {
  BelowBoundary,  // t < a-1: equals growth in S
  Boundary,       // t = a-1: growth in S minus one (x1^a vanishes)
  Difference,     // t >= a: (d + |B|)^{<n-1>} - |B|^{<n-1>}
};

const char* to_string(QuotientRegime regime) noexcept;
QuotientRegime quotient_regime(Exponent a, Degree t) noexcept;

/// d_{n,t}: shadow size of the size-d lexsegment of R_t, R = S/(x1^a).
Count growth_R(Count d, std::size_t n, Exponent a, Degree t);

/// Slice-sum form sum_{j <= i <= a-1} |L^i|^{<n-2>}; requires t >= a-1.
Count growth_R_slice_sum(Count d, std::size_t n, Exponent a, Degree t);
/// Difference form (d + |B|)^{<n-1>} - |B|^{<n-1>}; requires t >= a.
Count growth_R_difference(Count d, std::size_t n, Exponent a, Degree t);
/// Direct shadow of the constructed lexsegment.
Count growth_R_oracle(Count d, std::size_t n, Exponent a, Degree t);

/// Shadow size of the size-d lexsegment in an arbitrary ring. Uses the
/// closed forms for S and S/(x1^a); otherwise builds the lexsegment.
/// Multi-cap rings must have sorted caps, else DefinednessError (the
/// lexsegment is not guaranteed to be minimal).
Count lex_target(const RingSpec& ring, Degree t, Count d);

}  // namespace gotzmann

#pragma once

#include <optional>
#include <vector>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Which statement of the component theorem applies at slice index i.
enum class ComponentBranch {
  GotzmannSlice,  // growth(d_i) >= d_{i-1}: the deflated slice must be Gotzmann
  SizeBound,      // 1 <= i <= t and growth(d_i) < d_{i-1}: size disjunction must hold
  Unclaimed,      // growth(d_i) < d_{i-1} outside 1..t; nothing is asserted
};

const char* to_string(ComponentBranch branch) noexcept;

struct ComponentEntry {
  Degree index = 0;
  ComponentBranch branch = ComponentBranch::Unclaimed;
  bool verdict = true;
};

struct ComponentCheck {
  std::size_t axis = 0;
  std::vector<ComponentEntry> entries;  // i = 0 .. t+1
  bool all_hold() const noexcept;
};

struct SliceGrowthEntry {
  Degree index = 0;
  Count actual = 0;    // |slice_i(shadow M)|
  Count expected = 0;  // max{ growth_{n-1}(d_i), d_{i-1} }
  bool holds() const noexcept { return actual == expected; }
};

struct SliceGrowthCheck {
  std::size_t axis = 0;
  std::vector<SliceGrowthEntry> entries;  // i = 0 .. t+1
  bool all_hold() const noexcept;
};

struct GotzmannReport {
  RingSpec ring;
  Degree degree = 0;
  Count size = 0;
  Count actual = 0;  // |ring_1 * M|
  Count target = 0;  // shadow size of the equal-size lexsegment
  bool gotzmann = false;
  std::vector<SliceProfile> profiles;  // one per variable
  /// Component-theorem branches per axis; filled for Gotzmann sets in S.
  std::vector<ComponentCheck> components;
};

/// Gotzmann verdict against the lexsegment of equal size. Multi-cap rings
/// with unsorted caps are refused with DefinednessError.
GotzmannReport is_gotzmann(const MonomialSet& set);
/// Same, after viewing the set in `ring`.
GotzmannReport is_gotzmann(const RingSpec& ring, const MonomialSet& set);

enum class TransferRegime {
  Ghost,     // t >= a: compare with B + M in S
  Boundary,  // t = a-1: compare with "Gotzmann in S and contains x1^{a-1}"
};

const char* to_string(TransferRegime regime) noexcept;

struct TransferVerdict {
  TransferRegime regime = TransferRegime::Ghost;
  bool gotzmann_in_quotient = false;
  /// Ghost: B + M Gotzmann in S_t. Boundary: M Gotzmann in S_t and x1^{a-1} in M.
  bool s_side = false;
  bool equivalent() const noexcept { return gotzmann_in_quotient == s_side; }
};

/// Evaluates both sides of the S <-> S/(x1^a) transfer independently.
/// M must lie in R_t, R = S/(x1^a). Throws OutOfScopeError for t < a-1.
TransferVerdict verify_transfer(const MonomialSet& set, std::size_t n, Exponent a, Degree t);

/// |slice_i(S_1 * M)| against max{ growth_{n-1}(d_i), d_{i-1} } for
/// 0 <= i <= t+1, no Gotzmann precondition (only >= is guaranteed).
SliceGrowthCheck slice_growth_compare(const MonomialSet& set, std::size_t axis);

/// As above, but for a Gotzmann set in S where equality must hold.
/// Refuses (UsageError) sets that are not Gotzmann or not in a polynomial ring.
SliceGrowthCheck slice_growth_check(const MonomialSet& set, std::size_t axis);

/// Replaces each slice's deflation by the lexsegment of the same size in
/// the remaining variables. Preserves the slice profile and never increases
/// the shadow. Requires a polynomial ring.
MonomialSet slice_lex_compress(const MonomialSet& set, std::size_t axis);

/// Per-index component-theorem verdicts for a Gotzmann set in S.
/// Refuses non-Gotzmann input with UsageError.
ComponentCheck component_theorem_check(const MonomialSet& set, std::size_t axis);

}  // namespace gotzmann

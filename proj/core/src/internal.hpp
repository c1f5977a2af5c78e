#pragma once

#include <vector>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Builds a set from members already known to be valid, sorted descending
/// and duplicate-free. Skips validation; for use inside the library only.
MonomialSet make_trusted_set(RingSpec ring, Degree degree, std::vector<Monomial> sorted_members);

/// Sorts descending and removes duplicates.
void sort_unique_desc(std::vector<Monomial>& members);

}  // namespace gotzmann

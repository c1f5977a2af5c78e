#pragma once

#include <string>
#include <vector>

#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Default exhaustive-search budget: $GOTZMANN_BUDGET if set, else 5e7 subsets.
Count default_budget();

struct CensusOptions {
  bool store_witnesses = false;
  unsigned threads = 1;
  Count budget = default_budget();
  /// Skip subtrees whose partial shadow already exceeds the lex target.
  /// Shadows only grow under inclusion, so counts and witnesses are unchanged.
  bool prune = false;
};

/// Result of examining every d-subset of one degree stratum.
struct CensusRecord {
  RingSpec ring;
  Degree degree = 0;
  Count size = 0;
  Count target = 0;          // lexsegment shadow size
  Count subsets_total = 0;   // C(dim, d)
  Count gotzmann_count = 0;  // subsets with shadow == target
  Count below_target = 0;    // subsets with shadow < target (minimality violations)
  std::vector<MonomialSet> witnesses;  // canonical order, when stored
  std::vector<bool> witness_is_lex;
  double elapsed_ms = 0.0;
};

/// Exhaustive Gotzmann census of R_t for subsets of size d. Witness order:
/// members descending in lex; sets ordered by their member lists, a set
/// whose first differing member is lex-larger coming first. Output does not
/// depend on the thread count. Throws BudgetExceeded when C(dim, d) > budget.
CensusRecord enumerate_gotzmann(const RingSpec& ring, Degree t, Count d, const CensusOptions& options = {});

/// One witness per line in set-line format.
std::string census_witness_lines(const CensusRecord& record);
/// {"params":{ring,t,d}, "count", "target", "subsets", "below_target",
/// "lexsegment_witnesses", "budget", "elapsed"}; elapsed is in milliseconds.
std::string census_summary_json(const CensusRecord& record, Count budget, bool include_timing = true);

}  // namespace gotzmann

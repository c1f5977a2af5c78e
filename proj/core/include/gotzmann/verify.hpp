#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gotzmann/gotzmann.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Inclusive integer range.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool empty() const noexcept { return hi < lo; }
};

struct SweepConfig {
  IntRange n{1, 5};
  IntRange a{1, 4};
  IntRange t{0, 10};
  IntRange d{1, 60};

  bool check_n_monotone = true;
  bool check_t_antitone = true;
  bool check_stabilization = true;

  /// Degrees beyond the detected stabilization point that must stay constant.
  Degree stabilization_window = 5;
  /// Largest degree searched for stabilization before reporting a failure.
  Degree stabilization_limit = 1024;

  unsigned threads = 1;
  bool record_tuples = false;

  /// Throws UsageError on empty or out-of-domain ranges.
  void validate() const;
};

struct Failure {
  std::string tuple;
  std::string detail;
  bool operator==(const Failure&) const = default;
};

struct StabilizationWitness {
  Count d = 0;
  std::size_t n = 0;
  Exponent a = 0;
  Degree t_star = 0;
  bool operator==(const StabilizationWitness&) const = default;
};

struct ClaimResult {
  std::string claim_id;
  Count tuples_checked = 0;
  Count tuples_skipped = 0;
  std::vector<Failure> failures;
  std::vector<StabilizationWitness> stabilization_witnesses;
  std::vector<std::string> checked_tuples;  // only with record_tuples
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

struct SweepResult {
  std::vector<ClaimResult> claims;

  Count total_checked() const noexcept;
  Count total_skipped() const noexcept;
  Count total_failures() const noexcept;
  bool passed() const noexcept { return total_failures() == 0; }
  void append(SweepResult other);
};

/// d_{n+1,t} > d_{n,t}, d_{n,t+1} <= d_{n,t}, and eventual stabilization at
/// growth in n-1 variables (n >= 3) over the configured ranges.
SweepResult sweep_monotonicity(const SweepConfig& cfg);

/// The shift rule: t - j2 when j1 = j2 != a-1 and the corner monomial
/// x1^{j1} x_n^{t-j1} lies in neither set, else t + 1 - j2.
Degree t_prime_rule(Degree j1, Degree j2, Exponent a, Degree t, bool corner_in_union);

/// t' for lexsegments L1, L2 of R_t with |L1| >= |L2| >= 1.
Degree t_prime(const MonomialSet& l1, const MonomialSet& l2, std::size_t n, Exponent a, Degree t);

/// b_{n,t} + c_{n,t} > (b+c)_{n,t+t'} for n >= 3 (n range is clipped to 3),
/// 1 <= c <= b inside the d range, b <= dim R_t. Tuples with
/// b + c > dim R_{t+t'} are skipped. t < a-1 is reported under its own claim.
SweepResult sweep_two_lex(const SweepConfig& cfg);

struct ThreeRingVerdict {
  GotzmannReport double_cap;     // A in S/(x1^4, x2^4)
  GotzmannReport single_cap;     // A + {x2^4} in S/(x1^4)
  GotzmannReport polynomial;     // A + {x1^4, x2^4} in S
  bool exhaustive_agrees = false;  // each verdict reproduced by a full census

  std::array<bool, 3> verdicts() const noexcept {
    return {double_cap.gotzmann, single_cap.gotzmann, polynomial.gotzmann};
  }
};

/// The three-ring counterexample showing the transfer does not extend to
/// every Macaulay-Lex quotient. Expected verdicts: (true, false, false).
ThreeRingVerdict remark_counterexample();

// Exhaustive / oracle claims backing the acceptance suite and `verify`.

/// growth_S against the direct shadow for 1 <= n <= n_max, t <= t_max, all d.
ClaimResult check_growth_oracle(std::size_t n_max, Degree t_max, unsigned threads = 1);

/// Slice-sum, difference form and direct shadow agree for t >= a, and the
/// boundary identity d_{n,a-1} = d^{<n-1>} - 1 holds.
ClaimResult check_quotient_triple(std::size_t n_max, Exponent a_max, Degree t_max, unsigned threads = 1);

/// No subset of ring_t (any size) grows less than the lexsegment of its size.
ClaimResult check_minimality(const RingSpec& ring, Degree t, unsigned threads = 1);

/// Transfer equivalence for every subset of R_t (all sizes). At t = a-1 the
/// empty set is counted as skipped.
ClaimResult check_transfer(std::size_t n, Exponent a, Degree t);

/// For every census witness in S_t, t <= t_max, every size and axis: the
/// slice max-formula and the component-theorem verdicts. Two claims.
SweepResult check_slice_theorems(std::size_t n, Degree t_max, unsigned threads = 1);

/// Canonical report serializations. With include_timing = false elapsed_ms
/// is written as null so reruns are byte-identical.
std::string report_json(const SweepResult& result, bool include_timing = true);
std::string report_text(const SweepResult& result, bool include_timing = true);
/// Same document as report_json.
std::string emit_report(const SweepResult& result, bool include_timing = true);
/// Inverse of report_json (checked_tuples are not serialized).
SweepResult parse_report_json(std::string_view json);

}  // namespace gotzmann

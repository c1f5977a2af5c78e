#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace gotzmann {

using Exponent = std::uint32_t;
using Degree = std::uint32_t;
using Count = std::uint64_t;

/// Exponent vector x1^e1 * ... * xn^en. Variables are 0-based in code
/// (index 0 is x1, the lex-largest variable).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// x_var^power in num_vars variables.
  static Monomial pure_power(std::size_t num_vars, std::size_t var, Exponent power);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Degree degree() const noexcept;

  Monomial times_var(std::size_t var) const;
  Monomial times(const Monomial& other) const;

  /// Drops the coordinate at axis.
  Monomial without_var(std::size_t axis) const;
  /// Inserts exponent k at position axis (inverse of without_var).
  Monomial with_var(std::size_t axis, Exponent k) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// Lex order with x1 > x2 > ... > xn. Throws UsageError on length mismatch.
std::strong_ordering compare_lex(const Monomial& lhs, const Monomial& rhs);

struct LexGreater {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    return compare_lex(lhs, rhs) > 0;
  }
};

/// Truncation bound for one variable: x^a = 0 when finite, no bound when infinite.
class Cap {
 public:
  constexpr Cap() noexcept = default;
  static constexpr Cap infinite() noexcept { return Cap{}; }
  static Cap finite(Exponent bound);

  constexpr bool is_finite() const noexcept { return bound_.has_value(); }
  Exponent value() const;
  /// True iff x^e is nonzero.
  constexpr bool admits(Exponent e) const noexcept { return !bound_ || e < *bound_; }

  bool operator==(const Cap&) const = default;
  /// Finite caps ordered by value; infinity above all of them.
  std::strong_ordering operator<=>(const Cap& other) const noexcept;

 private:
  std::optional<Exponent> bound_;
};

/// F[x1..xn] modulo the pure powers given by the caps.
class RingSpec {
 public:
  explicit RingSpec(std::vector<Cap> caps);

  /// S = F[x1..xn].
  static RingSpec polynomial(std::size_t num_vars);
  /// R = S / (x1^a).
  static RingSpec pure_power(std::size_t num_vars, Exponent a);
  /// The ring with no variables; only reachable by deflating a one-variable ring.
  static RingSpec zero_variables();

  std::size_t num_vars() const noexcept { return caps_.size(); }
  const std::vector<Cap>& caps() const noexcept { return caps_; }
  const Cap& cap(std::size_t var) const { return caps_.at(var); }

  bool is_polynomial() const noexcept;
  /// a when the caps are exactly (a, inf, ..., inf).
  std::optional<Exponent> single_cap() const noexcept;
  /// a_1 <= ... <= a_n with inf largest.
  bool caps_sorted() const noexcept;

  /// Monomial has the right length and is nonzero in this ring.
  bool contains(const Monomial& m) const noexcept;

  RingSpec without_var(std::size_t axis) const;

  bool operator==(const RingSpec&) const = default;

 private:
  struct ZeroTag {};
  explicit RingSpec(ZeroTag) {}

  std::vector<Cap> caps_;
};

/// Homogeneous, duplicate-free set of nonzero monomials of one degree in a
/// ring. Members are kept in descending lex order.
class MonomialSet {
 public:
  MonomialSet(RingSpec ring, Degree degree);
  /// Validates homogeneity, ring membership and uniqueness.
  MonomialSet(RingSpec ring, Degree degree, std::vector<Monomial> members);
  /// Degree inferred from the first member; members must be nonempty.
  static MonomialSet of(RingSpec ring, std::vector<Monomial> members);

  const RingSpec& ring() const noexcept { return ring_; }
  Degree degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Monomial> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const Monomial& m) const;

  /// Same members viewed in another ring (validated).
  MonomialSet in_ring(RingSpec ring) const;
  MonomialSet united(const MonomialSet& other) const;

  bool operator==(const MonomialSet&) const = default;

 private:
  struct Trusted {};
  MonomialSet(Trusted, RingSpec ring, Degree degree, std::vector<Monomial> sorted_members);

  friend MonomialSet make_trusted_set(RingSpec, Degree, std::vector<Monomial>);

  RingSpec ring_;
  Degree degree_;
  std::vector<Monomial> members_;
};

/// Slice sizes d_i = |M^i| along one axis.
struct SliceProfile {
  std::size_t axis = 0;
  std::vector<Count> counts;  // index i in [0, t]
  std::optional<Degree> min_index;

  /// d_i, zero outside [0, t] (so d_{-1} = d_{t+1} = 0).
  Count at(std::int64_t i) const noexcept;
  Count total() const noexcept;
  bool operator==(const SliceProfile&) const = default;
};

/// Every nonzero monomial of degree t, strictly descending in lex.
std::vector<Monomial> enumerate_degree(const RingSpec& ring, Degree t);
Count dim_degree(const RingSpec& ring, Degree t);

/// { x_v * m : v in vars, m in M } restricted to the ring.
MonomialSet shadow(const MonomialSet& set, std::span<const std::size_t> vars);
/// Shadow by all variables (S_1 * M, or R_1 * M in a quotient).
MonomialSet shadow(const MonomialSet& set);
/// Shadow by every variable except axis (S'_1 * M).
MonomialSet shadow_except(const MonomialSet& set, std::size_t axis);

/// Members whose exponent at axis is exactly k.
MonomialSet slice(const MonomialSet& set, std::size_t axis, Exponent k);
/// Strips x_axis^k from a slice; the result lives in one variable fewer.
MonomialSet deflate(const MonomialSet& set, std::size_t axis, Exponent k);
/// Multiplies back by x_axis^k into `target` (inverse of deflate).
MonomialSet inflate(const MonomialSet& set, std::size_t axis, Exponent k, const RingSpec& target);

SliceProfile slice_profile(const MonomialSet& set, std::size_t axis);

}  // namespace gotzmann

#include "gotzmann/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "gotzmann/errors.hpp"
#include "internal.hpp"

namespace gotzmann {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

Monomial Monomial::pure_power(std::size_t num_vars, std::size_t var, Exponent power) {
  if (var >= num_vars) throw UsageError("pure_power: variable index out of range");
  std::vector<Exponent> e(num_vars, 0);
  e[var] = power;
  return Monomial(std::move(e));
}

Degree Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), Degree{0});
}

Monomial Monomial::times_var(std::size_t var) const {
  if (var >= exps_.size()) throw UsageError("times_var: variable index out of range");
  Monomial out = *this;
  ++out.exps_[var];
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw UsageError("times: variable count mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::without_var(std::size_t axis) const {
  if (axis >= exps_.size()) throw UsageError("without_var: axis out of range");
  std::vector<Exponent> e;
  e.reserve(exps_.size() - 1);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (i != axis) e.push_back(exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::with_var(std::size_t axis, Exponent k) const {
  if (axis > exps_.size()) throw UsageError("with_var: axis out of range");
  std::vector<Exponent> e = exps_;
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(axis), k);
  return Monomial(std::move(e));
}

std::strong_ordering compare_lex(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.num_vars() != rhs.num_vars()) throw UsageError("compare_lex: variable count mismatch");
  const auto a = lhs.exponents();
  const auto b = rhs.exponents();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Cap / RingSpec

Cap Cap::finite(Exponent bound) {
  if (bound < 1) throw UsageError("finite cap must be >= 1");
  Cap c;
  c.bound_ = bound;
  return c;
}

Exponent Cap::value() const {
  if (!bound_) throw UsageError("infinite cap has no value");
  return *bound_;
}

std::strong_ordering Cap::operator<=>(const Cap& other) const noexcept {
  if (bound_ && other.bound_) return *bound_ <=> *other.bound_;
  if (!bound_ && !other.bound_) return std::strong_ordering::equal;
  return bound_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

RingSpec::RingSpec(std::vector<Cap> caps) : caps_(std::move(caps)) {
  if (caps_.empty()) throw UsageError("ring needs at least one variable");
}

RingSpec RingSpec::polynomial(std::size_t num_vars) {
  return RingSpec(std::vector<Cap>(num_vars, Cap::infinite()));
}

RingSpec RingSpec::pure_power(std::size_t num_vars, Exponent a) {
  std::vector<Cap> caps(num_vars, Cap::infinite());
  if (!caps.empty()) caps[0] = Cap::finite(a);
  return RingSpec(std::move(caps));
}

RingSpec RingSpec::zero_variables() { return RingSpec(ZeroTag{}); }

bool RingSpec::is_polynomial() const noexcept {
  return std::none_of(caps_.begin(), caps_.end(), [](const Cap& c) { return c.is_finite(); });
}

std::optional<Exponent> RingSpec::single_cap() const noexcept {
  if (caps_.empty() || !caps_[0].is_finite()) return std::nullopt;
  for (std::size_t i = 1; i < caps_.size(); ++i)
    if (caps_[i].is_finite()) return std::nullopt;
  return caps_[0].value();
}

bool RingSpec::caps_sorted() const noexcept { return std::is_sorted(caps_.begin(), caps_.end()); }

bool RingSpec::contains(const Monomial& m) const noexcept {
  if (m.num_vars() != caps_.size()) return false;
  for (std::size_t i = 0; i < caps_.size(); ++i)
    if (!caps_[i].admits(m[i])) return false;
  return true;
}

RingSpec RingSpec::without_var(std::size_t axis) const {
  if (axis >= caps_.size()) throw UsageError("without_var: axis out of range");
  if (caps_.size() == 1) return zero_variables();
  std::vector<Cap> caps = caps_;
  caps.erase(caps.begin() + static_cast<std::ptrdiff_t>(axis));
  return RingSpec(std::move(caps));
}

// ---------------------------------------------------------------------------
// MonomialSet

void sort_unique_desc(std::vector<Monomial>& members) {
  std::sort(members.begin(), members.end(), LexGreater{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

MonomialSet make_trusted_set(RingSpec ring, Degree degree, std::vector<Monomial> sorted_members) {
  return MonomialSet(MonomialSet::Trusted{}, std::move(ring), degree, std::move(sorted_members));
}

MonomialSet::MonomialSet(Trusted, RingSpec ring, Degree degree, std::vector<Monomial> sorted_members)
    : ring_(std::move(ring)), degree_(degree), members_(std::move(sorted_members)) {}

MonomialSet::MonomialSet(RingSpec ring, Degree degree) : ring_(std::move(ring)), degree_(degree) {}

MonomialSet::MonomialSet(RingSpec ring, Degree degree, std::vector<Monomial> members)
    : ring_(std::move(ring)), degree_(degree), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.num_vars() != ring_.num_vars())
      throw UsageError("monomial has " + std::to_string(m.num_vars()) + " variables, ring has " +
                       std::to_string(ring_.num_vars()));
    if (m.degree() != degree_)
      throw UsageError("inhomogeneous set: expected degree " + std::to_string(degree_) + ", got " +
                       std::to_string(m.degree()));
    if (!ring_.contains(m)) throw UsageError("monomial is zero in the ring");
  }
  const auto before = members_.size();
  sort_unique_desc(members_);
  if (members_.size() != before) throw UsageError("duplicate monomial in set");
}

MonomialSet MonomialSet::of(RingSpec ring, std::vector<Monomial> members) {
  if (members.empty()) throw UsageError("cannot infer the degree of an empty set");
  const Degree t = members.front().degree();
  return MonomialSet(std::move(ring), t, std::move(members));
}

bool MonomialSet::contains(const Monomial& m) const {
  return std::binary_search(members_.begin(), members_.end(), m, LexGreater{});
}

MonomialSet MonomialSet::in_ring(RingSpec ring) const {
  return MonomialSet(std::move(ring), degree_, members_);
}

MonomialSet MonomialSet::united(const MonomialSet& other) const {
  if (!(ring_ == other.ring_) || degree_ != other.degree_)
    throw UsageError("united: sets live in different strata");
  std::vector<Monomial> all;
  all.reserve(members_.size() + other.members_.size());
  std::merge(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
             std::back_inserter(all), LexGreater{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return make_trusted_set(ring_, degree_, std::move(all));
}

// ---------------------------------------------------------------------------
// SliceProfile

Count SliceProfile::at(std::int64_t i) const noexcept {
  if (i < 0 || i >= static_cast<std::int64_t>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i)];
}

Count SliceProfile::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), Count{0});
}

// ---------------------------------------------------------------------------
// Enumeration and counting

namespace {

void enumerate_rec(const RingSpec& ring, std::size_t var, Degree remaining, std::vector<Exponent>& cur,
                   std::vector<Monomial>& out) {
  const std::size_t n = ring.num_vars();
  if (var + 1 == n) {
    if (ring.cap(var).admits(remaining)) {
      cur[var] = remaining;
      out.emplace_back(cur);
    }
    return;
  }
  Exponent hi = remaining;
  if (ring.cap(var).is_finite()) hi = std::min<Exponent>(hi, ring.cap(var).value() - 1);
  for (Exponent e = hi + 1; e-- > 0;) {
    cur[var] = e;
    enumerate_rec(ring, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_degree(const RingSpec& ring, Degree t) {
  std::vector<Monomial> out;
  if (ring.num_vars() == 0) {
    if (t == 0) out.emplace_back();
    return out;
  }
  std::vector<Exponent> cur(ring.num_vars(), 0);
  enumerate_rec(ring, 0, t, cur, out);
  return out;
}

Count dim_degree(const RingSpec& ring, Degree t) {
  // Coefficient of z^t in prod_i (1 + z + ... + z^{cap_i - 1}).
  std::vector<Count> ways(t + 1, 0);
  ways[0] = 1;
  for (const Cap& cap : ring.caps()) {
    std::vector<Count> next(t + 1, 0);
    const Degree limit = cap.is_finite() ? std::min<Degree>(cap.value() - 1, t) : t;
    // Sliding-window prefix sum over the admissible exponents.
    Count window = 0;
    for (Degree k = 0; k <= t; ++k) {
      window += ways[k];
      if (k > limit) window -= ways[k - limit - 1];
      next[k] = window;
    }
    ways = std::move(next);
  }
  return ways[t];
}

// ---------------------------------------------------------------------------
// Shadow, slicing

MonomialSet shadow(const MonomialSet& set, std::span<const std::size_t> vars) {
  const RingSpec& ring = set.ring();
  for (std::size_t v : vars)
    if (v >= ring.num_vars()) throw UsageError("shadow: variable index out of range");
  std::vector<Monomial> out;
  out.reserve(set.size() * vars.size());
  for (const Monomial& m : set) {
    for (std::size_t v : vars) {
      if (!ring.cap(v).admits(m[v] + 1)) continue;
      out.push_back(m.times_var(v));
    }
  }
  sort_unique_desc(out);
  return make_trusted_set(ring, set.degree() + 1, std::move(out));
}

MonomialSet shadow(const MonomialSet& set) {
  std::vector<std::size_t> vars(set.ring().num_vars());
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return shadow(set, vars);
}

MonomialSet shadow_except(const MonomialSet& set, std::size_t axis) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < set.ring().num_vars(); ++v)
    if (v != axis) vars.push_back(v);
  return shadow(set, vars);
}

MonomialSet slice(const MonomialSet& set, std::size_t axis, Exponent k) {
  if (axis >= set.ring().num_vars()) throw UsageError("slice: axis out of range");
  std::vector<Monomial> out;
  for (const Monomial& m : set)
    if (m[axis] == k) out.push_back(m);
  return make_trusted_set(set.ring(), set.degree(), std::move(out));
}

MonomialSet deflate(const MonomialSet& set, std::size_t axis, Exponent k) {
  if (axis >= set.ring().num_vars()) throw UsageError("deflate: axis out of range");
  if (k > set.degree()) throw UsageError("deflate: multiplicity exceeds degree");
  std::vector<Monomial> out;
  out.reserve(set.size());
  for (const Monomial& m : set) {
    if (m[axis] != k) throw UsageError("deflate: member does not have the requested multiplicity");
    out.push_back(m.without_var(axis));
  }
  // Removing a fixed coordinate preserves relative lex order.
  return make_trusted_set(set.ring().without_var(axis), set.degree() - k, std::move(out));
}

MonomialSet inflate(const MonomialSet& set, std::size_t axis, Exponent k, const RingSpec& target) {
  if (target.num_vars() != set.ring().num_vars() + 1) throw UsageError("inflate: target ring size mismatch");
  std::vector<Monomial> out;
  out.reserve(set.size());
  for (const Monomial& m : set) out.push_back(m.with_var(axis, k));
  return MonomialSet(target, set.degree() + k, std::move(out));
}

SliceProfile slice_profile(const MonomialSet& set, std::size_t axis) {
  if (axis >= set.ring().num_vars()) throw UsageError("slice_profile: axis out of range");
  SliceProfile p;
  p.axis = axis;
  p.counts.assign(set.degree() + 1, 0);
  for (const Monomial& m : set) ++p.counts[m[axis]];
  for (Degree i = 0; i <= set.degree(); ++i) {
    if (p.counts[i] > 0) {
      p.min_index = i;
      break;
    }
  }
  return p;
}

}  // namespace gotzmann

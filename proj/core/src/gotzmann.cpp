#include "gotzmann/gotzmann.hpp"

#include <algorithm>
#include <string>

#include "gotzmann/errors.hpp"
#include "gotzmann/growth.hpp"
#include "internal.hpp"

namespace gotzmann {

const char* to_string(ComponentBranch branch) noexcept {
  switch (branch) {
    case ComponentBranch::GotzmannSlice:
      return "gotzmann-slice";
    case ComponentBranch::SizeBound:
      return "size-bound";
    case ComponentBranch::Unclaimed:
      return "unclaimed";
  }
  return "?";
}

const char* to_string(TransferRegime regime) noexcept {
  return regime == TransferRegime::Ghost ? "ghost" : "boundary";
}

bool ComponentCheck::all_hold() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict; });
}

bool SliceGrowthCheck::all_hold() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.holds(); });
}

namespace {

Count actual_growth(const MonomialSet& set) { return shadow(set).size(); }

void require_polynomial(const MonomialSet& set, const char* what) {
  if (!set.ring().is_polynomial()) throw UsageError(std::string(what) + ": set must live in a polynomial ring");
}

void require_gotzmann(const MonomialSet& set, const char* what) {
  require_polynomial(set, what);
  if (actual_growth(set) != lex_target(set.ring(), set.degree(), set.size()))
    throw UsageError(std::string(what) + ": only claimed for Gotzmann sets");
}

ComponentCheck component_entries(const MonomialSet& set, std::size_t axis) {
  const std::size_t rest = set.ring().num_vars() - 1;
  const Degree t = set.degree();
  const SliceProfile p = slice_profile(set, axis);
  ComponentCheck out;
  out.axis = axis;
  for (Degree i = 0; i <= t + 1; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    const Count di = p.at(ii);
    const Count prev = p.at(ii - 1);
    ComponentEntry e;
    e.index = i;
    if (lex_growth(di, rest) >= prev) {
      e.branch = ComponentBranch::GotzmannSlice;
      if (i <= t) {
        const MonomialSet part = deflate(slice(set, axis, i), axis, i);
        e.verdict = shadow(part).size() == lex_target(part.ring(), part.degree(), part.size());
      } else {
        e.verdict = true;  // empty slice beyond the top degree
      }
    } else if (i >= 1 && i <= t) {
      e.branch = ComponentBranch::SizeBound;
      const Count next = p.at(ii + 1);
      e.verdict = lex_growth(di + 1, rest) + 1 > prev || di + 1 > lex_growth(next, rest);
    } else {
      e.branch = ComponentBranch::Unclaimed;
      e.verdict = true;
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace

GotzmannReport is_gotzmann(const MonomialSet& set) {
  const RingSpec& ring = set.ring();
  GotzmannReport r{ring, set.degree(), set.size(), 0, 0, false, {}, {}};
  r.target = lex_target(ring, set.degree(), set.size());
  r.actual = actual_growth(set);
  r.gotzmann = r.actual == r.target;
  for (std::size_t v = 0; v < ring.num_vars(); ++v) r.profiles.push_back(slice_profile(set, v));
  if (r.gotzmann && ring.is_polynomial() && ring.num_vars() > 0) {
    for (std::size_t v = 0; v < ring.num_vars(); ++v) r.components.push_back(component_entries(set, v));
  }
  return r;
}

GotzmannReport is_gotzmann(const RingSpec& ring, const MonomialSet& set) {
  if (ring == set.ring()) return is_gotzmann(set);
  return is_gotzmann(set.in_ring(ring));
}

TransferVerdict verify_transfer(const MonomialSet& set, std::size_t n, Exponent a, Degree t) {
  if (Count{t} + 1 < a)
    throw OutOfScopeError("transfer is only claimed for t >= a-1 (t = " + std::to_string(t) +
                          ", a = " + std::to_string(a) + ")");
  if (set.degree() != t) throw UsageError("verify_transfer: set degree differs from t");
  const RingSpec quotient = RingSpec::pure_power(n, a);
  const RingSpec poly = RingSpec::polynomial(n);
  const MonomialSet in_r = set.ring() == quotient ? set : set.in_ring(quotient);

  TransferVerdict v;
  v.gotzmann_in_quotient = actual_growth(in_r) == growth_R(in_r.size(), n, a, t);
  if (t >= a) {
    v.regime = TransferRegime::Ghost;
    const MonomialSet joined = b_set(n, a, t).united(in_r.in_ring(poly));
    v.s_side = actual_growth(joined) == growth_S(joined.size(), n, t);
  } else {
    v.regime = TransferRegime::Boundary;
    const MonomialSet in_s = in_r.in_ring(poly);
    const bool gotz_s = actual_growth(in_s) == growth_S(in_s.size(), n, t);
    v.s_side = gotz_s && in_s.contains(Monomial::pure_power(n, 0, a - 1));
  }
  return v;
}

SliceGrowthCheck slice_growth_compare(const MonomialSet& set, std::size_t axis) {
  require_polynomial(set, "slice_growth_compare");
  if (axis >= set.ring().num_vars()) throw UsageError("slice_growth_compare: axis out of range");
  const std::size_t rest = set.ring().num_vars() - 1;
  const Degree t = set.degree();
  const SliceProfile p = slice_profile(set, axis);
  const SliceProfile sp = slice_profile(shadow(set), axis);
  SliceGrowthCheck out;
  out.axis = axis;
  for (Degree i = 0; i <= t + 1; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    out.entries.push_back({i, sp.at(ii), std::max(lex_growth(p.at(ii), rest), p.at(ii - 1))});
  }
  return out;
}

SliceGrowthCheck slice_growth_check(const MonomialSet& set, std::size_t axis) {
  require_gotzmann(set, "slice_growth_check");
  return slice_growth_compare(set, axis);
}

MonomialSet slice_lex_compress(const MonomialSet& set, std::size_t axis) {
  require_polynomial(set, "slice_lex_compress");
  if (axis >= set.ring().num_vars()) throw UsageError("slice_lex_compress: axis out of range");
  const Degree t = set.degree();
  const RingSpec rest = set.ring().without_var(axis);
  const SliceProfile p = slice_profile(set, axis);
  std::vector<Monomial> out;
  out.reserve(set.size());
  for (Degree i = 0; i <= t; ++i) {
    if (p.counts[i] == 0) continue;
    const MonomialSet part = inflate(lex_segment(rest, t - i, p.counts[i]), axis, i, set.ring());
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_unique_desc(out);
  return make_trusted_set(set.ring(), t, std::move(out));
}

ComponentCheck component_theorem_check(const MonomialSet& set, std::size_t axis) {
  require_gotzmann(set, "component_theorem_check");
  if (axis >= set.ring().num_vars()) throw UsageError("component_theorem_check: axis out of range");
  return component_entries(set, axis);
}

}  // namespace gotzmann

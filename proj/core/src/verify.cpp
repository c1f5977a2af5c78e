#include "gotzmann/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "gotzmann/census.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/growth_table.hpp"
#include "gotzmann/text_format.hpp"
#include "internal.hpp"
#include "parallel.hpp"

namespace gotzmann {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// One evaluated tuple, routed to a claim by index.
struct Outcome {
  std::size_t claim = 0;
  std::string tuple;
  bool skipped = false;
  std::optional<std::string> failure;
  std::optional<StabilizationWitness> witness;
};

/// Evaluates groups in parallel and folds the outcomes into claims in group
/// order, so the result does not depend on the thread count.
template <class Group, class Eval>
SweepResult run_groups(const std::vector<std::string>& claim_ids, const std::vector<Group>& groups, unsigned threads,
                       bool record, Eval&& eval) {
  const auto start = Clock::now();
  std::vector<std::vector<Outcome>> per_group(groups.size());
  detail::parallel_for(groups.size(), threads, [&](std::size_t i) { per_group[i] = eval(groups[i]); });

  SweepResult result;
  for (const auto& id : claim_ids) result.claims.push_back(ClaimResult{id});
  for (auto& outcomes : per_group) {
    for (auto& o : outcomes) {
      ClaimResult& c = result.claims.at(o.claim);
      if (o.skipped) {
        ++c.tuples_skipped;
        continue;
      }
      ++c.tuples_checked;
      if (record) c.checked_tuples.push_back(o.tuple);
      if (o.failure) c.failures.push_back({o.tuple, *o.failure});
      if (o.witness) c.stabilization_witnesses.push_back(*o.witness);
    }
  }
  const double elapsed = ms_since(start);
  for (auto& c : result.claims) c.elapsed_ms = elapsed;
  return result;
}

std::string describe(Count d, std::size_t n, Exponent a, Degree t) {
  return "d=" + std::to_string(d) + " n=" + std::to_string(n) + " a=" + std::to_string(a) + " t=" +
         std::to_string(t);
}

Count quotient_dim(std::size_t n, Exponent a, Degree t) { return dim_degree(RingSpec::pure_power(n, a), t); }

template <class T>
std::vector<T> range_values(const IntRange& r) {
  std::vector<T> out;
  for (auto v = r.lo; v <= r.hi; ++v) out.push_back(static_cast<T>(v));
  return out;
}

struct Triple {
  std::size_t n;
  Exponent a;
  Degree t;
};

}  // namespace

void SweepConfig::validate() const {
  for (const IntRange* r : {&n, &a, &t, &d})
    if (r->empty()) throw UsageError("sweep range is empty");
  if (n.lo < 1) throw UsageError("sweep: n must be >= 1");
  if (a.lo < 1) throw UsageError("sweep: a must be >= 1");
  if (t.lo < 0) throw UsageError("sweep: t must be >= 0");
  if (d.lo < 1) throw UsageError("sweep: d must be >= 1");
}

Count SweepResult::total_checked() const noexcept {
  Count s = 0;
  for (const auto& c : claims) s += c.tuples_checked;
  return s;
}

Count SweepResult::total_skipped() const noexcept {
  Count s = 0;
  for (const auto& c : claims) s += c.tuples_skipped;
  return s;
}

Count SweepResult::total_failures() const noexcept {
  Count s = 0;
  for (const auto& c : claims) s += c.failures.size();
  return s;
}

void SweepResult::append(SweepResult other) {
  for (auto& c : other.claims) claims.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// Monotonicity and stabilization

SweepResult sweep_monotonicity(const SweepConfig& cfg) {
  cfg.validate();
  GrowthTable table;
  std::vector<std::string> ids;
  std::vector<std::size_t> slot(3, 0);
  if (cfg.check_n_monotone) slot[0] = ids.size(), ids.push_back("growth-increasing-in-n");
  if (cfg.check_t_antitone) slot[1] = ids.size(), ids.push_back("growth-nonincreasing-in-t");
  if (cfg.check_stabilization) slot[2] = ids.size(), ids.push_back("growth-stabilization");

  std::vector<Triple> groups;
  for (auto n : range_values<std::size_t>(cfg.n))
    for (auto a : range_values<Exponent>(cfg.a))
      for (auto t : range_values<Degree>(cfg.t)) groups.push_back({n, a, t});

  auto eval = [&](const Triple& g) {
    std::vector<Outcome> out;
    const Count dim_t = quotient_dim(g.n, g.a, g.t);
    const Count dim_next = quotient_dim(g.n, g.a, g.t + 1);
    for (auto d : range_values<Count>(cfg.d)) {
      const std::string tuple = describe(d, g.n, g.a, g.t);
      if (cfg.check_n_monotone) {
        Outcome o{slot[0], tuple};
        if (d > dim_t) {
          o.skipped = true;
        } else {
          const Count lo = table.growth_R(d, g.n, g.a, g.t);
          const Count hi = table.growth_R(d, g.n + 1, g.a, g.t);
          if (!(hi > lo))
            o.failure = "d_{n+1,t} = " + std::to_string(hi) + " not > d_{n,t} = " + std::to_string(lo);
        }
        out.push_back(std::move(o));
      }
      if (cfg.check_t_antitone) {
        Outcome o{slot[1], tuple};
        if (d > dim_t || d > dim_next) {
          o.skipped = true;
        } else {
          const Count here = table.growth_R(d, g.n, g.a, g.t);
          const Count next = table.growth_R(d, g.n, g.a, g.t + 1);
          if (next > here)
            o.failure = "d_{n,t+1} = " + std::to_string(next) + " > d_{n,t} = " + std::to_string(here);
        }
        out.push_back(std::move(o));
      }
    }
    return out;
  };
  SweepResult result = run_groups(ids, groups, cfg.threads, cfg.record_tuples, eval);

  if (cfg.check_stabilization) {
    // Separate pass over (n, a, d) with n >= 3; merged into the same claim slot.
    struct Stab {
      std::size_t n;
      Exponent a;
      Count d;
    };
    std::vector<Stab> stab;
    for (auto n : range_values<std::size_t>(cfg.n)) {
      if (n < 3) continue;
      for (auto a : range_values<Exponent>(cfg.a))
        for (auto d : range_values<Count>(cfg.d)) stab.push_back({n, a, d});
    }
    auto eval_stab = [&](const Stab& s) {
      Outcome o{0, "d=" + std::to_string(s.d) + " n=" + std::to_string(s.n) + " a=" + std::to_string(s.a)};
      const Count limit_value = lex_growth(s.d, s.n - 1);
      std::optional<Degree> found;
      for (Degree t = 0; t <= cfg.stabilization_limit; ++t) {
        if (s.d > quotient_dim(s.n, s.a, t)) continue;
        if (table.growth_R(s.d, s.n, s.a, t) == limit_value) {
          found = t;
          break;
        }
      }
      if (!found) {
        o.failure = "no stabilization up to t = " + std::to_string(cfg.stabilization_limit);
        return std::vector<Outcome>{o};
      }
      const Degree t_star = *found;
      for (Degree t = t_star; t <= t_star + cfg.stabilization_window; ++t) {
        if (s.d > quotient_dim(s.n, s.a, t) || table.growth_R(s.d, s.n, s.a, t) != limit_value) {
          o.failure = "value leaves d^{<n-2>} = " + std::to_string(limit_value) + " at t = " + std::to_string(t);
          return std::vector<Outcome>{o};
        }
      }
      if (growth_R_oracle(s.d, s.n, s.a, t_star) != limit_value) {
        o.failure = "stabilization witness t* = " + std::to_string(t_star) + " fails the shadow oracle";
        return std::vector<Outcome>{o};
      }
      o.witness = StabilizationWitness{s.d, s.n, s.a, t_star};
      return std::vector<Outcome>{o};
    };
    SweepResult part3 = run_groups({ids[slot[2]]}, stab, cfg.threads, cfg.record_tuples, eval_stab);
    result.claims[slot[2]] = std::move(part3.claims.front());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Two-lexsegment subadditivity

Degree t_prime_rule(Degree j1, Degree j2, Exponent a, Degree t, bool corner_in_union) {
  if (j1 > t || j2 > t) throw UsageError("t_prime_rule: slice index exceeds the degree");
  if (j1 == j2 && Count{j1} + 1 != a && !corner_in_union) return t - j2;
  return t + 1 - j2;
}

Degree t_prime(const MonomialSet& l1, const MonomialSet& l2, std::size_t n, Exponent a, Degree t) {
  const RingSpec ring = RingSpec::pure_power(n, a);
  if (l1.empty() || l2.empty()) throw UsageError("t_prime: lexsegments must be nonempty");
  if (l1.size() < l2.size()) throw UsageError("t_prime: requires |L1| >= |L2|");
  if (l1.degree() != t || l2.degree() != t) throw UsageError("t_prime: sets must lie in R_t");
  const MonomialSet s1 = l1.ring() == ring ? l1 : l1.in_ring(ring);
  const MonomialSet s2 = l2.ring() == ring ? l2 : l2.in_ring(ring);
  if (!is_lexsegment(s1) || !is_lexsegment(s2)) throw UsageError("t_prime: inputs must be lexsegments");
  const Degree j1 = *slice_profile(s1, 0).min_index;
  const Degree j2 = *slice_profile(s2, 0).min_index;
  std::vector<Exponent> corner(n, 0);
  corner[0] = j1;
  corner[n - 1] += t - j1;
  const Monomial c(std::move(corner));
  return t_prime_rule(j1, j2, a, t, s1.contains(c) || s2.contains(c));
}

SweepResult sweep_two_lex(const SweepConfig& cfg) {
  cfg.validate();
  GrowthTable table;
  const std::vector<std::string> ids = {"two-lex-strict-subadditivity",
                                        "two-lex-strict-subadditivity-external-regime"};
  std::vector<Triple> groups;
  for (auto n : range_values<std::size_t>(cfg.n)) {
    if (n < 3) continue;
    for (auto a : range_values<Exponent>(cfg.a))
      for (auto t : range_values<Degree>(cfg.t)) groups.push_back({n, a, t});
  }

  auto eval = [&](const Triple& g) {
    std::vector<Outcome> out;
    const RingSpec ring = RingSpec::pure_power(g.n, g.a);
    const auto stratum = enumerate_degree(ring, g.t);
    const std::size_t claim = Count{g.t} + 1 < g.a ? 1 : 0;
    const Count b_hi = std::min<Count>(stratum.size(), static_cast<Count>(cfg.d.hi));
    for (Count b = static_cast<Count>(cfg.d.lo); b <= b_hi; ++b) {
      // Lexsegments are prefixes of the stratum; I(L) is the x1-exponent of the last member.
      const Degree j1 = stratum[b - 1][0];
      std::vector<Exponent> corner(g.n, 0);
      corner[0] = j1;
      corner[g.n - 1] += g.t - j1;
      const auto corner_pos =
          std::lower_bound(stratum.begin(), stratum.end(), Monomial(corner), LexGreater{}) - stratum.begin();
      // L2 is a prefix of L1, so the union is L1.
      const bool corner_in_union = static_cast<Count>(corner_pos) < b;
      for (Count c = static_cast<Count>(cfg.d.lo); c <= b; ++c) {
        const Degree j2 = stratum[c - 1][0];
        const Degree shift = t_prime_rule(j1, j2, g.a, g.t, corner_in_union);
        Outcome o{claim, "b=" + std::to_string(b) + " c=" + std::to_string(c) + " n=" + std::to_string(g.n) +
                             " a=" + std::to_string(g.a) + " t=" + std::to_string(g.t) + " t'=" +
                             std::to_string(shift)};
        if (b + c > quotient_dim(g.n, g.a, g.t + shift)) {
          o.skipped = true;
        } else {
          const Count lhs = table.growth_R(b, g.n, g.a, g.t) + table.growth_R(c, g.n, g.a, g.t);
          const Count rhs = table.growth_R(b + c, g.n, g.a, g.t + shift);
          if (!(lhs > rhs))
            o.failure = "b_{n,t} + c_{n,t} = " + std::to_string(lhs) + " not > (b+c)_{n,t+t'} = " + std::to_string(rhs);
        }
        out.push_back(std::move(o));
      }
    }
    return out;
  };
  return run_groups(ids, groups, cfg.threads, cfg.record_tuples, eval);
}

// ---------------------------------------------------------------------------
// Counterexample

ThreeRingVerdict remark_counterexample() {
  const std::vector<Monomial> a_members = {{3, 1, 0}, {3, 0, 1}, {1, 3, 0}, {0, 3, 1}};
  const RingSpec double_cap({Cap::finite(4), Cap::finite(4), Cap::infinite()});
  const RingSpec single_cap = RingSpec::pure_power(3, 4);
  const RingSpec poly = RingSpec::polynomial(3);

  auto with = [&](std::vector<Monomial> extra) {
    auto m = a_members;
    m.insert(m.end(), extra.begin(), extra.end());
    return m;
  };
  const MonomialSet s1(double_cap, 4, a_members);
  const MonomialSet s2(single_cap, 4, with({{0, 4, 0}}));
  const MonomialSet s3(poly, 4, with({{4, 0, 0}, {0, 4, 0}}));

  ThreeRingVerdict v{is_gotzmann(s1), is_gotzmann(s2), is_gotzmann(s3), false};

  bool agrees = true;
  for (const auto* pair : {&s1, &s2, &s3}) {
    const MonomialSet& s = *pair;
    CensusOptions opts;
    opts.store_witnesses = true;
    const CensusRecord rec = enumerate_gotzmann(s.ring(), s.degree(), s.size(), opts);
    const bool found = std::find(rec.witnesses.begin(), rec.witnesses.end(), s) != rec.witnesses.end();
    const bool verdict = is_gotzmann(s).gotzmann;
    agrees = agrees && rec.below_target == 0 && found == verdict;
  }
  v.exhaustive_agrees = agrees;
  return v;
}

// ---------------------------------------------------------------------------
// Exhaustive / oracle claims

ClaimResult check_growth_oracle(std::size_t n_max, Degree t_max, unsigned threads) {
  struct G {
    std::size_t n;
    Degree t;
  };
  std::vector<G> groups;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (Degree t = 0; t <= t_max; ++t) groups.push_back({n, t});
  auto eval = [](const G& g) {
    std::vector<Outcome> out;
    const RingSpec s = RingSpec::polynomial(g.n);
    const Count dim = dim_degree(s, g.t);
    for (Count d = 1; d <= dim; ++d) {
      Outcome o{0, "d=" + std::to_string(d) + " n=" + std::to_string(g.n) + " t=" + std::to_string(g.t)};
      const Count fast = growth_S(d, g.n, g.t);
      const Count oracle = growth_S_oracle(d, g.n, g.t);
      if (fast != oracle) o.failure = "closed form " + std::to_string(fast) + " vs shadow " + std::to_string(oracle);
      out.push_back(std::move(o));
    }
    return out;
  };
  return std::move(run_groups({"growth-oracle"}, groups, threads, false, eval).claims.front());
}

ClaimResult check_quotient_triple(std::size_t n_max, Exponent a_max, Degree t_max, unsigned threads) {
  std::vector<Triple> groups;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (Exponent a = 1; a <= a_max; ++a)
      for (Degree t = a - 1; t <= t_max; ++t) groups.push_back({n, a, t});
  auto eval = [](const Triple& g) {
    std::vector<Outcome> out;
    const Count dim = quotient_dim(g.n, g.a, g.t);
    for (Count d = 1; d <= dim; ++d) {
      Outcome o{0, describe(d, g.n, g.a, g.t)};
      const Count oracle = growth_R_oracle(d, g.n, g.a, g.t);
      const Count slice_sum = growth_R_slice_sum(d, g.n, g.a, g.t);
      const Count fast = growth_R(d, g.n, g.a, g.t);
      std::string detail = "oracle " + std::to_string(oracle) + ", slice-sum " + std::to_string(slice_sum) +
                           ", growth_R " + std::to_string(fast);
      bool ok = oracle == slice_sum && oracle == fast;
      if (g.t >= g.a) {
        const Count diff = growth_R_difference(d, g.n, g.a, g.t);
        detail += ", difference " + std::to_string(diff);
        ok = ok && diff == oracle;
      } else {
        const Count boundary = lex_growth(d, g.n) - 1;
        detail += ", d^{<n-1>}-1 " + std::to_string(boundary);
        ok = ok && boundary == oracle;
      }
      if (!ok) o.failure = detail;
      out.push_back(std::move(o));
    }
    return out;
  };
  return std::move(run_groups({"quotient-triple"}, groups, threads, false, eval).claims.front());
}

ClaimResult check_minimality(const RingSpec& ring, Degree t, unsigned threads) {
  const auto start = Clock::now();
  ClaimResult c{"minimality " + format_ring(ring) + " t=" + std::to_string(t)};
  const Count dim = dim_degree(ring, t);
  CensusOptions opts;
  opts.threads = threads;
  for (Count d = 0; d <= dim; ++d) {
    const CensusRecord rec = enumerate_gotzmann(ring, t, d, opts);
    c.tuples_checked += rec.subsets_total;
    if (rec.below_target != 0)
      c.failures.push_back({"d=" + std::to_string(d), std::to_string(rec.below_target) +
                                                          " subsets grow less than the lexsegment (" +
                                                          std::to_string(rec.target) + ")"});
    else if (rec.gotzmann_count == 0)
      c.failures.push_back({"d=" + std::to_string(d), "no subset reaches the lex target " + std::to_string(rec.target)});
  }
  c.elapsed_ms = ms_since(start);
  return c;
}

ClaimResult check_transfer(std::size_t n, Exponent a, Degree t) {
  const auto start = Clock::now();
  ClaimResult c{"transfer n=" + std::to_string(n) + " a=" + std::to_string(a) + " t=" + std::to_string(t)};
  const RingSpec ring = RingSpec::pure_power(n, a);
  const auto stratum = enumerate_degree(ring, t);
  if (stratum.size() > 24) throw BudgetExceeded(Count{1} << std::min<std::size_t>(stratum.size(), 63), Count{1} << 24);
  const std::uint64_t subsets = std::uint64_t{1} << stratum.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Monomial> members;
    for (std::size_t k = 0; k < stratum.size(); ++k)
      if (mask >> k & 1U) members.push_back(stratum[k]);
    // At t = a-1 the criterion presumes d >= 1: the empty set is Gotzmann in R
    // but cannot contain x1^{a-1}.
    if (members.empty() && Count{t} + 1 == a) {
      ++c.tuples_skipped;
      continue;
    }
    const MonomialSet m(ring, t, std::move(members));
    const TransferVerdict v = verify_transfer(m, n, a, t);
    ++c.tuples_checked;
    if (!v.equivalent())
      c.failures.push_back({format_set_line(m), std::string("quotient verdict ") + (v.gotzmann_in_quotient ? "true" : "false") +
                                                    ", S-side verdict " + (v.s_side ? "true" : "false")});
  }
  c.elapsed_ms = ms_since(start);
  return c;
}

SweepResult check_slice_theorems(std::size_t n, Degree t_max, unsigned threads) {
  struct G {
    Degree t;
    Count d;
  };
  const RingSpec s = RingSpec::polynomial(n);
  std::vector<G> groups;
  for (Degree t = 0; t <= t_max; ++t)
    for (Count d = 1; d <= dim_degree(s, t); ++d) groups.push_back({t, d});
  auto eval = [&](const G& g) {
    std::vector<Outcome> out;
    CensusOptions opts;
    opts.store_witnesses = true;
    const CensusRecord rec = enumerate_gotzmann(s, g.t, g.d, opts);
    for (const auto& w : rec.witnesses) {
      for (std::size_t axis = 0; axis < n; ++axis) {
        const std::string tuple = "{" + format_set_line(w) + "} axis=" + std::to_string(axis + 1);
        Outcome slice_o{0, tuple};
        const SliceGrowthCheck sc = slice_growth_check(w, axis);
        for (const auto& e : sc.entries)
          if (!e.holds() && !slice_o.failure)
            slice_o.failure = "i=" + std::to_string(e.index) + ": " + std::to_string(e.actual) +
                              " != " + std::to_string(e.expected);
        out.push_back(std::move(slice_o));

        Outcome comp_o{1, tuple};
        const ComponentCheck cc = component_theorem_check(w, axis);
        for (const auto& e : cc.entries)
          if (!e.verdict && !comp_o.failure)
            comp_o.failure = "i=" + std::to_string(e.index) + " branch " + to_string(e.branch) + " fails";
        out.push_back(std::move(comp_o));
      }
    }
    return out;
  };
  return run_groups({"slice-max-formula", "slice-components"}, groups, threads, false, eval);
}

// ---------------------------------------------------------------------------
// Reports

std::string report_json(const SweepResult& result, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json claims = ordered_json::array();
  for (const auto& c : result.claims) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : c.failures) failures.push_back({{"tuple", f.tuple}, {"detail", f.detail}});
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : c.stabilization_witnesses)
      witnesses.push_back({{"d", w.d}, {"n", w.n}, {"a", w.a}, {"t_star", w.t_star}});
    claims.push_back({{"claim_id", c.claim_id},
                      {"tuples_checked", c.tuples_checked},
                      {"tuples_skipped", c.tuples_skipped},
                      {"failures", failures},
                      {"stabilization_witnesses", witnesses},
                      {"elapsed_ms", include_timing ? ordered_json(c.elapsed_ms) : ordered_json(nullptr)}});
  }
  ordered_json j;
  j["claims"] = claims;
  j["totals"] = {{"tuples_checked", result.total_checked()},
                 {"tuples_skipped", result.total_skipped()},
                 {"failures", result.total_failures()}};
  return j.dump(2);
}

std::string report_text(const SweepResult& result, bool include_timing) {
  std::ostringstream os;
  for (const auto& c : result.claims) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.claim_id << ": checked=" << c.tuples_checked
       << " skipped=" << c.tuples_skipped << " failures=" << c.failures.size();
    if (!c.stabilization_witnesses.empty()) os << " stabilization_witnesses=" << c.stabilization_witnesses.size();
    if (include_timing) os << " elapsed_ms=" << static_cast<long long>(c.elapsed_ms);
    os << '\n';
    for (const auto& f : c.failures) os << "  counterexample: " << f.tuple << " -- " << f.detail << '\n';
  }
  os << "total: checked=" << result.total_checked() << " skipped=" << result.total_skipped()
     << " failures=" << result.total_failures() << '\n';
  return os.str();
}

SweepResult parse_report_json(std::string_view json) {
  SweepResult out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
  try {
    for (const auto& c : j.at("claims")) {
      ClaimResult r;
      r.claim_id = c.at("claim_id").get<std::string>();
      r.tuples_checked = c.at("tuples_checked").get<Count>();
      r.tuples_skipped = c.at("tuples_skipped").get<Count>();
      for (const auto& f : c.at("failures"))
        r.failures.push_back({f.at("tuple").get<std::string>(), f.at("detail").get<std::string>()});
      for (const auto& w : c.at("stabilization_witnesses"))
        r.stabilization_witnesses.push_back({w.at("d").get<Count>(), w.at("n").get<std::size_t>(),
                                             w.at("a").get<Exponent>(), w.at("t_star").get<Degree>()});
      const auto& el = c.at("elapsed_ms");
      r.elapsed_ms = el.is_null() ? 0.0 : el.get<double>();
      out.claims.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json does not match the schema: ") + e.what());
  }
  return out;
}

std::string emit_report(const SweepResult& result, bool include_timing) { return report_json(result, include_timing); }

}  // namespace gotzmann

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gotzmann/census.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/text_format.hpp"
#include "gotzmann/verify.hpp"

namespace gotzmann::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Common {
  std::string ring = "3:inf,inf,inf";
  std::string format = "text";
  unsigned threads = 1;
  Count budget = default_budget();
  std::uint64_t seed = 1;
  bool no_timing = false;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParseError("range must look like lo:hi, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

ordered_json members_json(const MonomialSet& set) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : set) arr.push_back(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
  return arr;
}

MonomialSet load_set(const RingSpec& ring, const std::optional<Degree>& t, const std::string& inline_set,
                     const std::string& input) {
  std::vector<Monomial> members;
  if (!input.empty())
    members = parse_set_file(read_file(input));
  else
    members = parse_inline_set(inline_set);
  if (t) return MonomialSet(ring, *t, std::move(members));
  if (members.empty()) throw UsageError("empty set needs an explicit --t");
  return MonomialSet::of(ring, std::move(members));
}

// --- subcommand handlers ---------------------------------------------------

int do_growth(const Common& c, Count d, std::optional<Degree> t, bool check_oracle, std::ostream& out) {
  const RingSpec ring = parse_ring(c.ring);
  const std::size_t n = ring.num_vars();
  Count value = 0;
  std::string formula;
  std::optional<Count> oracle;
  if (ring.is_polynomial()) {
    value = growth_S(d, n, t);
    formula = "binomial-rep";
    if (check_oracle) oracle = growth_S_oracle(d, n, t);
  } else {
    if (!t) throw UsageError("growth in a quotient depends on the degree; pass --t");
    value = lex_target(ring, *t, d);
    if (const auto a = ring.single_cap()) {
      formula = to_string(quotient_regime(*a, *t));
      if (check_oracle) oracle = growth_R_oracle(d, n, *a, *t);
    } else {
      formula = "lexsegment-shadow";
      if (check_oracle) oracle = shadow(lex_segment(ring, *t, d)).size();
    }
  }
  switch (c.fmt()) {
    case Format::Json: {
      ordered_json j{{"ring", format_ring(ring)}, {"d", d}, {"t", t ? ordered_json(*t) : ordered_json(nullptr)},
                     {"value", value}, {"formula", formula}};
      if (oracle) j["oracle"] = *oracle;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "ring,t,d,value" << (oracle ? ",oracle" : "") << '\n';
      out << '"' << format_ring(ring) << "\"," << (t ? std::to_string(*t) : "") << ',' << d << ',' << value;
      if (oracle) out << ',' << *oracle;
      out << '\n';
      break;
    case Format::Text:
      out << value << '\n';
      if (oracle) out << "oracle " << *oracle << (*oracle == value ? " (agrees)" : " (DISAGREES)") << '\n';
      break;
  }
  return oracle && *oracle != value ? kVerificationFailed : kOk;
}

int do_lexseg(const Common& c, Degree t, Count d, std::ostream& out) {
  const RingSpec ring = parse_ring(c.ring);
  const MonomialSet seg = lex_segment(ring, t, d);
  if (c.fmt() == Format::Json) {
    out << ordered_json{{"ring", format_ring(ring)}, {"t", t}, {"d", d}, {"members", members_json(seg)}}.dump(2)
        << '\n';
  } else {
    out << format_set_file(seg);
  }
  return kOk;
}

ordered_json report_json(const GotzmannReport& r) {
  ordered_json profiles = ordered_json::array();
  for (const auto& p : r.profiles) {
    profiles.push_back({{"axis", p.axis + 1},
                        {"counts", p.counts},
                        {"min_index", p.min_index ? ordered_json(*p.min_index) : ordered_json(nullptr)}});
  }
  ordered_json comps = ordered_json::array();
  for (const auto& cc : r.components) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : cc.entries)
      entries.push_back({{"i", e.index}, {"branch", to_string(e.branch)}, {"verdict", e.verdict}});
    comps.push_back({{"axis", cc.axis + 1}, {"entries", entries}});
  }
  return {{"ring", format_ring(r.ring)}, {"t", r.degree},      {"d", r.size},
          {"actual", r.actual},          {"target", r.target}, {"gotzmann", r.gotzmann},
          {"slice_profiles", profiles},  {"components", comps}};
}

int do_check(const Common& c, std::optional<Degree> t, const std::string& inline_set, const std::string& input,
             bool verbose, std::ostream& out) {
  const RingSpec ring = parse_ring(c.ring);
  const MonomialSet set = load_set(ring, t, inline_set, input);
  const GotzmannReport r = is_gotzmann(set);
  if (c.fmt() == Format::Json) {
    out << report_json(r).dump(2) << '\n';
    return kOk;
  }
  out << (r.gotzmann ? "GOTZMANN" : "NOT GOTZMANN") << '\n';
  if (verbose) {
    out << "ring " << format_ring(r.ring) << " t=" << r.degree << " d=" << r.size << '\n';
    out << "growth " << r.actual << " lex target " << r.target << '\n';
    for (const auto& p : r.profiles) {
      out << "slices x" << p.axis + 1 << ":";
      for (auto v : p.counts) out << ' ' << v;
      out << '\n';
    }
  }
  return kOk;
}

int do_enumerate(const Common& c, Degree t, Count d, bool witnesses, bool prune, const std::string& out_path,
                 const std::string& summary_path, std::ostream& out) {
  const RingSpec ring = parse_ring(c.ring);
  CensusOptions opts;
  opts.store_witnesses = witnesses;
  opts.threads = c.threads;
  opts.budget = c.budget;
  opts.prune = prune;
  const CensusRecord rec = enumerate_gotzmann(ring, t, d, opts);
  const std::string lines = census_witness_lines(rec);
  const std::string summary = census_summary_json(rec, c.budget, !c.no_timing);
  if (!out_path.empty()) write_file(out_path, lines);
  if (!summary_path.empty()) write_file(summary_path, summary + "\n");

  switch (c.fmt()) {
    case Format::Json:
      out << summary << '\n';
      break;
    case Format::Csv:
      out << "ring,t,d,count,subsets,target,below_target\n"
          << '"' << format_ring(ring) << "\"," << t << ',' << d << ',' << rec.gotzmann_count << ','
          << rec.subsets_total << ',' << rec.target << ',' << rec.below_target << '\n';
      break;
    case Format::Text:
      if (out_path.empty()) out << lines;
      out << "# gotzmann=" << rec.gotzmann_count << " subsets=" << rec.subsets_total << " target=" << rec.target
          << " below_target=" << rec.below_target << '\n';
      break;
  }
  return rec.below_target == 0 ? kOk : kVerificationFailed;
}

struct VerifyArgs {
  std::string claim = "all";
  std::optional<std::size_t> n;
  std::optional<Exponent> a;
  std::optional<Degree> t;
  bool exhaustive = false;
  std::string n_range = "1:5", a_range = "1:4", t_range = "0:10", d_range = "1:60";
  Degree window = 5;
  std::string out_path;
};

void emit(const Common& c, const SweepResult& r, const VerifyArgs& v, std::ostream& out) {
  const std::string json = report_json(r, !c.no_timing);
  if (!v.out_path.empty()) write_file(v.out_path, json + "\n");
  if (c.fmt() == Format::Json) {
    out << json << '\n';
  } else if (c.fmt() == Format::Csv) {
    out << "claim_id,tuples_checked,tuples_skipped,failures\n";
    for (const auto& cl : r.claims)
      out << '"' << cl.claim_id << "\"," << cl.tuples_checked << ',' << cl.tuples_skipped << ','
          << cl.failures.size() << '\n';
  } else {
    out << report_text(r, !c.no_timing);
  }
}

int do_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  SweepConfig cfg;
  cfg.n = parse_range(v.n_range);
  cfg.a = parse_range(v.a_range);
  cfg.t = parse_range(v.t_range);
  cfg.d = parse_range(v.d_range);
  cfg.stabilization_window = v.window;
  cfg.threads = c.threads;

  if (v.claim == "transfer") {
    const std::size_t n = v.n.value_or(3);
    const Exponent a = v.a.value_or(2);
    const Degree t = v.t.value_or(a);
    if (Count{t} + 1 < a)
      throw OutOfScopeError("trivial regime t < a-1: growth in R equals growth in S, no transfer claim is made");
    const ClaimResult cr = check_transfer(n, a, t);
    SweepResult r;
    r.claims.push_back(cr);
    if (c.fmt() == Format::Text) {
      out << cr.tuples_checked - cr.failures.size() << "/" << cr.tuples_checked << " subsets consistent";
      if (cr.tuples_skipped > 0) out << " (" << cr.tuples_skipped << " skipped: empty set at t = a-1)";
      out << '\n';
      for (const auto& f : cr.failures) out << "  counterexample: " << f.tuple << " -- " << f.detail << '\n';
      if (!v.out_path.empty()) write_file(v.out_path, report_json(r, !c.no_timing) + "\n");
    } else {
      emit(c, r, v, out);
    }
    return r.passed() ? kOk : kVerificationFailed;
  }
  if (v.claim == "remark") {
    const ThreeRingVerdict rv = remark_counterexample();
    const auto verdicts = rv.verdicts();
    if (c.fmt() == Format::Json) {
      out << ordered_json{{"verdicts", verdicts}, {"exhaustive_agrees", rv.exhaustive_agrees}}.dump(2) << '\n';
    } else {
      const char* names[] = {"A in 3:4,4,inf", "A+x2^4 in 3:4,inf,inf", "A+x1^4+x2^4 in 3:inf,inf,inf"};
      for (int i = 0; i < 3; ++i) out << names[i] << ": " << (verdicts[i] ? "GOTZMANN" : "NOT GOTZMANN") << '\n';
      out << "exhaustive census " << (rv.exhaustive_agrees ? "agrees" : "DISAGREES") << '\n';
    }
    const bool ok = verdicts == std::array<bool, 3>{true, false, false} && rv.exhaustive_agrees;
    return ok ? kOk : kVerificationFailed;
  }

  SweepResult r;
  const bool all = v.claim == "all";
  bool matched = all;
  if (all || v.claim == "monotonicity") {
    matched = true;
    r.append(sweep_monotonicity(cfg));
  }
  if (all || v.claim == "two-lex") {
    matched = true;
    SweepConfig two = cfg;
    if (v.d_range == "1:60") two.d = {1, 1'000'000};
    r.append(sweep_two_lex(two));
  }
  if (v.claim == "growth-oracle") {
    matched = true;
    r.claims.push_back(check_growth_oracle(static_cast<std::size_t>(cfg.n.hi), static_cast<Degree>(cfg.t.hi), c.threads));
  }
  if (v.claim == "quotient-triple") {
    matched = true;
    r.claims.push_back(check_quotient_triple(static_cast<std::size_t>(cfg.n.hi), static_cast<Exponent>(cfg.a.hi),
                                             static_cast<Degree>(cfg.t.hi), c.threads));
  }
  if (v.claim == "minimality") {
    matched = true;
    const RingSpec ring = parse_ring(c.ring);
    r.claims.push_back(check_minimality(ring, v.t.value_or(2), c.threads));
  }
  if (v.claim == "slice") {
    matched = true;
    r.append(check_slice_theorems(v.n.value_or(3), v.t.value_or(3), c.threads));
  }
  if (!matched) throw UsageError("unknown claim '" + v.claim + "'");
  emit(c, r, v, out);
  return r.passed() ? kOk : kVerificationFailed;
}

struct OracleArgs {
  std::string check = "growth-s";
  std::optional<Count> d;
  std::optional<std::size_t> n;
  std::optional<Exponent> a;
  std::optional<Degree> t;
  std::string inline_set;
  std::string input;
  Count samples = 1000;
};

int do_oracle(const Common& c, const OracleArgs& o, std::ostream& out) {
  if (o.check == "growth-s") {
    if (!o.d || !o.n) throw UsageError("oracle growth-s needs --d and --n");
    const Count fast = growth_S(*o.d, *o.n, o.t);
    const Count slow = growth_S_oracle(*o.d, *o.n, o.t);
    out << "closed form " << fast << "\nshadow oracle " << slow << '\n' << (fast == slow ? "agree" : "DISAGREE") << '\n';
    return fast == slow ? kOk : kVerificationFailed;
  }
  if (o.check == "growth-r") {
    if (!o.d || !o.n || !o.a || !o.t) throw UsageError("oracle growth-r needs --d --n --a --t");
    const Count fast = growth_R(*o.d, *o.n, *o.a, *o.t);
    const Count slow = growth_R_oracle(*o.d, *o.n, *o.a, *o.t);
    bool ok = fast == slow;
    out << "growth_R " << fast << " (" << to_string(quotient_regime(*o.a, *o.t)) << ")\n";
    if (Count{*o.t} + 1 >= *o.a) {
      const Count ss = growth_R_slice_sum(*o.d, *o.n, *o.a, *o.t);
      out << "slice-sum " << ss << '\n';
      ok = ok && ss == slow;
    }
    if (*o.t >= *o.a) {
      const Count diff = growth_R_difference(*o.d, *o.n, *o.a, *o.t);
      out << "difference " << diff << '\n';
      ok = ok && diff == slow;
    }
    out << "shadow oracle " << slow << '\n' << (ok ? "agree" : "DISAGREE") << '\n';
    return ok ? kOk : kVerificationFailed;
  }
  if (o.check == "shadow") {
    const RingSpec ring = parse_ring(c.ring);
    const MonomialSet set = load_set(ring, o.t, o.inline_set, o.input);
    const MonomialSet sh = shadow(set);
    out << format_set_file(sh) << "# size " << sh.size() << '\n';
    return kOk;
  }
  if (o.check == "minimality") {
    const RingSpec ring = parse_ring(c.ring);
    SweepResult r;
    r.claims.push_back(check_minimality(ring, o.t.value_or(2), c.threads));
    out << report_text(r, !c.no_timing);
    return r.passed() ? kOk : kVerificationFailed;
  }
  if (o.check == "sample") {
    // Random subsets of ring_t against the lex target; reproducible by seed.
    const RingSpec ring = parse_ring(c.ring);
    const Degree t = o.t.value_or(3);
    const auto stratum = enumerate_degree(ring, t);
    std::mt19937_64 rng(c.seed);
    Count violations = 0;
    for (Count k = 0; k < o.samples; ++k) {
      std::vector<Monomial> members;
      for (const auto& m : stratum)
        if (rng() & 1U) members.push_back(m);
      const MonomialSet set(ring, t, std::move(members));
      if (shadow(set).size() < lex_target(ring, t, set.size())) {
        ++violations;
        out << "violation: " << format_set_line(set) << '\n';
      }
    }
    out << "sampled " << o.samples << " subsets of " << format_ring(ring) << " t=" << t << " seed=" << c.seed
        << ": " << violations << " below the lex target\n";
    return violations == 0 ? kOk : kVerificationFailed;
  }
  throw UsageError("unknown oracle check '" + o.check + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gotzmann sets and minimal Hilbert-function growth in S and S/(x1^a)", "gotzmann"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_ring) {
    if (with_ring) sub->add_option("--ring", common.ring, "ring as n:c1,...,cn with 'inf' for no cap");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", common.threads, "worker threads (output does not depend on it)");
    sub->add_option("--budget", common.budget, "maximum number of subsets for exhaustive searches");
    sub->add_option("--seed", common.seed, "seed for sampled runs");
    sub->add_flag("--no-timing", common.no_timing, "omit elapsed times so outputs are byte-identical across runs");
  };

  Count d = 0;
  std::optional<Degree> t;
  bool oracle_flag = false;
  auto* growth = app.add_subcommand("growth", "shadow size of the size-d lexsegment");
  add_common(growth, true);
  growth->add_option("--d", d, "set size")->required();
  growth->add_option("--t", t, "degree (required in quotients)");
  growth->add_flag("--oracle", oracle_flag, "also compute the direct-shadow oracle");

  Degree lex_t = 0;
  auto* lexseg = app.add_subcommand("lexseg", "print the size-d lexsegment of ring_t");
  add_common(lexseg, true);
  lexseg->add_option("--t", lex_t, "degree")->required();
  lexseg->add_option("--d", d, "set size")->required();

  std::string inline_set, input;
  bool verbose = false;
  auto* check = app.add_subcommand("check", "Gotzmann verdict for one set");
  add_common(check, true);
  check->add_option("--t", t, "degree (inferred from the set if omitted)");
  auto* set_opt = check->add_option("--set", inline_set, "inline set, monomials separated by ';'");
  check->add_option("--input", input, "set file, one monomial per line")->excludes(set_opt);
  check->add_flag("--verbose", verbose, "print sizes and slice profiles");

  bool witnesses = false, prune = false;
  std::string out_path, summary_path;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive census of Gotzmann d-subsets of ring_t");
  add_common(enumerate, true);
  enumerate->add_option("--t", lex_t, "degree")->required();
  enumerate->add_option("--d", d, "subset size")->required();
  enumerate->add_flag("--witnesses", witnesses, "list every Gotzmann subset");
  enumerate->add_flag("--prune", prune, "skip subtrees whose partial shadow exceeds the target");
  enumerate->add_option("--out", out_path, "write witness lines to this file");
  enumerate->add_option("--summary", summary_path, "write the JSON summary to this file");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "machine-check a claim over a parameter range");
  add_common(verify, true);
  verify->add_option("--claim", vargs.claim, "claim to check")
      ->check(CLI::IsMember({"all", "transfer", "monotonicity", "two-lex", "remark", "growth-oracle",
                             "quotient-triple", "minimality", "slice"}));
  verify->add_option("--n", vargs.n, "variable count (transfer, slice)");
  verify->add_option("--a", vargs.a, "cap on x1 (transfer)");
  verify->add_option("--t", vargs.t, "degree (transfer, minimality, slice: maximum degree)");
  verify->add_flag("--exhaustive", vargs.exhaustive, "examine every subset (transfer is always exhaustive)");
  verify->add_option("--n-range", vargs.n_range, "lo:hi");
  verify->add_option("--a-range", vargs.a_range, "lo:hi");
  verify->add_option("--t-range", vargs.t_range, "lo:hi");
  verify->add_option("--d-range", vargs.d_range, "lo:hi");
  verify->add_option("--window", vargs.window, "stabilization window in degrees");
  verify->add_option("--out", vargs.out_path, "write the JSON report to this file");

  OracleArgs oargs;
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  add_common(oracle, true);
  oracle->add_option("--check", oargs.check, "which oracle")
      ->check(CLI::IsMember({"growth-s", "growth-r", "shadow", "minimality", "sample"}));
  oracle->add_option("--d", oargs.d);
  oracle->add_option("--n", oargs.n);
  oracle->add_option("--a", oargs.a);
  oracle->add_option("--t", oargs.t);
  auto* oset = oracle->add_option("--set", oargs.inline_set);
  oracle->add_option("--input", oargs.input)->excludes(oset);
  oracle->add_option("--samples", oargs.samples);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*growth) return do_growth(common, d, t, oracle_flag, out);
    if (*lexseg) return do_lexseg(common, lex_t, d, out);
    if (*check) return do_check(common, t, inline_set, input, verbose, out);
    if (*enumerate) return do_enumerate(common, lex_t, d, witnesses, prune, out_path, summary_path, out);
    if (*verify) return do_verify(common, vargs, out);
    if (*oracle) return do_oracle(common, oargs, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OutOfScopeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gotzmann::cli

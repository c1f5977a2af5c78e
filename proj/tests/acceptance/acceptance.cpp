#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gotzmann/census.hpp"
#include "gotzmann/text_format.hpp"
#include "gotzmann/verify.hpp"

using namespace gotzmann;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_claims(const std::vector<ClaimResult>& claims) {
  Outcome o{true, ""};
  Count checked = 0, failures = 0;
  for (const auto& c : claims) {
    checked += c.tuples_checked;
    failures += c.failures.size();
    for (std::size_t i = 0; i < c.failures.size() && i < 3; ++i)
      o.detail += " [" + c.claim_id + " " + c.failures[i].tuple + ": " + c.failures[i].detail + "]";
  }
  o.pass = failures == 0 && checked > 0;
  o.detail = "checked=" + std::to_string(checked) + " failures=" + std::to_string(failures) + o.detail;
  return o;
}

Outcome growth_oracle() { return from_claims({check_growth_oracle(5, 8)}); }

Outcome quotient_triple() { return from_claims({check_quotient_triple(5, 4, 8)}); }

Outcome minimality() {
  std::vector<ClaimResult> claims;
  for (const char* ring : {"3:inf,inf,inf", "3:2,inf,inf", "3:3,inf,inf", "3:2,3,inf"})
    for (Degree t = 0; t <= 3; ++t) claims.push_back(check_minimality(parse_ring(ring), t));
  return from_claims(claims);
}

Outcome transfer() {
  return from_claims(
      {check_transfer(3, 2, 2), check_transfer(3, 2, 3), check_transfer(3, 3, 3), check_transfer(3, 3, 2)});
}

Outcome slice_theorems() { return from_claims(check_slice_theorems(3, 3).claims); }

Outcome monotonicity() {
  SweepConfig parts12;
  parts12.n = {1, 5};
  parts12.a = {1, 4};
  parts12.t = {0, 10};
  parts12.d = {1, 60};
  parts12.check_stabilization = false;
  SweepConfig part3;
  part3.n = {3, 5};
  part3.a = {1, 4};
  part3.d = {1, 30};
  part3.stabilization_window = 5;
  part3.check_n_monotone = false;
  part3.check_t_antitone = false;
  auto r = sweep_monotonicity(parts12);
  r.append(sweep_monotonicity(part3));
  return from_claims(r.claims);
}

Outcome two_lex() {
  SweepConfig cfg;
  cfg.n = {3, 4};
  cfg.a = {1, 4};
  cfg.t = {0, 8};
  cfg.d = {1, 1'000'000};
  return from_claims(sweep_two_lex(cfg).claims);
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  gotzmann::cli::run(args, out, err);
  return out.str();
}

Outcome remark() {
  const std::string a = "3 1 0; 3 0 1; 1 3 0; 0 3 1";
  const std::string v1 = run_cli({"check", "--ring", "3:4,4,inf", "--set", a});
  const std::string v2 = run_cli({"check", "--ring", "3:4,inf,inf", "--set", a + "; 0 4 0"});
  const std::string v3 = run_cli({"check", "--ring", "3:inf,inf,inf", "--set", a + "; 4 0 0; 0 4 0"});
  const bool ok = v1 == "GOTZMANN\n" && v2 == "NOT GOTZMANN\n" && v3 == "NOT GOTZMANN\n";
  auto trim = [](std::string s) { return s.substr(0, s.size() - 1); };
  return {ok, "verdicts (" + trim(v1) + ", " + trim(v2) + ", " + trim(v3) + ")"};
}

std::string deterministic_outputs(unsigned threads) {
  std::string all;
  for (const auto& [ring, t, d] : std::vector<std::tuple<const char*, Degree, Count>>{
           {"3:inf,inf,inf", 3, 4}, {"4:inf,inf,inf,inf", 2, 3}, {"3:2,3,inf", 3, 3}, {"3:3,inf,inf", 4, 3}}) {
    CensusOptions o;
    o.store_witnesses = true;
    o.threads = threads;
    const auto rec = enumerate_gotzmann(parse_ring(ring), t, d, o);
    all += census_witness_lines(rec) + census_summary_json(rec, o.budget, false) + "\n";
  }
  SweepConfig cfg;
  cfg.n = {1, 4};
  cfg.a = {1, 3};
  cfg.t = {0, 6};
  cfg.d = {1, 25};
  cfg.threads = threads;
  all += report_json(sweep_monotonicity(cfg), false);
  cfg.n = {3, 3};
  all += report_json(sweep_two_lex(cfg), false);
  all += report_json(check_slice_theorems(3, 3, threads), false);
  all += run_cli({"enumerate", "--ring", "3:inf,inf,inf", "--t", "3", "--d", "5", "--witnesses", "--no-timing",
                  "--threads", std::to_string(threads)});
  return all;
}

Outcome determinism() {
  const std::string one = deterministic_outputs(1);
  const std::string four = deterministic_outputs(4);
  const std::string eight = deterministic_outputs(8);
  const bool ok = one == four && one == eight && !one.empty();
  return {ok, std::to_string(one.size()) + " bytes compared across 1/4/8 workers"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"growth oracle equivalence (n<=5, t<=8)", growth_oracle},
      {"quotient formula triple agreement (n<=5, a<=4, t<=8)", quotient_triple},
      {"minimality, exhaustive (n=3, t<=3, four rings)", minimality},
      {"transfer equivalence, exhaustive", transfer},
      {"slice max-formula and component verdicts", slice_theorems},
      {"growth monotonicity and stabilization sweeps", monotonicity},
      {"two-lexsegment strict subadditivity sweep", two_lex},
      {"three-ring regression via check", remark},
      {"determinism across worker counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

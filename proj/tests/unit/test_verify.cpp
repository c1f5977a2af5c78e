#include <gtest/gtest.h>

#include "gotzmann/errors.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/verify.hpp"

using namespace gotzmann;

TEST(TPrime, Rule) {
  EXPECT_EQ(t_prime_rule(1, 1, 3, 4, false), 3u);  // t - j2
  EXPECT_EQ(t_prime_rule(1, 1, 3, 4, true), 4u);   // corner present
  EXPECT_EQ(t_prime_rule(2, 2, 3, 4, false), 3u);  // j1 = a-1
  EXPECT_EQ(t_prime_rule(2, 1, 3, 4, false), 4u);  // j1 != j2
  EXPECT_THROW(t_prime_rule(5, 1, 3, 4, false), UsageError);
}

TEST(TPrime, FromLexsegments) {
  const auto ring = RingSpec::pure_power(3, 3);
  // Both segments stay inside the x1^2 slice of R_3; corner x1^2*x3 is absent.
  const auto l1 = lex_segment(ring, 3, 2);
  const auto l2 = lex_segment(ring, 3, 1);
  EXPECT_EQ(t_prime(l1, l2, 3, 3, 3), 2u);  // j1 = j2 = a-1: t + 1 - j2
  const auto r4 = RingSpec::pure_power(3, 4);
  EXPECT_EQ(t_prime(lex_segment(r4, 3, 2), lex_segment(r4, 3, 1), 3, 4, 3), 1u);
  EXPECT_THROW(t_prime(l2, l1, 3, 3, 3), UsageError);
}

TEST(Sweeps, MonotonicitySmall) {
  SweepConfig cfg;
  cfg.n = {1, 4};
  cfg.a = {1, 3};
  cfg.t = {0, 6};
  cfg.d = {1, 20};
  const auto r = sweep_monotonicity(cfg);
  ASSERT_EQ(r.claims.size(), 3u);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.claims[0].tuples_checked, 0u);
  EXPECT_EQ(r.claims[2].stabilization_witnesses.size(), r.claims[2].tuples_checked);
  for (const auto& w : r.claims[2].stabilization_witnesses)
    EXPECT_EQ(growth_R(w.d, w.n, w.a, w.t_star), lex_growth(w.d, w.n - 1));
}

TEST(Sweeps, TwoLexSmall) {
  SweepConfig cfg;
  cfg.n = {3, 3};
  cfg.a = {1, 3};
  cfg.t = {0, 4};
  cfg.d = {1, 1000};
  const auto r = sweep_two_lex(cfg);
  ASSERT_EQ(r.claims.size(), 2u);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.claims[0].tuples_checked, 100u);
}

TEST(Sweeps, ConfigValidation) {
  SweepConfig cfg;
  cfg.d = {5, 1};
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg = SweepConfig{};
  cfg.n = {0, 3};
  EXPECT_THROW(cfg.validate(), UsageError);
}

TEST(ThreeRing, VerdictTriple) {
  const auto v = remark_counterexample();
  EXPECT_EQ(v.verdicts(), (std::array<bool, 3>{true, false, false}));
  EXPECT_TRUE(v.exhaustive_agrees);
}

TEST(ExhaustiveClaims, Small) {
  EXPECT_TRUE(check_growth_oracle(3, 4).passed());
  EXPECT_TRUE(check_quotient_triple(3, 3, 5).passed());
  EXPECT_TRUE(check_minimality(RingSpec::polynomial(3), 2).passed());
  const auto tr = check_transfer(3, 2, 2);
  EXPECT_EQ(tr.tuples_checked, 32u);
  EXPECT_TRUE(tr.passed());
  EXPECT_THROW(check_transfer(3, 3, 1), OutOfScopeError);
  EXPECT_TRUE(check_slice_theorems(3, 2).passed());
}

TEST(Report, JsonRoundTripAndDeterminism) {
  SweepConfig cfg;
  cfg.n = {2, 3};
  cfg.a = {1, 2};
  cfg.t = {0, 3};
  cfg.d = {1, 8};
  const auto r = sweep_monotonicity(cfg);
  const std::string json = report_json(r, false);
  EXPECT_NE(json.find("\"elapsed_ms\": null"), std::string::npos);
  EXPECT_EQ(emit_report(r, false), json);
  const auto back = parse_report_json(json);
  EXPECT_EQ(report_json(back, false), json);
  cfg.threads = 4;
  EXPECT_EQ(report_json(sweep_monotonicity(cfg), false), json);
  EXPECT_NE(report_text(r, false).find("PASS growth-increasing-in-n"), std::string::npos);
}

TEST(ExhaustiveClaims, BoundaryTransferSkipsEmptySet) {
  const auto tr = check_transfer(3, 3, 2);
  EXPECT_EQ(tr.tuples_checked, 63u);
  EXPECT_EQ(tr.tuples_skipped, 1u);
  EXPECT_TRUE(tr.passed());
}

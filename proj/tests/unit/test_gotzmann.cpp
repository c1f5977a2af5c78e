#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "gotzmann/census.hpp"
#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "gotzmann/growth.hpp"
#include "gotzmann/text_format.hpp"
#include "oracle.hpp"

using namespace gotzmann;

namespace {

MonomialSet set_of(const std::string& ring, const std::string& members) {
  return MonomialSet::of(parse_ring(ring), parse_inline_set(members));
}

bool oracle_gotzmann(const std::vector<std::uint32_t>& caps, std::uint32_t t, const std::vector<oracle::Exps>& m) {
  return oracle::shadow(m, caps).size() == oracle::lex_shadow_size(caps, t, m.size());
}

}  // namespace

TEST(IsGotzmann, Examples) {
  const auto m = set_of("3:inf,inf,inf", "0 2 0; 0 1 1");
  const auto r = is_gotzmann(m);
  EXPECT_TRUE(r.gotzmann);
  EXPECT_EQ(r.actual, 5u);
  EXPECT_EQ(r.target, 5u);
  EXPECT_EQ(r.profiles.size(), 3u);
  EXPECT_EQ(r.components.size(), 3u);

  EXPECT_FALSE(is_gotzmann(set_of("3:inf,inf,inf", "2 0 0; 0 0 2")).gotzmann);
  EXPECT_FALSE(is_gotzmann(RingSpec::pure_power(3, 3), m).gotzmann);
}

TEST(IsGotzmann, ThreeRingSets) {
  const std::string a = "3 1 0; 3 0 1; 1 3 0; 0 3 1";
  EXPECT_TRUE(is_gotzmann(set_of("3:4,4,inf", a)).gotzmann);
  EXPECT_FALSE(is_gotzmann(set_of("3:4,inf,inf", a + "; 0 4 0")).gotzmann);
  EXPECT_FALSE(is_gotzmann(set_of("3:inf,inf,inf", a + "; 4 0 0; 0 4 0")).gotzmann);
}

TEST(IsGotzmann, RefusesUnsortedCaps) {
  EXPECT_THROW(is_gotzmann(set_of("3:inf,3,inf", "1 1 0")), DefinednessError);
}

TEST(IsGotzmann, PropertyMatchesOracle) {
  std::mt19937_64 rng(99);
  const std::vector<std::vector<std::uint32_t>> rings = {oracle::poly(3), oracle::poly(4), oracle::quot(3, 2),
                                                          oracle::quot(3, 3), {2, 3, oracle::kInf}, {3, 3, 3}};
  int gotz = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const auto& caps = rings[rng() % rings.size()];
    const std::uint32_t t = 1 + rng() % 4;
    const auto pool = oracle::monomials(caps, t);
    if (pool.empty()) continue;
    const auto pick = oracle::sample(pool, 1 + rng() % std::min<std::size_t>(pool.size(), 4), rng);
    const bool want = oracle_gotzmann(caps, t, pick);
    gotz += want;
    const auto r = is_gotzmann(MonomialSet(testutil::ring_of(caps), t, testutil::to_monomials(pick)));
    ASSERT_EQ(r.gotzmann, want);
  }
  EXPECT_GT(gotz, 20);  // the generator reaches both verdicts
}

TEST(Transfer, GhostAndBoundaryExamples) {
  const auto m = set_of("3:inf,inf,inf", "0 2 0; 0 1 1");
  const auto v = verify_transfer(m, 3, 3, 2);
  EXPECT_EQ(v.regime, TransferRegime::Boundary);
  EXPECT_FALSE(v.gotzmann_in_quotient);
  EXPECT_FALSE(v.s_side);  // Gotzmann in S but x1^2 is missing
  EXPECT_TRUE(v.equivalent());

  const auto lex = lex_segment(RingSpec::pure_power(3, 2), 3, 3);
  const auto g = verify_transfer(lex, 3, 2, 3);
  EXPECT_EQ(g.regime, TransferRegime::Ghost);
  EXPECT_TRUE(g.gotzmann_in_quotient);
  EXPECT_TRUE(g.s_side);

  EXPECT_THROW(verify_transfer(set_of("3:inf,inf,inf", "0 1 0"), 3, 3, 1), OutOfScopeError);
  EXPECT_THROW(verify_transfer(set_of("3:inf,inf,inf", "2 0 0"), 3, 2, 2), UsageError);
}

TEST(Transfer, PropertyGhostSideMatchesOracle) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 3;
    const Exponent a = 1 + rng() % 3;
    const Degree t = a + rng() % 2;
    const auto caps = oracle::quot(n, a);
    const auto pool = oracle::monomials(caps, t);
    const auto pick = oracle::sample(pool, 1 + rng() % pool.size(), rng);
    auto with_b = pick;
    for (const auto& m : oracle::monomials(oracle::poly(n), t))
      if (m[0] >= a) with_b.push_back(m);
    const auto v = verify_transfer(MonomialSet(RingSpec::polynomial(n), t, testutil::to_monomials(pick)), n, a, t);
    EXPECT_EQ(v.gotzmann_in_quotient, oracle_gotzmann(caps, t, pick));
    EXPECT_EQ(v.s_side, oracle_gotzmann(oracle::poly(n), t, with_b));
    EXPECT_TRUE(v.equivalent());
  }
}

TEST(SliceGrowth, LexsegmentProfile) {
  const auto seg = lex_segment(RingSpec::polynomial(3), 2, 4);
  const auto c = slice_growth_check(seg, 0);
  ASSERT_EQ(c.entries.size(), 4u);
  const std::vector<Count> actual{2, 3, 2, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c.entries[i].actual, actual[i]);
    EXPECT_TRUE(c.entries[i].holds());
  }
  EXPECT_TRUE(c.all_hold());
  EXPECT_THROW(slice_growth_check(set_of("3:inf,inf,inf", "2 0 0; 0 0 2"), 0), UsageError);
  EXPECT_THROW(slice_growth_check(lex_segment(RingSpec::pure_power(3, 3), 2, 2), 0), UsageError);
}

TEST(SliceGrowth, PropertyLowerBoundForAnySet) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 3 + rng() % 2;
    const Degree t = 1 + rng() % 3;
    const auto pool = oracle::monomials(oracle::poly(n), t);
    const auto pick = oracle::sample(pool, 1 + rng() % pool.size(), rng);
    const MonomialSet m(RingSpec::polynomial(n), t, testutil::to_monomials(pick));
    for (std::size_t axis = 0; axis < n; ++axis)
      for (const auto& e : slice_growth_compare(m, axis).entries) EXPECT_GE(e.actual, e.expected);
  }
}

TEST(Compression, Example) {
  const auto m = set_of("3:inf,inf,inf", "1 0 1; 0 1 1");
  const auto tm = slice_lex_compress(m, 0);
  EXPECT_EQ(format_set_line(tm), "1 1 0; 0 2 0");
  EXPECT_EQ(shadow(tm).size(), 5u);
  EXPECT_THROW(slice_lex_compress(lex_segment(RingSpec::pure_power(3, 2), 2, 2), 0), UsageError);
}

TEST(Compression, PropertyProfileKeptShadowNotLarger) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 3;
    const Degree t = 1 + rng() % 4;
    const auto pool = oracle::monomials(oracle::poly(n), t);
    const auto pick = oracle::sample(pool, 1 + rng() % pool.size(), rng);
    const MonomialSet m(RingSpec::polynomial(n), t, testutil::to_monomials(pick));
    const std::size_t axis = rng() % n;
    const auto tm = slice_lex_compress(m, axis);
    EXPECT_EQ(slice_profile(tm, axis), slice_profile(m, axis));
    EXPECT_LE(shadow(tm).size(), shadow(m).size());
  }
}

TEST(Components, EveryCensusWitness) {
  for (Degree t = 1; t <= 3; ++t) {
    const auto ring = RingSpec::polynomial(3);
    for (Count d = 1; d <= dim_degree(ring, t); ++d) {
      CensusOptions opts;
      opts.store_witnesses = true;
      const auto rec = enumerate_gotzmann(ring, t, d, opts);
      for (const auto& w : rec.witnesses)
        for (std::size_t axis = 0; axis < 3; ++axis) {
          const auto c = component_theorem_check(w, axis);
          EXPECT_EQ(c.entries.size(), t + 2u);
          EXPECT_TRUE(c.all_hold()) << format_set_line(w);
        }
    }
  }
  EXPECT_THROW(component_theorem_check(set_of("3:inf,inf,inf", "2 0 0; 0 0 2"), 0), UsageError);
}

TEST(Components, BranchLabels) {
  // x1^2 alone: slice 2 has size 1, slice 1 is empty.
  const auto c = component_theorem_check(set_of("3:inf,inf,inf", "2 0 0"), 0);
  EXPECT_EQ(c.entries[2].branch, ComponentBranch::GotzmannSlice);
  EXPECT_EQ(c.entries[3].branch, ComponentBranch::Unclaimed);
  EXPECT_STREQ(to_string(ComponentBranch::SizeBound), "size-bound");
}

#include <gtest/gtest.h>

#include <random>

#include "polychain/classify.hpp"
#include "polychain/dp.hpp"
#include "polychain/oracle.hpp"

using namespace polychain;

namespace {

RationalIndex table_of(const char* name, std::array<long long, 6> v) {
  RationalIndex f{name, {}, {}};
  for (std::size_t i = 0; i < 6; ++i) f.values[i] = Rational(v[i]);
  return f;
}

// Checks a verdict against the DP for 3 <= n <= n_max.
template <Scalar T>
void expect_verdict_matches_dp(const IndexFunction<T>& f, const ClassifierVerdict& v, std::size_t n_max) {
  ASSERT_NE(v.kind, ClassifierCase::not_applicable);
  const auto table = run_dp(f, n_max);
  for (std::size_t n = 3; n <= n_max; ++n) {
    const auto r = maximize(table, n);
    const auto chains = enumerate_maximal(table, n, std::nullopt, 3);
    switch (v.kind) {
      case ClassifierCase::linear_always:
        ASSERT_EQ(chains, std::vector<LinkVector>{linear_chain(n)}) << f.name << " n=" << n;
        break;
      case ClassifierCase::linear_from_four_tie_at_three:
        if (n == 3)
          ASSERT_EQ(r.labeled_count, 2);
        else
          ASSERT_EQ(chains, std::vector<LinkVector>{linear_chain(n)}) << f.name << " n=" << n;
        break;
      case ClassifierCase::zigzag_then_linear: {
        const std::size_t n_star = v.n_star->template convert_to<std::size_t>();
        if (n < n_star) {
          ASSERT_EQ(chains, std::vector<LinkVector>{zigzag_chain(n)}) << f.name << " n=" << n;
        } else if (n == n_star) {
          ASSERT_TRUE(std::find(chains.begin(), chains.end(), linear_chain(n)) != chains.end());
          const bool zigzag_too = std::find(chains.begin(), chains.end(), zigzag_chain(n)) != chains.end();
          ASSERT_EQ(zigzag_too, *v.zigzag_ties_at_threshold);
          ASSERT_EQ(chains.size(), zigzag_too ? 2u : 1u);
        } else {
          ASSERT_EQ(chains, std::vector<LinkVector>{linear_chain(n)}) << f.name << " n=" << n;
        }
        break;
      }
      case ClassifierCase::not_applicable: break;
    }
  }
}

}  // namespace

TEST(Classify, NegatedAziIsZigzagThenLinearAtSix) {
  const auto v = classify(negate(presets::azi()));
  EXPECT_TRUE(v.premise_holds);
  EXPECT_EQ(v.kind, ClassifierCase::zigzag_then_linear);
  ASSERT_TRUE(v.n_star);
  EXPECT_EQ(*v.n_star, 6);
  EXPECT_EQ(v.zigzag_ties_at_threshold, false);
  expect_verdict_matches_dp(negate(presets::azi()), v, 200);
}

TEST(Classify, HarmonicIsLinearAlways) {
  const auto v = classify(presets::harmonic());
  EXPECT_TRUE(v.premise_holds);
  EXPECT_EQ(v.kind, ClassifierCase::linear_always);
  EXPECT_FALSE(v.n_star);
  expect_verdict_matches_dp(presets::harmonic(), v, 200);
}

TEST(Classify, AziPremiseFails) {
  const auto v = classify(presets::azi());
  EXPECT_FALSE(v.premise_holds);
  EXPECT_EQ(v.kind, ClassifierCase::not_applicable);
}

TEST(Classify, TieAtThreeCase) {
  // f(2,2..4) = 0,0,1; f(3,3) = 1; f(3,4) = 1; f(4,4) = 0: g11 = g2 = 3.
  const RationalIndex f = table_of("tie3", {0, 0, 1, 1, 1, 0});
  const auto v = classify(f);
  EXPECT_EQ(v.kind, ClassifierCase::linear_from_four_tie_at_three);
  EXPECT_EQ(ti_direct(LinkVector{1}, f), ti_direct(LinkVector{2}, f));
  expect_verdict_matches_dp(f, v, 60);
}

TEST(Classify, ZigzagTiesLinearAtIntegralThreshold) {
  // g11 = 3, g22 = 2, g2 = 5: threshold (5-3)/(3-2) + 3 = 5 exactly.
  const RationalIndex f = table_of("edge", {0, -3, 1, 1, 2, 0});
  const auto v = classify(f);
  EXPECT_EQ(v.kind, ClassifierCase::zigzag_then_linear);
  EXPECT_EQ(*v.n_star, 5);
  EXPECT_EQ(v.zigzag_ties_at_threshold, true);
  expect_verdict_matches_dp(f, v, 60);
}

TEST(Classify, CeilingIsExact) {
  // Threshold (g2-g11)/(g11-g22) + 3 with a fraction just above an integer.
  GTable<Rational> g;
  g.g11 = Rational(3);
  g.g12 = Rational(0);
  g.g21 = Rational(0);
  g.g22 = Rational(2);
  g.g2 = Rational(5) + Rational(1, 1000000007);
  const auto v = classify(g);
  EXPECT_EQ(*v.n_star, 6);
  g.g2 = Rational(5);
  EXPECT_EQ(*classify(g).n_star, 5);
}

TEST(Classify, VerdictsAgreeWithDpOnRandomTables) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long long> d(-30, 30);
  int applicable = 0;
  for (int trial = 0; trial < 3000 && applicable < 60; ++trial) {
    RationalIndex f{"rnd", {}, {}};
    for (auto& x : f.values) x = Rational(d(rng), 1 + (d(rng) & 3));
    const auto v = classify(f);
    if (v.kind == ClassifierCase::not_applicable) continue;
    ++applicable;
    const std::size_t top = v.n_star ? std::max<std::size_t>(40, v.n_star->convert_to<std::size_t>() + 5) : 40;
    expect_verdict_matches_dp(f, v, std::min<std::size_t>(top, 400));
  }
  EXPECT_GE(applicable, 20);
}

TEST(Classify, OracleConfirmsSmallN) {
  const RationalIndex neg = negate(presets::azi());
  for (std::size_t n = 3; n <= 14; ++n) {
    const auto o = exhaustive(neg, n);
    EXPECT_EQ(o.argmax, std::vector<LinkVector>{n < 6 ? zigzag_chain(n) : linear_chain(n)});
  }
  for (std::size_t n = 3; n <= 14; ++n)
    EXPECT_EQ(exhaustive(presets::harmonic(), n).argmax, std::vector<LinkVector>{linear_chain(n)});
}

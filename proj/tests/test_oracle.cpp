#include <gtest/gtest.h>

#include "polychain/cross_check.hpp"
#include "polychain/oracle.hpp"

using namespace polychain;

TEST(Exhaustive, AziSixSquares) {
  const auto r = exhaustive(presets::azi(), 6);
  EXPECT_EQ(r.chains_evaluated, 16u);
  EXPECT_EQ(r.max_value, Rational(10790359, 54000));
  EXPECT_EQ(r.argmax, std::vector<LinkVector>{LinkVector({1, 2, 2, 1})});
  EXPECT_EQ(r.min_value, Rational(12549, 64));
  EXPECT_EQ(r.min_value, Rational(3801, 64) + 4 * Rational(2187, 64));
  EXPECT_EQ(r.argmin, std::vector<LinkVector>{linear_chain(6)});
  EXPECT_EQ(r.end_max[0], Rational(10790359, 54000));
  EXPECT_EQ(r.end_max[1], Rational(798197, 4000));
}

TEST(Exhaustive, AziFourSquaresHasTwoMaximizers) {
  const auto r = exhaustive(presets::azi(), 4);
  EXPECT_EQ(r.argmax, (std::vector<LinkVector>{{1, 2}, {2, 1}}));
  EXPECT_EQ(r.max_value, Rational(513013, 4000));
}

TEST(Exhaustive, ThreeSquaresCoversTwoChains) {
  const auto r = exhaustive(presets::zagreb1(), 3);
  EXPECT_EQ(r.chains_evaluated, 2u);
  EXPECT_THROW(exhaustive(presets::zagreb1(), 2), std::domain_error);
}

TEST(Exhaustive, RefusesAboveCap) {
  EXPECT_THROW(exhaustive(presets::azi(), 25), OracleCapExceeded);
  EXPECT_THROW(exhaustive(presets::azi(), 11, 10), OracleCapExceeded);
  try {
    exhaustive(presets::azi(), 30);
  } catch (const OracleCapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("2^28"), std::string::npos);
  }
}

TEST(Exhaustive, SetsAreSortedLexicographically) {
  const auto r = exhaustive(tabulate<Rational>("c", [](int, int) { return Rational(1); }), 6);
  ASSERT_EQ(r.argmax.size(), 16u);
  EXPECT_TRUE(std::is_sorted(r.argmax.begin(), r.argmax.end()));
  EXPECT_EQ(r.argmax.front(), linear_chain(6));
  EXPECT_EQ(r.argmax.back(), zigzag_chain(6));
}

TEST(ExtremumTracker, ToleranceTiesArePrunedWhenBestMoves) {
  ExtremumTracker<double> t(+1, Tolerance<double>{1e-3});
  t.offer(LinkVector{1}, 1.0);
  t.offer(LinkVector{2}, 1.0005);  // within tolerance, new best
  t.offer(LinkVector{1, 1}, 1.0012);
  EXPECT_EQ(t.members(), (std::vector<LinkVector>{{1, 1}, {2}}));
  t.offer(LinkVector{2, 2}, 5.0);
  EXPECT_EQ(t.members(), (std::vector<LinkVector>{{2, 2}}));
}

TEST(CrossCheck, AziAgreesThroughSixteen) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto cc = cross_check(presets::azi(), n);
    ASSERT_TRUE(cc.ok) << "n=" << n << " " << (cc.mismatches.empty() ? "" : cc.mismatches.front().claim);
  }
}

TEST(CrossCheck, HarmonicAgreesAndLinearWins) {
  for (std::size_t n = 3; n <= 14; ++n) {
    ASSERT_TRUE(cross_check(presets::harmonic(), n).ok);
    ASSERT_EQ(exhaustive(presets::harmonic(), n).argmax, std::vector<LinkVector>{linear_chain(n)});
  }
}

TEST(CrossCheck, FloatRandicWithinTolerance) {
  const auto f = std::get<FloatIndex>(presets::randic(Rational(-1, 2)));
  EXPECT_TRUE(cross_check(f, 12).ok);
}

TEST(CrossCheck, DetectsInjectedFault) {
  auto g = g_table(presets::azi());
  g.g22 += Rational(1, 1000);
  const auto cc = cross_check(presets::azi(), 8, std::optional(g));
  EXPECT_FALSE(cc.ok);
  ASSERT_FALSE(cc.mismatches.empty());
  EXPECT_EQ(cc.mismatches.front().n, 8u);
}

#include <gtest/gtest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/spectrum.hpp"
#include "oracles.hpp"

using namespace covspec;

namespace {

LengthValue q(long n, long d = 1, Unit u = Unit::one) { return LengthValue::rational(Rational(n, d), u); }

Spectrum spectrum(std::initializer_list<LengthValue> values, Unit u = Unit::one) {
  Spectrum s(u);
  for (const auto& v : values) s.insert(v);
  return s;
}

}  // namespace

TEST(Spectrum, MergesDuplicatesAndSorts) {
  Spectrum s;
  s.insert(q(3, 2));
  s.insert(q(1, 2));
  s.insert(q(1, 2), 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.entries()[0].value, q(1, 2));
  EXPECT_EQ(s.entries()[0].multiplicity, 3);
  EXPECT_EQ(s.total_multiplicity(), 4);
  EXPECT_EQ(s.min(), q(1, 2));
  EXPECT_EQ(s.max(), q(3, 2));
}

TEST(Spectrum, RejectsNonPositiveAndForeignUnits) {
  Spectrum s;
  EXPECT_THROW(s.insert(q(0)), ArgumentError);
  EXPECT_THROW(s.insert(q(-1)), ArgumentError);
  EXPECT_THROW(s.insert(q(1, 1, Unit::pi)), UnitMismatch);
  EXPECT_THROW(s.insert(q(1), 0), ArgumentError);
  EXPECT_THROW(s.min(), ArgumentError);
}

TEST(Hausdorff, TorusExamples) {
  // 1x3 torus against the 3x2 torus.
  EXPECT_EQ(hausdorff_distance_zero(spectrum({q(1, 2), q(3, 2)}), spectrum({q(1), q(3, 2)})), q(1, 2));
  EXPECT_TRUE(hausdorff_distance_zero(spectrum({q(1, 2)}), spectrum({q(1, 2)})).is_zero());
  EXPECT_EQ(hausdorff_distance_zero(spectrum({q(1, 8), q(1, 2)}), spectrum({q(1, 2)})), q(1, 8));
}

TEST(Hausdorff, EmptySpectrumMeasuresFromZero) {
  EXPECT_EQ(hausdorff_distance_zero(Spectrum(), spectrum({q(3, 4)})), q(3, 4));
  EXPECT_TRUE(hausdorff_distance_zero(Spectrum(), Spectrum()).is_zero());
}

TEST(Hausdorff, UnitMismatch) {
  EXPECT_THROW(hausdorff_distance_zero(spectrum({q(1)}), spectrum({q(1, 1, Unit::pi)}, Unit::pi)), UnitMismatch);
}

TEST(Hausdorff, AgreesWithSetOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<int> num(1, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> a(count(rng)), b(count(rng));
    Spectrum sa, sb;
    for (auto& x : a) {
      x = fraction(num(rng), 12);
      x.canonicalize();
      sa.insert(LengthValue::rational(x));
    }
    for (auto& x : b) {
      x = fraction(num(rng), 12);
      x.canonicalize();
      sb.insert(LengthValue::rational(x));
    }
    EXPECT_EQ(hausdorff_distance_zero(sa, sb), LengthValue::rational(oracle::hausdorff_with_zero(a, b)));
  }
}

TEST(Gaps, TodenseFirstGap) {
  for (int j = 1; j <= 6; ++j) {
    const long n = 1L << j;
    Spectrum s(Unit::pi);
    for (long k = 1; k <= n; ++k) s.insert(q(k, n, Unit::pi));
    AnchorSet anchors({q(0, 1, Unit::pi), q(1, 1, Unit::pi)});
    auto gaps = gap_list(s, anchors);
    EXPECT_EQ(gap_n(gaps, 1, Unit::pi), q(1, n, Unit::pi)) << "j=" << j;
  }
}

TEST(Gaps, NounifLargestGap) {
  for (int i = 2; i <= 8; ++i) {
    Spectrum s(Unit::pi);
    for (int k = 1; k < i; ++k) s.insert(q(k, i * i, Unit::pi));
    s.insert(q(1, i, Unit::pi));
    s.insert(q(1, 1, Unit::pi));
    auto gaps = gap_list(s, AnchorSet({q(0, 1, Unit::pi), q(1, 1, Unit::pi)}));
    EXPECT_EQ(gaps.front(), q(i - 1, i, Unit::pi)) << "i=" << i;
  }
}

TEST(Gaps, EmptySpectrumLeavesTheAnchorInterval) {
  auto gaps = gap_list(Spectrum(), AnchorSet({q(0), q(1)}));
  ASSERT_EQ(gaps.size(), 1u);
  EXPECT_EQ(gaps[0], q(1));
  EXPECT_TRUE(gap_n(gaps, 2, Unit::one).is_zero());
  EXPECT_THROW(gap_n(gaps, 0, Unit::one), ArgumentError);
}

TEST(AnchorSet, Validation) {
  EXPECT_THROW(AnchorSet({q(0)}), ArgumentError);
  EXPECT_THROW(AnchorSet({q(1), q(0)}), ArgumentError);
  EXPECT_THROW(AnchorSet({q(-1), q(0)}), ArgumentError);
}

TEST(CountInInterval, Examples) {
  EXPECT_EQ(count_in_interval(spectrum({q(1), q(3, 2)}), q(1), q(3, 2), false), 2);
  Spectrum doubled;
  doubled.insert(q(1, 2), 2);
  EXPECT_EQ(count_in_interval(doubled, LengthValue::real(0.4), LengthValue::real(0.6), true), 2);
  EXPECT_EQ(count_in_interval(doubled, LengthValue::real(0.4), LengthValue::real(0.6), false), 1);
  Spectrum eighths(Unit::pi);
  for (int k = 1; k <= 8; ++k) eighths.insert(q(k, 8, Unit::pi));
  EXPECT_EQ(count_in_interval(eighths, q(1, 4, Unit::pi), q(1, 2, Unit::pi), false), 3);
  EXPECT_THROW(count_in_interval(doubled, q(1), q(1, 2), false), ArgumentError);
}

TEST(ClumpCover, Singleton) {
  std::vector<Spectrum> family{spectrum({q(1, 2)})};
  auto clumps = clump_cover(family, LengthValue::real(0.1));
  ASSERT_EQ(clumps.size(), 1u);
  EXPECT_LT(4 * clumps[0].radius.to_double(), 0.1);
  EXPECT_LT(clumps[0].measure(), 0.1);
  EXPECT_TRUE(clumps[0].contains(family[0]));
}

TEST(ClumpCover, DuplicatesShare) {
  std::vector<Spectrum> family{spectrum({q(1, 2)}), spectrum({q(1, 2)})};
  auto clumps = clump_cover(family, q(1, 10));
  ASSERT_EQ(clumps.size(), 1u);
  EXPECT_EQ(clumps[0].members, (std::vector<std::size_t>{0, 1}));
}

TEST(ClumpCover, DistinctMembersGetTheirOwnSet) {
  std::vector<Spectrum> family{spectrum({q(1, 2)}), spectrum({q(1, 4), q(1, 2)})};
  auto clumps = clump_cover(family, q(1, 20));
  ASSERT_EQ(clumps.size(), 2u);
  for (std::size_t i = 0; i < clumps.size(); ++i) {
    EXPECT_LT(clumps[i].measure(), 0.05);
    for (auto m : clumps[i].members) EXPECT_TRUE(clumps[i].contains(family[m]));
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "covspec/errors.hpp"
#include "covspec/lattice.hpp"
#include "oracles.hpp"

using namespace covspec;

namespace {

Lattice square() { return Lattice::diagonal({1, 1}); }

}  // namespace

TEST(Lattice, Validation) {
  EXPECT_THROW(Lattice::from_basis({{1, 2}, {2, 4}}), ArgumentError);
  EXPECT_THROW(Lattice::from_basis({{1, 0, 0}, {0, 1, 0}}), ArgumentError);
  EXPECT_THROW(Lattice::from_gram({{1, 2}, {3, 1}}), ArgumentError);
  EXPECT_THROW(Lattice::diagonal({1, 1, 1, 1, 1, 1, 1}), ArgumentError);
  EXPECT_THROW(Lattice::rhombic(0.0), ArgumentError);
  EXPECT_THROW(Lattice::diagonal({1, 0}), ArgumentError);
}

TEST(Lattice, MValues) {
  EXPECT_EQ(square().m_value({1, 0}), LengthValue::rational(1));
  EXPECT_EQ(Lattice::diagonal({1, 3}).m_value({0, 1}), LengthValue::rational(3));
  EXPECT_EQ(square().m_value({1, 1}), LengthValue::sqrt_of(2));
  for (double theta : {0.5, 1.0, 1.4}) {
    auto l = Lattice::rhombic(theta);
    EXPECT_NEAR(l.m_value({1, -1}).to_double(), std::sqrt(2 - 2 * std::cos(theta)), 1e-14);
  }
}

TEST(Enumerate, SquareLattice) {
  auto shells = enumerate_by_norm(square(), LengthValue::rational(1));
  ASSERT_EQ(shells.size(), 1u);
  EXPECT_EQ(shells[0].vectors.size(), 4u);
  shells = enumerate_by_norm(square(), LengthValue::sqrt_of(2));
  ASSERT_EQ(shells.size(), 2u);
  EXPECT_EQ(shells[1].value, LengthValue::sqrt_of(2));
  EXPECT_EQ(shells[1].vectors.size(), 4u);
}

TEST(Enumerate, Diagonal13) {
  auto shells = enumerate_by_norm(Lattice::diagonal({1, 3}), LengthValue::rational(2));
  ASSERT_EQ(shells.size(), 2u);
  EXPECT_EQ(shells[0].vectors, (std::vector<LatticeVector>{{-1, 0}, {1, 0}}));
  EXPECT_EQ(shells[1].vectors, (std::vector<LatticeVector>{{-2, 0}, {2, 0}}));
}

TEST(Enumerate, MatchesBoxScan) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 2;
    auto basis = oracle::random_lattice_basis(rng, n);
    auto lattice = Lattice::from_basis(basis);
    auto q = oracle::gram_of_basis(basis);
    Rational bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, q[i][i]);
    auto expected = oracle::box_scan(q, bound);
    auto shells = enumerate_by_norm(lattice, LengthValue::sqrt_of(bound));
    ASSERT_EQ(shells.size(), expected.size());
    auto it = expected.begin();
    for (const auto& s : shells) {
      EXPECT_EQ(s.value, LengthValue::sqrt_of(it->first));
      auto vs = it->second;
      std::sort(vs.begin(), vs.end());
      EXPECT_EQ(s.vectors, vs);
      ++it;
    }
  }
}

TEST(Enumerate, Guards) {
  EXPECT_THROW(enumerate_by_norm(square(), LengthValue::rational(0)), ArgumentError);
  EXPECT_THROW(enumerate_by_norm(square(), LengthValue::rational(1, Unit::pi)), UnitMismatch);
  EXPECT_THROW(enumerate_by_norm(square(), LengthValue::rational(40), 100), EnumerationLimit);
}

TEST(Enumerate, FloatGramGroupsTies) {
  auto shells = enumerate_by_norm(Lattice::rhombic(M_PI / 2), LengthValue::real(1.0));
  ASSERT_EQ(shells.size(), 1u);
  EXPECT_EQ(shells[0].vectors.size(), 4u);
  shells = enumerate_by_norm(Lattice::rhombic(M_PI / 3), LengthValue::real(1.0));
  ASSERT_EQ(shells.size(), 1u);
  EXPECT_EQ(shells[0].vectors.size(), 6u);  // hexagonal lattice
}

TEST(HermiteNormalForm, Shape) {
  auto h = hermite_normal_form({{2, 4}, {3, 5}, {0, 0}});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], (std::vector<Integer>{1, 1}));
  EXPECT_EQ(h[1], (std::vector<Integer>{0, 2}));
}

TEST(Sublattice, MembershipExamples) {
  EXPECT_EQ(sublattice_membership({2, 0}, {{1, 0}}), Membership::in);
  EXPECT_EQ(sublattice_membership({1, 1}, {{2, 0}, {0, 2}}), Membership::out);
  EXPECT_EQ(sublattice_membership({1, 0}, {{1, -1}, {0, 1}}), Membership::in);
  Sublattice zero(2, {});
  EXPECT_EQ(zero.rank(), 0);
  EXPECT_EQ(zero.gram_determinant(), 1);
  EXPECT_FALSE(zero.contains({1, 0}));
  EXPECT_TRUE(zero.contains({0, 0}));
}

TEST(Sublattice, AgreesWithEuclidOracle) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<LatticeVector> gens;
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < k; ++i) gens.push_back(oracle::random_vector(rng, n, 4));
    Sublattice s(n, gens);
    auto t = oracle::span_type(gens, n);
    EXPECT_EQ(s.rank(), t.rank);
    EXPECT_EQ(s.gram_determinant(), t.covolume_squared);
    LatticeVector g = oracle::random_vector(rng, n, 6);
    if (!gens.empty() && trial % 2) {
      // Make g an integer combination half the time.
      std::fill(g.begin(), g.end(), 0);
      for (const auto& v : gens) {
        long long c = std::uniform_int_distribution<long long>(-3, 3)(rng);
        for (int i = 0; i < n; ++i) g[i] += c * v[i];
      }
    }
    EXPECT_EQ(s.contains(g), oracle::in_span(g, gens, n));
    EXPECT_EQ(s.is_whole(), t.rank == n && t.covolume_squared == 1);
  }
}

TEST(DeltaSublattice, ThreeByTwoRegimes) {
  auto l = Lattice::diagonal({3, 2});
  EXPECT_EQ(delta_sublattice(l, LengthValue::real(0.9)).rank(), 0);
  EXPECT_EQ(delta_sublattice(l, LengthValue::rational(1)).rank(), 0);  // strict: 2 < 2 fails
  EXPECT_EQ(delta_sublattice(l, LengthValue::rational(Rational(6, 5))).rank(), 1);
  EXPECT_EQ(delta_sublattice(l, LengthValue::rational(Rational(3, 2))).rank(), 1);
  EXPECT_TRUE(delta_sublattice(l, LengthValue::rational(Rational(8, 5))).is_whole());
}

TEST(TranslativeDeltaLength, Examples) {
  EXPECT_EQ(translative_delta_length(square(), {1, 0}, LengthValue::rational(Rational(2, 5))), LengthValue::rational(1));
  EXPECT_TRUE(translative_delta_length(square(), {3, 0}, LengthValue::rational(Rational(3, 5))).is_zero());
  EXPECT_EQ(translative_delta_length(Lattice::diagonal({1, 3}), {0, 1}, LengthValue::rational(Rational(3, 5))),
            LengthValue::rational(3));
}

TEST(TranslativeDeltaLength, MatchesCosetScan) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    auto basis = oracle::random_lattice_basis(rng, 2, -3, 3);
    auto lattice = Lattice::from_basis(basis);
    auto q = oracle::gram_of_basis(basis);
    auto g = oracle::random_vector(rng, 2, 2);
    Rational delta_sq = fraction(std::uniform_int_distribution<int>(1, 40)(rng), 16);
    auto delta = LengthValue::sqrt_of(delta_sq);
    // Lambda_delta from the box scan, then min over the coset g + Lambda_delta.
    std::vector<LatticeVector> shorts;
    for (const auto& [nsq, vs] : oracle::box_scan(q, 4 * delta_sq))
      if (nsq < 4 * delta_sq) shorts.insert(shorts.end(), vs.begin(), vs.end());
    Rational best = oracle::norm_squared(q, g);
    if (oracle::in_span(g, shorts, 2)) best = 0;
    for (const auto& [nsq, vs] : oracle::box_scan(q, best))
      for (const auto& v : vs) {
        LatticeVector d{v[0] - g[0], v[1] - g[1]};
        if (oracle::in_span(d, shorts, 2)) best = std::min(best, nsq);
      }
    EXPECT_EQ(translative_delta_length(lattice, g, delta), LengthValue::sqrt_of(best));
  }
}

#include <gtest/gtest.h>

#include <random>

#include "covspec/errors.hpp"
#include "covspec/sunada.hpp"

using namespace covspec;

namespace {

std::vector<Permutation> perms(std::initializer_list<const char*> cycles, int n) {
  std::vector<Permutation> out;
  for (auto c : cycles) out.push_back(parse_cycles(c, n));
  return out;
}

}  // namespace

TEST(Permutations, CycleTypes) {
  EXPECT_EQ(cycle_type(identity_permutation(4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(parse_cycles("(1 2 3)", 3)), (std::vector<int>{3}));
  EXPECT_EQ(cycle_type(parse_cycles("(1 2)(3 4)", 4)), (std::vector<int>{2, 2}));
  EXPECT_EQ(cycle_type(parse_cycles("(1 2)", 4)), (std::vector<int>{2, 1, 1}));
}

TEST(Permutations, ParseAndFormat) {
  EXPECT_EQ(parse_cycles("e", 3), identity_permutation(3));
  EXPECT_EQ(parse_cycles("()", 3), identity_permutation(3));
  EXPECT_EQ(format_cycles(parse_cycles("(1 3 2)(4 5)", 5)), "(1 3 2)(4 5)");
  EXPECT_EQ(format_cycles(identity_permutation(2)), "()");
  EXPECT_THROW(parse_cycles("(1 4)", 3), ArgumentError);
  EXPECT_THROW(parse_cycles("(1 1)", 3), ArgumentError);
}

TEST(Permutations, GroupLaws) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation a = identity_permutation(6), b = identity_permutation(6);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    EXPECT_TRUE(is_permutation(compose(a, b)));
    EXPECT_EQ(compose(a, inverse(a)), identity_permutation(6));
    // conjugation preserves cycle type
    EXPECT_EQ(cycle_type(compose(compose(b, a), inverse(b))), cycle_type(a));
    EXPECT_EQ(compose(a, b)[0], a[b[0]]);
  }
  EXPECT_FALSE(is_permutation({0, 0, 1}));
}

TEST(Sunada, EqualSubgroups) {
  PermGroupTriple t{4, {}, perms({"e", "(1 2 3)", "(1 3 2)"}, 4), perms({"e", "(1 2 3)", "(1 3 2)"}, 4)};
  EXPECT_TRUE(sunada_condition(t).holds);
}

TEST(Sunada, FixedPointDecidesInTheSymmetricGroup) {
  PermGroupTriple t{4, {}, perms({"e", "(1 2)"}, 4), perms({"e", "(1 2)(3 4)"}, 4)};
  auto r = sunada_condition(t);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.table.size(), 3u);
}

TEST(Sunada, ConjugacyInsideAProperSubgroup) {
  auto d4 = perms({"(1 2 3 4)", "(1 3)"}, 4);
  PermGroupTriple same{4, d4, perms({"e", "(1 3)"}, 4), perms({"e", "(2 4)"}, 4)};
  EXPECT_TRUE(sunada_condition(same).holds);
  // (1 3) and (1 2)(3 4) are both involutions but not conjugate in D4.
  PermGroupTriple split{4, d4, perms({"e", "(1 3)"}, 4), perms({"e", "(1 2)(3 4)"}, 4)};
  EXPECT_FALSE(sunada_condition(split).holds);
  // In S4 they still differ by cycle type; (1 3) and (2 4) share one.
  PermGroupTriple outside{4, perms({"(1 2 3 4)"}, 4), perms({"e", "(1 3)"}, 4), perms({"e", "(2 4)"}, 4)};
  EXPECT_THROW(sunada_condition(outside), ArgumentError);
}

TEST(Sunada, InputChecks) {
  PermGroupTriple bad{3, {}, {{0, 0, 1}}, {{0, 1, 2}}};
  EXPECT_THROW(sunada_condition(bad), ArgumentError);
  PermGroupTriple sizes{3, {}, perms({"e"}, 3), perms({"e", "(1 2 3)"}, 3)};
  EXPECT_THROW(sunada_condition(sizes), ArgumentError);
}

TEST(FiniteGroup, Constructions) {
  auto c5 = FiniteGroup::cyclic(5);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.exponent(), 5);
  EXPECT_EQ(c5.minimal_generating_set_size(), 1);
  auto e = FiniteGroup::elementary_abelian(3, 3);
  EXPECT_EQ(e.order(), 27);
  EXPECT_EQ(e.exponent(), 3);
  auto h = FiniteGroup::heisenberg_mod_p(3);
  EXPECT_EQ(h.order(), 27);
  EXPECT_EQ(h.exponent(), 3);
  // nonabelian
  bool commutes = true;
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y) commutes = commutes && h.multiply(x, y) == h.multiply(y, x);
  EXPECT_FALSE(commutes);
  // associativity of the table
  for (int x = 0; x < h.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      for (int z = 0; z < h.order(); ++z)
        ASSERT_EQ(h.multiply(h.multiply(x, y), z), h.multiply(x, h.multiply(y, z)));
  EXPECT_THROW(FiniteGroup("bad", {{0, 1}, {0, 0}}), ArgumentError);
}

TEST(FiniteGroup, RegularEmbeddingIsFaithfulAndFixedPointFree) {
  auto h = FiniteGroup::heisenberg_mod_p(3);
  auto emb = h.left_regular_embedding();
  ASSERT_EQ(emb.size(), 27u);
  EXPECT_EQ(emb[0], identity_permutation(27));
  for (std::size_t g = 1; g < emb.size(); ++g)
    for (int x = 0; x < 27; ++x) EXPECT_NE(emb[g][static_cast<std::size_t>(x)], x);
}

TEST(Komatsu, ThreeGroupsOfOrder27) {
  auto r = komatsu_check(FiniteGroup::elementary_abelian(3, 3), FiniteGroup::heisenberg_mod_p(3), 3);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.uniform_cycle_type);
  EXPECT_EQ(r.nontrivial_count_h1, 26u);
  EXPECT_EQ(r.nontrivial_count_h2, 26u);
  EXPECT_EQ(FiniteGroup::elementary_abelian(3, 3).minimal_generating_set_size(), 3);
  EXPECT_EQ(FiniteGroup::heisenberg_mod_p(3).minimal_generating_set_size(), 2);
}

TEST(Komatsu, Preconditions) {
  EXPECT_TRUE(komatsu_check(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3), 3).holds);
  EXPECT_THROW(komatsu_check(FiniteGroup::cyclic(4), FiniteGroup::cyclic(4), 3), ArgumentError);
  EXPECT_THROW(komatsu_check(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3), 4), ArgumentError);
  EXPECT_THROW(komatsu_check(FiniteGroup::cyclic(3), FiniteGroup::elementary_abelian(3, 2), 3), ArgumentError);
}

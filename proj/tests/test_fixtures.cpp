#include <gtest/gtest.h>

#include <array>

#include "c0ideal/fixtures.hpp"
#include "c0ideal/function_algebra.hpp"

using namespace c0ideal;

namespace {

// Componentwise levels (0 < K < B) of I_1..I_9.
constexpr std::array<std::array<int, 2>, 9> bh2_levels{
    {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}}};

bool bh2_leq(std::size_t a, std::size_t b) {
  return bh2_levels[a][0] <= bh2_levels[b][0] && bh2_levels[a][1] <= bh2_levels[b][1];
}

IndexSet idx(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (std::size_t k : one_based) s.insert(k - 1);
  return s;
}

}  // namespace

TEST(Bh2Fixture, Examples) {
  const Fixture f = bh2_fixture();
  EXPECT_EQ(f.name, "bh2");
  EXPECT_FALSE(f.spec.has_value());
  ASSERT_EQ(f.lattice.size(), 9U);
  EXPECT_EQ(f.lattice.bottom(), 0U);
  EXPECT_EQ(f.lattice.top(), 8U);
  EXPECT_EQ(f.lattice.meet(6, 7), 4U);
  EXPECT_EQ(f.lattice.join(3, 5), 8U);
}

TEST(Bh2Fixture, OrderIsComponentwise) {
  const BoundedLattice l = bh2_fixture().lattice;
  for (std::size_t a = 0; a < 9; ++a) {
    for (std::size_t b = 0; b < 9; ++b) EXPECT_EQ(l.leq(a, b), bh2_leq(a, b)) << a << " " << b;
  }
}

TEST(Bh2Fixture, GammaTable) {
  const BoundedLattice l = bh2_fixture().lattice;
  const std::vector<IndexSet> printed{idx({1, 3, 6}),          idx({1, 2, 4}),
                                      idx({1, 2, 3, 5, 6, 8}), idx({1, 2, 3, 4, 6}),
                                      idx({1, 2, 3, 4, 5, 7}), idx({1, 2, 3, 4, 5, 6, 8}),
                                      idx({1, 2, 3, 4, 5, 6, 7}), idx({1, 2, 3, 4, 5, 6, 7, 8})};
  for (Index j = 1; j < 9; ++j) {
    EXPECT_EQ(compute_gamma(l, j), printed[j - 1]) << "j = " << j + 1;
    IndexSet direct;
    for (std::size_t i = 0; i < 9; ++i) {
      if (!bh2_leq(j, i)) direct.insert(i);
    }
    EXPECT_EQ(compute_gamma(l, j), direct);
  }
}

TEST(Bh2Fixture, DistributiveAndSampleFamily) {
  const Fixture f = bh2_fixture();
  EXPECT_FALSE(validate_lattice(f.lattice).has_value());
  EXPECT_TRUE(is_distributive(f.lattice));
  ASSERT_TRUE(f.family.has_value());
  EXPECT_EQ(f.family->space.point_count(), 4U);
  EXPECT_TRUE(is_compatible(f.lattice, *f.family));
  EXPECT_TRUE(is_compatible(f.lattice, *f.family, CompatibilityMode::exhaustive));
  for (Index i = 1; i < 9; ++i) {
    EXPECT_FALSE((*f.family)[i].empty());
    for (Index k = 0; k < i; ++k) EXPECT_NE((*f.family)[i], (*f.family)[k]);
  }
}

TEST(ChainFixture, Examples) {
  const Fixture two = chain_fixture(2);
  ASSERT_TRUE(two.spec.has_value());
  EXPECT_EQ(two.spec->block_dims(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(two.lattice, enumerate_ideals(*two.spec).lattice);
  EXPECT_FALSE(chain_fixture(3).spec.has_value());
  EXPECT_EQ(compute_gamma(chain_fixture(3).lattice, 1), idx({1}));
  EXPECT_THROW(chain_fixture(1), std::invalid_argument);
}

TEST(ChainFixture, UnionOverGammaIsPreviousSet) {
  const BoundedLattice l = chain_fixture(5).lattice;
  for (const ClosedFamily& s : enumerate_compatible_families(l, SpaceModel(3))) {
    for (Index j = 1; j < 5; ++j) EXPECT_EQ(union_over_gamma(l, s, j), s[j - 1]);
  }
}

TEST(BlockFixture, Examples) {
  const Fixture b11 = block_fixture({1, 1});
  EXPECT_EQ(b11.lattice.size(), 4U);
  EXPECT_EQ(b11.lattice.meet(1, 2), 0U);
  EXPECT_EQ(b11.lattice.join(1, 2), 3U);
  const Fixture m2 = block_fixture({2});
  EXPECT_EQ(m2.lattice.size(), 2U);
  EXPECT_TRUE(m2.lattice.leq(0, 1));
  const Fixture b112 = block_fixture({1, 1, 2});
  EXPECT_EQ(b112.lattice.size(), 8U);
  for (Index a = 0; a < 8; ++a) {
    for (Index b = 0; b < 8; ++b) {
      EXPECT_EQ(b112.lattice.meet(a, b), a & b);
      EXPECT_EQ(b112.lattice.join(a, b), a | b);
    }
  }
}

TEST(Fixtures, AllBundledValidate) {
  const auto names = bundled_fixture_names();
  EXPECT_FALSE(names.empty());
  for (const std::string& name : names) {
    const Fixture f = fixture_by_name(name);
    EXPECT_EQ(f.name, name);
    EXPECT_FALSE(validate_lattice(f.lattice).has_value()) << name;
    EXPECT_TRUE(is_distributive(f.lattice)) << name;
    if (f.spec) EXPECT_TRUE(order_isomorphism(enumerate_ideals(*f.spec).lattice, f.lattice).has_value()) << name;
    if (f.family) EXPECT_TRUE(is_compatible(f.lattice, *f.family)) << name;
  }
}

TEST(Fixtures, ByNameErrors) {
  EXPECT_THROW(fixture_by_name("bh3"), std::invalid_argument);
  EXPECT_THROW(fixture_by_name("chain_x"), std::invalid_argument);
  EXPECT_THROW(fixture_by_name("block_"), std::invalid_argument);
  EXPECT_THROW(fixture_by_name("chain_1"), std::invalid_argument);
  EXPECT_EQ(fixture_by_name("chain_4").lattice.size(), 4U);
  EXPECT_EQ(fixture_by_name("block_2_3").spec->dimension(), 13U);
}

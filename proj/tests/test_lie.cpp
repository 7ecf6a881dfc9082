#include <gtest/gtest.h>

#include <random>

#include "c0ideal/lie.hpp"
#include "c0ideal/sampling.hpp"
#include "support/oracles.hpp"

using namespace c0ideal;

namespace {

Vector unit(std::size_t dim, std::size_t k) {
  Vector e(dim);
  e[k] = Scalar(1);
  return e;
}

Vector naive_bracket(const std::vector<std::size_t>& dims, std::size_t points, const Vector& a, const Vector& b) {
  Vector ab = oracle::naive_product(dims, points, a, b);
  const Vector ba = oracle::naive_product(dims, points, b, a);
  for (std::size_t k = 0; k < ab.size(); ++k) ab[k] -= ba[k];
  return ab;
}

// { f : [f, e_k] ∈ target for every unit e_k }, built from naive brackets.
Subspace brute_normalizer(const std::vector<std::size_t>& dims, std::size_t points, const Subspace& target) {
  const std::size_t d = target.ambient_dim();
  const std::vector<Vector> phis = annihilator(target);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Vector> images;
    for (std::size_t m = 0; m < d; ++m) images.push_back(naive_bracket(dims, points, unit(d, m), unit(d, k)));
    for (const Vector& phi : phis) {
      Vector row(d);
      for (std::size_t m = 0; m < d; ++m) row[m] = dot(phi, images[m]);
      rows.push_back(std::move(row));
    }
  }
  return kernel(rows, d);
}

struct Model {
  IdealLattice ideals;
  FunctionAlgebra algebra;
  Model(std::vector<std::size_t> dims, std::size_t points)
      : ideals(enumerate_ideals(AlgebraSpec(std::move(dims)))), algebra(ideals.spec, SpaceModel(points)) {}
  Subspace ideal(const PointwiseIdeal& j) const { return algebra.ideal_subspace(ideals, j); }
};

}  // namespace

TEST(LieCandidate, ChecksAmbientDimension) {
  const Model s({2}, 2);
  EXPECT_NO_THROW(LieCandidate(s.algebra, Subspace::zero(8)));
  EXPECT_THROW(LieCandidate(s.algebra, Subspace::zero(4)), std::invalid_argument);
}

TEST(BracketWithBasis, MatchesNaiveCommutator) {
  std::mt19937 rng(41);
  const std::vector<std::size_t> dims{2, 1, 3};
  const FunctionAlgebra b{AlgebraSpec(dims), SpaceModel(2)};
  for (int trial = 0; trial < 10; ++trial) {
    const Vector v = oracle::random_vector(b.dimension(), rng);
    for (std::size_t k = 0; k < b.dimension(); ++k) {
      EXPECT_EQ(bracket_with_basis(b, v, k), naive_bracket(dims, 2, v, unit(b.dimension(), k)));
    }
  }
}

TEST(LieNormalizer, Examples) {
  const Model m2({2}, 1);
  EXPECT_EQ(lie_normalizer(m2.algebra, Subspace::full(4)), Subspace::full(4));
  const Subspace n0 = lie_normalizer(m2.algebra, Subspace::zero(4));
  EXPECT_EQ(n0.dim(), 1U);
  EXPECT_EQ(n0, m2.algebra.central_functions());

  const Model m2x2({2}, 2);
  // Vanishes on {0}, anything at 1: stalks (bottom, top).
  const Subspace j = m2x2.ideal(PointwiseIdeal{{0, 1}});
  EXPECT_EQ(j.dim(), 4U);
  const Subspace n = lie_normalizer(m2x2.algebra, j);
  EXPECT_EQ(n.dim(), 5U);
  EXPECT_EQ(intersect(j, m2x2.algebra.central_functions()).dim(), 1U);
}

TEST(LieNormalizer, MatchesBruteForce) {
  std::mt19937 rng(42);
  for (const auto& [dims, points] :
       std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{{{2}, 2}, {{2, 1}, 1}, {{3}, 1}}) {
    const FunctionAlgebra b{AlgebraSpec(dims), SpaceModel(points)};
    for (int trial = 0; trial < 8; ++trial) {
      const Subspace target = oracle::random_span(b.dimension(), 1 + rng() % 5, rng);
      EXPECT_EQ(lie_normalizer(b, target), brute_normalizer(dims, points, target));
    }
  }
}

TEST(NormalizerDecomposition, Examples) {
  const Model m2x2({2}, 2);
  const auto all = enumerate_all_ideals(m2x2.ideals, SpaceModel(2));
  ASSERT_EQ(all.size(), 4U);
  for (const PointwiseIdeal& j : all) {
    EXPECT_EQ(normalizer_decomposition_check(m2x2.ideals, SpaceModel(2), j).status, CheckStatus::passed);
  }
  const Model m2({2}, 1);
  const auto r = normalizer_decomposition_check(m2.ideals, SpaceModel(1), PointwiseIdeal{{0}});
  EXPECT_EQ(r.status, CheckStatus::passed);
  EXPECT_EQ(r.check.normalizer_dim, 1U);
  const Model m3({3}, 1);
  EXPECT_EQ(normalizer_decomposition_check(m3.ideals, SpaceModel(1), PointwiseIdeal{{1}}).status,
            CheckStatus::passed);
}

TEST(NormalizerDecomposition, ReportsPrecondition) {
  const Model b11({1, 1}, 1);
  const auto r = normalizer_decomposition_check(b11.ideals, SpaceModel(1), PointwiseIdeal{{0}});
  EXPECT_EQ(r.status, CheckStatus::precondition_violated);
  EXPECT_FALSE(r.message.empty());
}

TEST(CommutatorIdealSpan, Examples) {
  const Model m2({2}, 1);
  EXPECT_TRUE(commutator_ideal_span(m2.algebra, Subspace::zero(4)).is_zero());
  EXPECT_EQ(commutator_ideal_span(m2.algebra, Subspace::full(4)), commutator_span(AlgebraSpec({2})));
  EXPECT_EQ(commutator_ideal_span(m2.algebra, Subspace::full(4)).dim(), 3U);
  const Model b11({1, 1}, 3);
  EXPECT_TRUE(commutator_ideal_span(b11.algebra, Subspace::full(6)).is_zero());
}

TEST(IsLieIdeal, Examples) {
  const Model m2({2}, 1);
  EXPECT_TRUE(is_lie_ideal(m2.algebra, Subspace::zero(4)));
  EXPECT_TRUE(is_lie_ideal(LieCandidate(m2.algebra, commutator_span(AlgebraSpec({2})))));
  std::vector<Vector> e12{unit(4, 1)};
  const Subspace l = rref(e12, 4);
  EXPECT_FALSE(is_lie_ideal(m2.algebra, l));
  // The witness: [e21, e12] = e22 - e11 is not a multiple of e12.
  EXPECT_FALSE(l.contains(naive_bracket({2}, 1, unit(4, 2), unit(4, 1))));
}

TEST(SandwichWitness, Examples) {
  const Model m2({2}, 1);
  const auto top = sandwich_witness(m2.ideals, LieCandidate(m2.algebra, m2.algebra.commutator_span()));
  ASSERT_TRUE(top.has_value());
  EXPECT_EQ(*top, (PointwiseIdeal{{1}}));
  const auto zero = sandwich_witness(m2.ideals, LieCandidate(m2.algebra, m2.algebra.central_functions()));
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(*zero, (PointwiseIdeal{{0}}));
  std::vector<Vector> e12{unit(4, 1)};
  EXPECT_FALSE(sandwich_witness(m2.ideals, LieCandidate(m2.algebra, rref(e12, 4))).has_value());
}

TEST(CheckCqp, Examples) {
  for (std::size_t points = 0; points <= 2; ++points) {
    const Model m2({2}, points);
    EXPECT_TRUE(check_cqp(m2.ideals, SpaceModel(points)).holds);
    const Model m23({2, 3}, points);
    const CqpReport r = check_cqp(m23.ideals, SpaceModel(points));
    EXPECT_TRUE(r.holds);
    std::size_t expected = 1;
    for (std::size_t x = 0; x < points; ++x) expected *= 4;
    EXPECT_EQ(r.per_ideal.size(), expected);
  }
  const Model b11({1, 1}, 2);
  const CqpReport r = check_cqp(b11.ideals, SpaceModel(2));
  EXPECT_TRUE(r.holds);
  for (const NormalizerCheck& c : r.per_ideal) EXPECT_EQ(c.normalizer_dim, 4U);
}

TEST(WeakCentrality, Examples) {
  EXPECT_TRUE(weak_centrality(enumerate_ideals(AlgebraSpec({2})), SpaceModel(1)));
  EXPECT_TRUE(weak_centrality(enumerate_ideals(AlgebraSpec({1, 1})), SpaceModel(1)));
  EXPECT_TRUE(weak_centrality(enumerate_ideals(AlgebraSpec({2, 2})), SpaceModel(2)));
  EXPECT_EQ(maximal_ideals(enumerate_ideals(AlgebraSpec({2, 2})).lattice, SpaceModel(2)).size(), 4U);
  EXPECT_EQ(maximal_ideals(enumerate_ideals(AlgebraSpec({2})).lattice, SpaceModel(1)).size(), 1U);
}

TEST(CqpTransfer, Examples) {
  const CqpTransferReport m2 = cqp_transfer_check(AlgebraSpec({2}), SpaceModel(2));
  EXPECT_FALSE(m2.skipped);
  EXPECT_TRUE(m2.cqp_function_algebra);
  EXPECT_TRUE(m2.cqp_base);
  EXPECT_TRUE(all_passed(m2.checks));
  const CqpTransferReport mixed = cqp_transfer_check(AlgebraSpec({1, 1, 2}), SpaceModel(1));
  EXPECT_TRUE(all_passed(mixed.checks));
  EXPECT_EQ(mixed.checks.size(), 4U);
  EXPECT_TRUE(cqp_transfer_check(AlgebraSpec({2}), SpaceModel(0)).skipped);
}

TEST(LieProperty, NormalizerIsSubalgebraAndPointwise) {
  for (const auto& [dims, points] :
       std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{{{2}, 2}, {{1, 2}, 2}, {{2, 2}, 1}}) {
    const Model s(dims, points);
    const SpaceModel x(points);
    const FunctionAlgebra single(s.ideals.spec, SpaceModel(1));
    for (const PointwiseIdeal& j : enumerate_all_ideals(s.ideals, x)) {
      const Subspace n = lie_normalizer(s.algebra, s.ideal(j));
      for (const Vector& a : n.basis()) {
        for (const Vector& b : n.basis()) EXPECT_TRUE(n.contains(oracle::naive_product(dims, points, a, b)));
      }
      std::vector<Subspace> per_point;
      for (Index stalk : j.stalks) {
        per_point.push_back(lie_normalizer(single, s.ideals.ideals[stalk].subspace()));
      }
      EXPECT_EQ(n, s.algebra.assemble(per_point));
    }
  }
}

TEST(LieProperty, TracesAndCommutatorIntersection) {
  for (const auto& [dims, points] :
       std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{{{2}, 2}, {{1, 2}, 2}, {{3}, 1}, {{1, 1}, 3}}) {
    const Model s(dims, points);
    const Subspace brackets = s.algebra.commutator_span();
    const Subspace all_brackets = commutator_ideal_span(s.algebra, Subspace::full(s.algebra.dimension()));
    EXPECT_EQ(all_brackets, brackets);
    for (const LinearFunctional& f : s.algebra.tracial_state_basis()) {
      for (const Vector& v : all_brackets.basis()) {
        EXPECT_TRUE(f(v).is_zero());
      }
    }
    for (const PointwiseIdeal& j : enumerate_all_ideals(s.ideals, SpaceModel(points))) {
      const Subspace js = s.ideal(j);
      EXPECT_EQ(commutator_ideal_span(s.algebra, js), intersect(js, brackets));
    }
  }
}

TEST(LieProperty, SandwichSoundnessOnIdealDerivedSubspaces) {
  const Model s({2, 1}, 2);
  const SandwichSearch search(s.ideals, SpaceModel(2));
  const Subspace z = s.algebra.central_functions();
  for (std::size_t k = 0; k < search.ideals().size(); ++k) {
    // J, J + Z(B), [J,B] and N(J) are all Lie ideals with a witness.
    for (const Subspace& l : {search.ideal_space(k), sum(search.ideal_space(k), z), search.lower(k), search.upper(k)}) {
      EXPECT_TRUE(is_lie_ideal(s.algebra, l));
      EXPECT_TRUE(search.witness_index(l).has_value());
    }
  }
}

TEST(LieProperty, SandwichSoundnessOnRandomSubspaces) {
  std::mt19937 rng(43);
  const Model s({2}, 2);
  const SandwichSearch search(s.ideals, SpaceModel(2));
  for (std::size_t k = 0; k < search.ideals().size(); ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      const Subspace l = random_subspace_between(search.lower(k), search.upper(k), rng);
      EXPECT_TRUE(is_lie_ideal(s.algebra, l));
      EXPECT_TRUE(search.witness_index(l).has_value());
    }
  }
  std::size_t outside = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace l = random_sparse_subspace(s.algebra.dimension(), rng);
    const auto w = search.witness_index(l);
    EXPECT_EQ(is_lie_ideal(s.algebra, l), w.has_value());
    if (!w) ++outside;
  }
  EXPECT_GT(outside, 0U);
}

TEST(LieProperty, TracelessSubspaceIsNotIdealPlusCentre) {
  // In M_n the trace-zero matrices form a Lie ideal that is not J + Z(A) for
  // any ideal J: finite-dimensional algebras have tracial states.
  const Model m3({3}, 1);
  const Subspace sl = commutator_span(AlgebraSpec({3}));
  EXPECT_TRUE(is_lie_ideal(m3.algebra, sl));
  for (const BlockIdeal& j : m3.ideals.ideals) EXPECT_NE(sum(j.subspace(), centre(AlgebraSpec({3}))), sl);
}

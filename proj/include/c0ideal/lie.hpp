#pragma once

// Lie structure of B = A^X: normalizers N(S) = { f : [f, B] ⊆ S }, commutator
// ideals [J, B], Lie ideals, and the centre-quotient property.

#include <optional>
#include <vector>

#include "c0ideal/fdalgebra.hpp"
#include "c0ideal/function_algebra.hpp"
#include "c0ideal/linalg.hpp"
#include "c0ideal/report.hpp"

namespace c0ideal {

/// A subspace of B proposed as a Lie ideal.
struct LieCandidate {
  LieCandidate(FunctionAlgebra ambient, Subspace space);

  FunctionAlgebra ambient;
  Subspace space;
};

/// [v, e_k] for the k-th coordinate unit e_k, computed from the matrix-unit
/// structure constants.
Vector bracket_with_basis(const FunctionAlgebra& algebra, const Vector& v, std::size_t k);

/// Solution space of the linear system [f, e_k] ∈ target for every basis e_k.
Subspace lie_normalizer(const FunctionAlgebra& algebra, const Subspace& target);

/// span{ [j, e_k] : j in a basis of `ideal`, e_k in the basis of B }.
Subspace commutator_ideal_span(const FunctionAlgebra& algebra, const Subspace& ideal);

/// [B, L] ⊆ L, checked on basis pairs.
bool is_lie_ideal(const FunctionAlgebra& algebra, const Subspace& space);
inline bool is_lie_ideal(const LieCandidate& candidate) {
  return is_lie_ideal(candidate.ambient, candidate.space);
}

/// For every ideal J of B, in canonical (lexicographic stalk) order, the
/// bounds [J, B] and N(J) of the sandwich [J, B] ⊆ L ⊆ N(J).
class SandwichSearch {
 public:
  SandwichSearch(const IdealLattice& ideals, SpaceModel space,
                 std::size_t bound = default_ideal_bound);

  const FunctionAlgebra& algebra() const { return algebra_; }
  const std::vector<PointwiseIdeal>& ideals() const { return ideals_; }
  const Subspace& ideal_space(std::size_t k) const { return spaces_[k]; }
  const Subspace& lower(std::size_t k) const { return lower_[k]; }
  const Subspace& upper(std::size_t k) const { return upper_[k]; }

  /// Index (into ideals()) of the first J with [J, B] ⊆ L ⊆ N(J).
  std::optional<std::size_t> witness_index(const Subspace& space) const;
  std::optional<PointwiseIdeal> witness(const Subspace& space) const;

 private:
  FunctionAlgebra algebra_;
  std::vector<PointwiseIdeal> ideals_;
  std::vector<Subspace> spaces_;
  std::vector<Subspace> lower_;
  std::vector<Subspace> upper_;
};

std::optional<PointwiseIdeal> sandwich_witness(const IdealLattice& ideals, const LieCandidate& candidate);

struct NormalizerCheck {
  PointwiseIdeal ideal;
  std::size_t ideal_dim = 0;
  std::size_t normalizer_dim = 0;
  std::size_t expected_dim = 0;  // dim(J + Z(B))
  bool passed = false;
};

struct CqpReport {
  bool holds = true;
  std::vector<NormalizerCheck> per_ideal;
};

/// N(J) = J + Z(B) for every ideal J of B = A^X.
CqpReport check_cqp(const IdealLattice& ideals, SpaceModel space);

/// The map M ↦ M ∩ Z(B) is injective on the maximal ideals of B.
bool weak_centrality(const IdealLattice& ideals, SpaceModel space);

/// Maximal proper ideals of B, in canonical order.
std::vector<PointwiseIdeal> maximal_ideals(const BoundedLattice& lattice, SpaceModel space);

enum class CheckStatus { passed, failed, precondition_violated };

struct NormalizerDecompositionReport {
  CheckStatus status = CheckStatus::precondition_violated;
  NormalizerCheck check;
  std::string message;
};

/// N(J) = J + (C1)-valued functions; requires A to have exactly one block.
NormalizerDecompositionReport normalizer_decomposition_check(const IdealLattice& ideals,
                                                             SpaceModel space,
                                                             const PointwiseIdeal& ideal);

struct CqpTransferReport {
  bool skipped = false;  // |X| = 0: B is the zero algebra
  bool cqp_function_algebra = false;
  bool cqp_base = false;
  bool weak_centrality_function_algebra = false;
  bool weak_centrality_base = false;
  /// forward (CQP(A^X) ⟹ CQP(A)), converse (A unital), and the two
  /// weak-centrality ⟺ CQP equivalences.
  std::vector<IdentityCheck> checks;
};

CqpTransferReport cqp_transfer_check(const AlgebraSpec& spec, SpaceModel space);

}  // namespace c0ideal

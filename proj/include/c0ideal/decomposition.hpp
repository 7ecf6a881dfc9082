#pragma once

// Every ideal J(S) of C_0(X) ⊗min A, A with finitely many ideals, is the sum
// over non-bottom j of the product ideals J(Y_j) ⊗ I_j, where Y_j is the union
// of S_k over k ∈ γ_j.

#include <optional>
#include <string>
#include <vector>

#include "c0ideal/fdalgebra.hpp"
#include "c0ideal/function_algebra.hpp"
#include "c0ideal/lattice.hpp"
#include "c0ideal/report.hpp"

namespace c0ideal {

/// J(vanish_on) ⊗ I_ideal.
struct ProductTerm {
  PointSet vanish_on;
  Index ideal;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

struct Decomposition {
  SpaceModel space{0};
  std::vector<ProductTerm> terms;  // one per non-bottom index, ascending
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws std::invalid_argument if the family is not compatible.
Decomposition decompose(const BoundedLattice& lattice, const ClosedFamily& family);

/// Drops terms with vanish_on = X (they are the zero ideal). Presentation only.
Decomposition minimal_terms(const Decomposition& d);

/// stalk(x) = join of I_j over terms with x ∉ Y_j; bottom if there are none.
PointwiseIdeal evaluate(const BoundedLattice& lattice, const Decomposition& d);

/// The same sum computed on subspaces of A^X.
Subspace evaluate_subspace(const IdealLattice& ideals, const Decomposition& d);

/// α_i = { j : not (j <= i) }; checks ∩_{r ∈ α_i} Y_r = S_i. An empty α_i
/// (i = top) makes the intersection X.
bool union_reduction_holds(const BoundedLattice& lattice, const ClosedFamily& family, Index i);

/// Checks for one compatible family, in fixed order:
///   evaluate-equals-theta, recover-roundtrip, union-reduction, and with
///   concrete ideals also subspace-sum-equals-theta.
std::vector<IdentityCheck> verify_theorem(const BoundedLattice& lattice, const ClosedFamily& family,
                                          const IdealLattice* concrete = nullptr);

/// "PASS|FAIL <fixture> <family-id> <identity-name>".
std::string format_check_line(const std::string& fixture, std::size_t family_id,
                              const IdentityCheck& check);

}  // namespace c0ideal

#pragma once

// B = A^X for a finite discrete X: the finite model of C_0(X, A) (and, through
// f ⊗ a ↦ a f, of C_0(X) ⊗min A). Coordinates are point-major: the block of
// dim(A) coordinates for point 0 comes first.

#include <cstddef>
#include <compare>
#include <optional>
#include <vector>

#include "c0ideal/fdalgebra.hpp"
#include "c0ideal/lattice.hpp"
#include "c0ideal/linalg.hpp"

namespace c0ideal {

/// An ideal of A^X as its stalks: point x carries the ideal with lattice
/// index stalks[x].
struct PointwiseIdeal {
  std::vector<Index> stalks;

  std::size_t point_count() const { return stalks.size(); }
  friend bool operator==(const PointwiseIdeal&, const PointwiseIdeal&) = default;
  friend auto operator<=>(const PointwiseIdeal&, const PointwiseIdeal&) = default;
};

/// Stalk-wise inclusion.
bool is_contained(const BoundedLattice& lattice, const PointwiseIdeal& a, const PointwiseIdeal& b);

class FunctionAlgebra {
 public:
  FunctionAlgebra(AlgebraSpec spec, SpaceModel space);

  const AlgebraSpec& spec() const { return spec_; }
  SpaceModel space() const { return space_; }
  std::size_t dimension() const { return space_.point_count() * spec_.dimension(); }
  std::size_t offset(std::size_t point) const { return point * spec_.dimension(); }

  Vector multiply(const Vector& f, const Vector& g) const;
  Vector commutator(const Vector& f, const Vector& g) const;

  /// Coordinate unit vectors (matrix unit e_pq of block b at point x).
  std::vector<Vector> basis() const;

  /// ⊕_x Z(A): the centre of B, i.e. the Z(A)-valued functions.
  Subspace central_functions() const;
  /// ⊕_x [A, A].
  Subspace commutator_span() const;

  /// The subspace { f : f(x) ∈ per_point[x] for every x }.
  Subspace assemble(const std::vector<Subspace>& per_point) const;
  Subspace ideal_subspace(const IdealLattice& ideals, const PointwiseIdeal& ideal) const;

  /// Normalized block traces evaluated at each point.
  std::vector<LinearFunctional> tracial_state_basis() const;

 private:
  AlgebraSpec spec_;
  SpaceModel space_;
};

bool is_two_sided_ideal(const FunctionAlgebra& algebra, const Subspace& space);

/// f ∈ A^X stored as its values.
class FunctionElement {
 public:
  FunctionElement(AlgebraSpec spec, std::vector<Element> values);

  /// a′: the constant function x ↦ a.
  static FunctionElement constant(const Element& a, SpaceModel space);
  /// ĝ: x ↦ g(x)·1.
  static FunctionElement scalar_function(const AlgebraSpec& spec, const std::vector<Scalar>& g);
  static FunctionElement from_coordinates(const FunctionAlgebra& algebra, const Vector& coords);

  const AlgebraSpec& spec() const { return spec_; }
  const std::vector<Element>& values() const { return values_; }
  const Element& operator()(std::size_t x) const { return values_[x]; }
  Vector coordinates() const;

  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;

 private:
  AlgebraSpec spec_;
  std::vector<Element> values_;
};

FunctionElement multiply(const FunctionElement& f, const FunctionElement& g);

/// θ(S): stalk(x) = meet of { i : x ∈ S_i }. Throws std::invalid_argument if
/// S is not compatible.
PointwiseIdeal theta(const BoundedLattice& lattice, const ClosedFamily& family);

/// S_i = { x : stalk(x) <= i }.
ClosedFamily recover_S(const BoundedLattice& lattice, const PointwiseIdeal& ideal);

inline constexpr std::size_t default_ideal_bound = 4096;

/// Every stalk assignment X -> lattice, lexicographic with point 0 most
/// significant. Throws std::length_error when size^|X| exceeds `bound`.
std::vector<PointwiseIdeal> enumerate_all_ideals(const BoundedLattice& lattice, SpaceModel space,
                                                 std::size_t bound = default_ideal_bound);

/// As above, additionally checking that each assignment is a two-sided ideal
/// of A^X as a subspace (std::logic_error otherwise).
std::vector<PointwiseIdeal> enumerate_all_ideals(const IdealLattice& ideals, SpaceModel space,
                                                 std::size_t bound = default_ideal_bound);

/// Per-point subspaces: 0 on Y and C off Y (the image of J(Y) ⊗ C).
struct PointwiseSubspaces {
  std::vector<Subspace> values;
  friend bool operator==(const PointwiseSubspaces&, const PointwiseSubspaces&) = default;
};

PointwiseSubspaces product_subspace(SpaceModel space, PointSet vanish_on, const Subspace& values);

/// Pointwise sum of two families.
PointwiseSubspaces pointwise_sum(const PointwiseSubspaces& a, const PointwiseSubspaces& b);

struct IdealFromYResult {
  PointwiseIdeal ideal;  // I_t on Y, top off Y
  /// Stalk-wise join of C_0(X)⊗I_t (t everywhere) and J(Y)⊗A (bottom on Y,
  /// top off Y) equals `ideal`.
  bool lattice_sum_matches = false;
  /// Subspace version of the same equality; set when concrete ideals are known.
  std::optional<bool> subspace_sum_matches;
};

IdealFromYResult ideal_from_Y_and_I(const BoundedLattice& lattice, SpaceModel space, PointSet y,
                                    Index t);
IdealFromYResult ideal_from_Y_and_I(const IdealLattice& ideals, SpaceModel space, PointSet y,
                                    Index t);

}  // namespace c0ideal

#pragma once

// Finite-dimensional block algebras A = M_{n_1} ⊕ ... ⊕ M_{n_k} over Q(i).
//
// Coordinates: matrix units e_pq of block b, blocks in order, each block
// row-major. An Element is a coordinate vector together with its spec.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "c0ideal/lattice.hpp"
#include "c0ideal/linalg.hpp"

namespace c0ideal {

class AlgebraSpec {
 public:
  /// Throws std::invalid_argument for an empty list or a non-positive size.
  explicit AlgebraSpec(std::vector<std::size_t> block_dims);

  const std::vector<std::size_t>& block_dims() const { return dims_; }
  std::size_t block_count() const { return dims_.size(); }
  std::size_t block_size(std::size_t b) const { return dims_[b]; }
  /// Σ n_b².
  std::size_t dimension() const { return dimension_; }
  std::size_t block_offset(std::size_t b) const { return offsets_[b]; }
  std::size_t coordinate(std::size_t b, std::size_t p, std::size_t q) const {
    return offsets_[b] + p * dims_[b] + q;
  }

  /// Blockwise product of two coordinate vectors.
  Vector multiply(const Vector& x, const Vector& y) const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
};

class Element {
 public:
  explicit Element(AlgebraSpec spec);
  Element(AlgebraSpec spec, Vector coordinates);

  static Element identity(const AlgebraSpec& spec);
  static Element block_identity(const AlgebraSpec& spec, std::size_t b);
  static Element matrix_unit(const AlgebraSpec& spec, std::size_t b, std::size_t p, std::size_t q);

  const AlgebraSpec& spec() const { return spec_; }
  const Vector& coordinates() const { return coords_; }
  const Scalar& at(std::size_t b, std::size_t p, std::size_t q) const {
    return coords_[spec_.coordinate(b, p, q)];
  }
  Scalar& at(std::size_t b, std::size_t p, std::size_t q) { return coords_[spec_.coordinate(b, p, q)]; }

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  AlgebraSpec spec_;
  Vector coords_;
};

/// Throws std::invalid_argument when the specs differ.
Element multiply(const Element& x, const Element& y);
Element commutator(const Element& x, const Element& y);

std::vector<Element> standard_basis(const AlgebraSpec& spec);

/// Span of the block identities.
Subspace centre(const AlgebraSpec& spec);

/// Span of [e, f] over all pairs of basis elements.
Subspace commutator_span(const AlgebraSpec& spec);

/// ⊕_{b in blocks} M_{n_b}; bit b of `blocks` selects block b.
struct BlockIdeal {
  AlgebraSpec spec;
  std::uint64_t blocks = 0;

  Subspace subspace() const;
  friend bool operator==(const BlockIdeal&, const BlockIdeal&) = default;
};

/// a·v and v·a stay in `space` for every basis element a and basis vector v.
bool is_two_sided_ideal(const AlgebraSpec& spec, const Subspace& space);

/// The ideal lattice of A together with its concrete ideals. Index m of the
/// lattice is the block subset with bitmask m, so bottom = 0 and top = 2^k - 1.
struct IdealLattice {
  AlgebraSpec spec;
  BoundedLattice lattice;
  std::vector<BlockIdeal> ideals;
};

inline constexpr std::size_t default_block_bound = 6;

/// Throws std::length_error when the block count exceeds `max_blocks`, and
/// std::logic_error if a candidate fails the two-sided invariance check.
IdealLattice enumerate_ideals(const AlgebraSpec& spec, std::size_t max_blocks = default_block_bound);

/// The same lattice indexed by `lattice` through an order isomorphism onto the
/// block lattice. Throws std::invalid_argument if none exists.
IdealLattice reindex_ideals(const IdealLattice& ideals, const BoundedLattice& lattice);

struct LinearFunctional {
  Vector coefficients;
  Scalar operator()(const Vector& v) const { return dot(coefficients, v); }
};

/// Normalized trace of each block: tr_b(x) / n_b.
std::vector<LinearFunctional> tracial_state_basis(const AlgebraSpec& spec);

}  // namespace c0ideal

#include "c0ideal/fdalgebra.hpp"

#include <stdexcept>
#include <string>

namespace c0ideal {

namespace {

void require_same_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a == b)) throw std::invalid_argument("elements belong to different algebras");
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::vector<std::size_t> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) throw std::invalid_argument("algebra needs at least one block");
  for (std::size_t n : dims_) {
    if (n == 0) throw std::invalid_argument("block sizes must be positive");
    offsets_.push_back(dimension_);
    dimension_ += n * n;
  }
}

Vector AlgebraSpec::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw std::invalid_argument("multiply: coordinate vector has wrong length");
  }
  Vector out(dimension_);
  for (std::size_t b = 0; b < dims_.size(); ++b) {
    const std::size_t n = dims_[b];
    const std::size_t off = offsets_[b];
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& left = x[off + p * n + r];
        if (left.is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& right = y[off + r * n + q];
          if (!right.is_zero()) out[off + p * n + q] += left * right;
        }
      }
    }
  }
  return out;
}

Element::Element(AlgebraSpec spec) : spec_(std::move(spec)), coords_(spec_.dimension()) {}

Element::Element(AlgebraSpec spec, Vector coordinates)
    : spec_(std::move(spec)), coords_(std::move(coordinates)) {
  if (coords_.size() != spec_.dimension()) {
    throw std::invalid_argument("element has " + std::to_string(coords_.size()) +
                                " coordinates, algebra dimension is " +
                                std::to_string(spec_.dimension()));
  }
}

Element Element::identity(const AlgebraSpec& spec) {
  Element e(spec);
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    for (std::size_t p = 0; p < spec.block_size(b); ++p) e.at(b, p, p) = 1;
  }
  return e;
}

Element Element::block_identity(const AlgebraSpec& spec, std::size_t b) {
  Element e(spec);
  for (std::size_t p = 0; p < spec.block_size(b); ++p) e.at(b, p, p) = 1;
  return e;
}

Element Element::matrix_unit(const AlgebraSpec& spec, std::size_t b, std::size_t p, std::size_t q) {
  Element e(spec);
  e.at(b, p, q) = 1;
  return e;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_spec(spec_, rhs.spec_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_spec(spec_, rhs.spec_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (Scalar& c : coords_) c *= s;
  return *this;
}

Element multiply(const Element& x, const Element& y) {
  require_same_spec(x.spec(), y.spec());
  return Element(x.spec(), x.spec().multiply(x.coordinates(), y.coordinates()));
}

Element commutator(const Element& x, const Element& y) { return multiply(x, y) - multiply(y, x); }

std::vector<Element> standard_basis(const AlgebraSpec& spec) {
  std::vector<Element> basis;
  basis.reserve(spec.dimension());
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    for (std::size_t p = 0; p < spec.block_size(b); ++p) {
      for (std::size_t q = 0; q < spec.block_size(b); ++q) {
        basis.push_back(Element::matrix_unit(spec, b, p, q));
      }
    }
  }
  return basis;
}

Subspace centre(const AlgebraSpec& spec) {
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    rows.push_back(Element::block_identity(spec, b).coordinates());
  }
  return rref(rows, spec.dimension());
}

Subspace commutator_span(const AlgebraSpec& spec) {
  const std::vector<Element> basis = standard_basis(spec);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Element c = commutator(basis[i], basis[j]);
      if (!is_zero(c.coordinates())) rows.push_back(c.coordinates());
    }
  }
  return rref(rows, spec.dimension());
}

Subspace BlockIdeal::subspace() const {
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    if (((blocks >> b) & 1U) == 0) continue;
    const std::size_t n = spec.block_size(b);
    for (std::size_t k = 0; k < n * n; ++k) {
      Vector v(spec.dimension());
      v[spec.block_offset(b) + k] = 1;
      rows.push_back(std::move(v));
    }
  }
  return rref(rows, spec.dimension());
}

bool is_two_sided_ideal(const AlgebraSpec& spec, const Subspace& space) {
  for (const Element& a : standard_basis(spec)) {
    for (const Vector& v : space.basis()) {
      if (!space.contains(spec.multiply(a.coordinates(), v))) return false;
      if (!space.contains(spec.multiply(v, a.coordinates()))) return false;
    }
  }
  return true;
}

IdealLattice enumerate_ideals(const AlgebraSpec& spec, std::size_t max_blocks) {
  const std::size_t k = spec.block_count();
  if (k > max_blocks) {
    throw std::length_error("ideal enumeration limited to " + std::to_string(max_blocks) +
                            " blocks, got " + std::to_string(k));
  }
  const std::size_t n = std::size_t{1} << k;
  BoundedLattice::Table meet(n, std::vector<Index>(n));
  BoundedLattice::Table join(n, std::vector<Index>(n));
  std::vector<BlockIdeal> ideals;
  ideals.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      meet[m][m2] = m & m2;
      join[m][m2] = m | m2;
    }
    BlockIdeal ideal{spec, m};
    if (!is_two_sided_ideal(spec, ideal.subspace())) {
      throw std::logic_error("block subset " + std::to_string(m) + " is not a two-sided ideal");
    }
    ideals.push_back(std::move(ideal));
  }
  return IdealLattice{spec, BoundedLattice(std::move(meet), std::move(join), 0, n - 1),
                      std::move(ideals)};
}

IdealLattice reindex_ideals(const IdealLattice& ideals, const BoundedLattice& lattice) {
  const auto iso = order_isomorphism(lattice, ideals.lattice);
  if (!iso) {
    throw std::invalid_argument("lattice is not order-isomorphic to the ideal lattice of the blocks");
  }
  std::vector<BlockIdeal> reordered;
  reordered.reserve(lattice.size());
  for (Index i = 0; i < lattice.size(); ++i) reordered.push_back(ideals.ideals[(*iso)[i]]);
  return IdealLattice{ideals.spec, lattice, std::move(reordered)};
}

std::vector<LinearFunctional> tracial_state_basis(const AlgebraSpec& spec) {
  std::vector<LinearFunctional> out;
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    const std::size_t n = spec.block_size(b);
    Vector coeffs(spec.dimension());
    for (std::size_t p = 0; p < n; ++p) {
      coeffs[spec.coordinate(b, p, p)] = Scalar(Rational(1) / static_cast<long>(n));
    }
    out.push_back(LinearFunctional{std::move(coeffs)});
  }
  return out;
}

}  // namespace c0ideal

#include "c0ideal/lie.hpp"

#include <stdexcept>
#include <string>

namespace c0ideal {

namespace {

// Coordinate k of B as the matrix unit e_{row,col} in block `block` at a point.
struct UnitCoordinate {
  std::size_t base = 0;  // coordinate of e_00 in this block at this point
  std::size_t n = 0;     // block size
  std::size_t row = 0;
  std::size_t col = 0;
};

UnitCoordinate decode(const FunctionAlgebra& algebra, std::size_t k) {
  const AlgebraSpec& spec = algebra.spec();
  const std::size_t d = spec.dimension();
  const std::size_t point = k / d;
  const std::size_t r = k % d;
  std::size_t b = spec.block_count() - 1;
  while (spec.block_offset(b) > r) --b;
  const std::size_t n = spec.block_size(b);
  const std::size_t local = r - spec.block_offset(b);
  return UnitCoordinate{point * d + spec.block_offset(b), n, local / n, local % n};
}

}  // namespace

LieCandidate::LieCandidate(FunctionAlgebra ambient_algebra, Subspace subspace)
    : ambient(std::move(ambient_algebra)), space(std::move(subspace)) {
  if (space.ambient_dim() != ambient.dimension()) {
    throw std::invalid_argument("candidate subspace has ambient dimension " +
                                std::to_string(space.ambient_dim()) + ", algebra has dimension " +
                                std::to_string(ambient.dimension()));
  }
}

Vector bracket_with_basis(const FunctionAlgebra& algebra, const Vector& v, std::size_t k) {
  if (v.size() != algebra.dimension()) throw std::invalid_argument("bracket: wrong vector length");
  // [v, e_rs] = v e_rs - e_rs v: column s receives column r of v, row r loses row s of v.
  const UnitCoordinate u = decode(algebra, k);
  Vector out(algebra.dimension());
  for (std::size_t p = 0; p < u.n; ++p) {
    const Scalar& vpr = v[u.base + p * u.n + u.row];
    if (!vpr.is_zero()) out[u.base + p * u.n + u.col] += vpr;
  }
  for (std::size_t q = 0; q < u.n; ++q) {
    const Scalar& vsq = v[u.base + u.col * u.n + q];
    if (!vsq.is_zero()) out[u.base + u.row * u.n + q] -= vsq;
  }
  return out;
}

Subspace lie_normalizer(const FunctionAlgebra& algebra, const Subspace& target) {
  const std::size_t d = algebra.dimension();
  if (target.ambient_dim() != d) throw std::invalid_argument("normalizer: target in wrong ambient space");
  const std::vector<Vector> functionals = annihilator(target);
  // Row (k, phi): coefficient of f_m in phi([f, e_k]) = sum_m f_m phi([e_m, e_k]).
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < d; ++k) {
    const UnitCoordinate u = decode(algebra, k);
    for (const Vector& phi : functionals) {
      Vector row(d);
      bool nonzero = false;
      for (std::size_t p = 0; p < u.n; ++p) {
        const Scalar& c = phi[u.base + p * u.n + u.col];
        if (c.is_zero()) continue;
        row[u.base + p * u.n + u.row] += c;
        nonzero = true;
      }
      for (std::size_t q = 0; q < u.n; ++q) {
        const Scalar& c = phi[u.base + u.row * u.n + q];
        if (c.is_zero()) continue;
        row[u.base + u.col * u.n + q] -= c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return kernel(rows, d);
}

Subspace commutator_ideal_span(const FunctionAlgebra& algebra, const Subspace& ideal) {
  std::vector<Vector> rows;
  for (const Vector& j : ideal.basis()) {
    for (std::size_t k = 0; k < algebra.dimension(); ++k) {
      Vector c = bracket_with_basis(algebra, j, k);
      if (!is_zero(c)) rows.push_back(std::move(c));
    }
  }
  return rref(rows, algebra.dimension());
}

bool is_lie_ideal(const FunctionAlgebra& algebra, const Subspace& space) {
  if (space.ambient_dim() != algebra.dimension()) throw std::invalid_argument("subspace in wrong ambient space");
  for (const Vector& l : space.basis()) {
    for (std::size_t k = 0; k < algebra.dimension(); ++k) {
      if (!space.contains(bracket_with_basis(algebra, l, k))) return false;
    }
  }
  return true;
}

SandwichSearch::SandwichSearch(const IdealLattice& ideals, SpaceModel space, std::size_t bound)
    : algebra_(ideals.spec, space), ideals_(enumerate_all_ideals(ideals, space, bound)) {
  for (const PointwiseIdeal& j : ideals_) {
    spaces_.push_back(algebra_.ideal_subspace(ideals, j));
    lower_.push_back(commutator_ideal_span(algebra_, spaces_.back()));
    upper_.push_back(lie_normalizer(algebra_, spaces_.back()));
  }
}

std::optional<std::size_t> SandwichSearch::witness_index(const Subspace& space) const {
  for (std::size_t k = 0; k < ideals_.size(); ++k) {
    if (lower_[k].is_subspace_of(space) && space.is_subspace_of(upper_[k])) return k;
  }
  return std::nullopt;
}

std::optional<PointwiseIdeal> SandwichSearch::witness(const Subspace& space) const {
  if (auto k = witness_index(space)) return ideals_[*k];
  return std::nullopt;
}

std::optional<PointwiseIdeal> sandwich_witness(const IdealLattice& ideals, const LieCandidate& candidate) {
  if (!(candidate.ambient.spec() == ideals.spec)) {
    throw std::invalid_argument("candidate and ideal lattice belong to different algebras");
  }
  return SandwichSearch(ideals, candidate.ambient.space()).witness(candidate.space);
}

CqpReport check_cqp(const IdealLattice& ideals, SpaceModel space) {
  const FunctionAlgebra algebra(ideals.spec, space);
  const Subspace centre_b = algebra.central_functions();
  CqpReport report;
  for (const PointwiseIdeal& j : enumerate_all_ideals(ideals, space)) {
    const Subspace js = algebra.ideal_subspace(ideals, j);
    const Subspace normalizer = lie_normalizer(algebra, js);
    const Subspace expected = sum(js, centre_b);
    NormalizerCheck check{j, js.dim(), normalizer.dim(), expected.dim(), normalizer == expected};
    report.holds = report.holds && check.passed;
    report.per_ideal.push_back(std::move(check));
  }
  return report;
}

std::vector<PointwiseIdeal> maximal_ideals(const BoundedLattice& lattice, SpaceModel space) {
  const PointwiseIdeal whole{std::vector<Index>(space.point_count(), lattice.top())};
  std::vector<PointwiseIdeal> proper;
  for (PointwiseIdeal& j : enumerate_all_ideals(lattice, space)) {
    if (j != whole) proper.push_back(std::move(j));
  }
  std::vector<PointwiseIdeal> out;
  for (const PointwiseIdeal& j : proper) {
    bool maximal = true;
    for (const PointwiseIdeal& other : proper) {
      if (other != j && is_contained(lattice, j, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(j);
  }
  return out;
}

bool weak_centrality(const IdealLattice& ideals, SpaceModel space) {
  const FunctionAlgebra algebra(ideals.spec, space);
  const Subspace centre_b = algebra.central_functions();
  std::vector<Subspace> images;
  for (const PointwiseIdeal& m : maximal_ideals(ideals.lattice, space)) {
    Subspace image = intersect(algebra.ideal_subspace(ideals, m), centre_b);
    for (const Subspace& seen : images) {
      if (seen == image) return false;
    }
    images.push_back(std::move(image));
  }
  return true;
}

NormalizerDecompositionReport normalizer_decomposition_check(const IdealLattice& ideals,
                                                             SpaceModel space,
                                                             const PointwiseIdeal& ideal) {
  NormalizerDecompositionReport report;
  report.check.ideal = ideal;
  if (ideals.spec.block_count() != 1) {
    report.status = CheckStatus::precondition_violated;
    report.message = "A has " + std::to_string(ideals.spec.block_count()) +
                     " blocks; the decomposition needs a unique maximal ideal (one block)";
    return report;
  }
  const FunctionAlgebra algebra(ideals.spec, space);
  const Subspace js = algebra.ideal_subspace(ideals, ideal);
  const Subspace normalizer = lie_normalizer(algebra, js);
  const Subspace expected = sum(js, algebra.central_functions());
  report.check = NormalizerCheck{ideal, js.dim(), normalizer.dim(), expected.dim(), normalizer == expected};
  report.status = report.check.passed ? CheckStatus::passed : CheckStatus::failed;
  report.message = report.check.passed ? "N(J) = J + Z(B)" : "N(J) differs from J + Z(B)";
  return report;
}

CqpTransferReport cqp_transfer_check(const AlgebraSpec& spec, SpaceModel space) {
  CqpTransferReport report;
  if (space.point_count() == 0) {
    report.skipped = true;
    return report;
  }
  const IdealLattice ideals = enumerate_ideals(spec);
  const SpaceModel single(1);
  report.cqp_function_algebra = check_cqp(ideals, space).holds;
  report.cqp_base = check_cqp(ideals, single).holds;
  report.weak_centrality_function_algebra = weak_centrality(ideals, space);
  report.weak_centrality_base = weak_centrality(ideals, single);
  report.checks = {
      {"cqp(A^X) implies cqp(A)", !report.cqp_function_algebra || report.cqp_base},
      {"cqp(A) implies cqp(A^X)", !report.cqp_base || report.cqp_function_algebra},
      {"weak-centrality(A^X) iff cqp(A^X)",
       report.weak_centrality_function_algebra == report.cqp_function_algebra},
      {"weak-centrality(A) iff cqp(A)", report.weak_centrality_base == report.cqp_base},
  };
  return report;
}

}  // namespace c0ideal

#include "c0ideal/function_algebra.hpp"

#include <stdexcept>
#include <string>

namespace c0ideal {

bool is_contained(const BoundedLattice& lattice, const PointwiseIdeal& a, const PointwiseIdeal& b) {
  if (a.stalks.size() != b.stalks.size()) throw std::invalid_argument("ideals over different spaces");
  for (std::size_t x = 0; x < a.stalks.size(); ++x) {
    if (!lattice.leq(a.stalks[x], b.stalks[x])) return false;
  }
  return true;
}

FunctionAlgebra::FunctionAlgebra(AlgebraSpec spec, SpaceModel space)
    : spec_(std::move(spec)), space_(space) {}

Vector FunctionAlgebra::multiply(const Vector& f, const Vector& g) const {
  if (f.size() != dimension() || g.size() != dimension()) {
    throw std::invalid_argument("multiply: coordinate vector has wrong length");
  }
  const std::size_t d = spec_.dimension();
  Vector out;
  out.reserve(dimension());
  for (std::size_t x = 0; x < space_.point_count(); ++x) {
    const auto lo = static_cast<std::ptrdiff_t>(x * d);
    const auto hi = static_cast<std::ptrdiff_t>((x + 1) * d);
    Vector fx(f.begin() + lo, f.begin() + hi);
    Vector gx(g.begin() + lo, g.begin() + hi);
    Vector hx = spec_.multiply(fx, gx);
    out.insert(out.end(), hx.begin(), hx.end());
  }
  return out;
}

Vector FunctionAlgebra::commutator(const Vector& f, const Vector& g) const {
  Vector fg = multiply(f, g);
  const Vector gf = multiply(g, f);
  for (std::size_t k = 0; k < fg.size(); ++k) fg[k] -= gf[k];
  return fg;
}

std::vector<Vector> FunctionAlgebra::basis() const {
  std::vector<Vector> out;
  out.reserve(dimension());
  for (std::size_t k = 0; k < dimension(); ++k) {
    out.emplace_back(dimension());
    out.back()[k] = 1;
  }
  return out;
}

Subspace FunctionAlgebra::assemble(const std::vector<Subspace>& per_point) const {
  if (per_point.size() != space_.point_count()) {
    throw std::invalid_argument("need one subspace per point");
  }
  std::vector<Vector> rows;
  for (std::size_t x = 0; x < per_point.size(); ++x) {
    if (per_point[x].ambient_dim() != spec_.dimension()) {
      throw std::invalid_argument("pointwise subspace has wrong ambient dimension");
    }
    for (const Vector& v : per_point[x].basis()) {
      Vector row(dimension());
      for (std::size_t k = 0; k < v.size(); ++k) row[offset(x) + k] = v[k];
      rows.push_back(std::move(row));
    }
  }
  return rref(rows, dimension());
}

Subspace FunctionAlgebra::central_functions() const {
  return assemble(std::vector<Subspace>(space_.point_count(), centre(spec_)));
}

Subspace FunctionAlgebra::commutator_span() const {
  return assemble(std::vector<Subspace>(space_.point_count(), c0ideal::commutator_span(spec_)));
}

Subspace FunctionAlgebra::ideal_subspace(const IdealLattice& ideals, const PointwiseIdeal& ideal) const {
  if (!(ideals.spec == spec_)) throw std::invalid_argument("ideal lattice belongs to another algebra");
  if (ideal.point_count() != space_.point_count()) {
    throw std::invalid_argument("ideal has " + std::to_string(ideal.point_count()) +
                                " stalks for " + std::to_string(space_.point_count()) + " points");
  }
  std::vector<Subspace> per_point;
  per_point.reserve(ideal.point_count());
  for (Index s : ideal.stalks) {
    if (s >= ideals.ideals.size()) throw std::invalid_argument("stalk index out of range");
    per_point.push_back(ideals.ideals[s].subspace());
  }
  return assemble(per_point);
}

std::vector<LinearFunctional> FunctionAlgebra::tracial_state_basis() const {
  std::vector<LinearFunctional> out;
  for (std::size_t x = 0; x < space_.point_count(); ++x) {
    for (const LinearFunctional& tr : c0ideal::tracial_state_basis(spec_)) {
      Vector coeffs(dimension());
      for (std::size_t k = 0; k < tr.coefficients.size(); ++k) coeffs[offset(x) + k] = tr.coefficients[k];
      out.push_back(LinearFunctional{std::move(coeffs)});
    }
  }
  return out;
}

bool is_two_sided_ideal(const FunctionAlgebra& algebra, const Subspace& space) {
  for (const Vector& b : algebra.basis()) {
    for (const Vector& v : space.basis()) {
      if (!space.contains(algebra.multiply(b, v))) return false;
      if (!space.contains(algebra.multiply(v, b))) return false;
    }
  }
  return true;
}

FunctionElement::FunctionElement(AlgebraSpec spec, std::vector<Element> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  for (const Element& v : values_) {
    if (!(v.spec() == spec_)) throw std::invalid_argument("function value in the wrong algebra");
  }
}

FunctionElement FunctionElement::constant(const Element& a, SpaceModel space) {
  return FunctionElement(a.spec(), std::vector<Element>(space.point_count(), a));
}

FunctionElement FunctionElement::scalar_function(const AlgebraSpec& spec, const std::vector<Scalar>& g) {
  std::vector<Element> values;
  values.reserve(g.size());
  for (const Scalar& s : g) values.push_back(Element::identity(spec) * s);
  return FunctionElement(spec, std::move(values));
}

FunctionElement FunctionElement::from_coordinates(const FunctionAlgebra& algebra, const Vector& coords) {
  if (coords.size() != algebra.dimension()) throw std::invalid_argument("wrong coordinate count");
  const std::size_t d = algebra.spec().dimension();
  std::vector<Element> values;
  for (std::size_t x = 0; x < algebra.space().point_count(); ++x) {
    const auto lo = static_cast<std::ptrdiff_t>(x * d);
    values.emplace_back(algebra.spec(), Vector(coords.begin() + lo, coords.begin() + lo + static_cast<std::ptrdiff_t>(d)));
  }
  return FunctionElement(algebra.spec(), std::move(values));
}

Vector FunctionElement::coordinates() const {
  Vector out;
  for (const Element& v : values_) out.insert(out.end(), v.coordinates().begin(), v.coordinates().end());
  return out;
}

FunctionElement multiply(const FunctionElement& f, const FunctionElement& g) {
  if (f.values().size() != g.values().size()) throw std::invalid_argument("functions on different spaces");
  std::vector<Element> values;
  values.reserve(f.values().size());
  for (std::size_t x = 0; x < f.values().size(); ++x) values.push_back(multiply(f(x), g(x)));
  return FunctionElement(f.spec(), std::move(values));
}

PointwiseIdeal theta(const BoundedLattice& lattice, const ClosedFamily& family) {
  if (auto failure = find_incompatibility(lattice, family)) {
    throw std::invalid_argument("family is not compatible with the lattice (at meet I_" +
                                std::to_string(failure->meet + 1) + ")");
  }
  PointwiseIdeal out;
  out.stalks.reserve(family.space.point_count());
  for (std::size_t x = 0; x < family.space.point_count(); ++x) {
    IndexSet containing;
    for (Index i = 0; i < lattice.size(); ++i) {
      if (family[i].contains(x)) containing.insert(i);
    }
    out.stalks.push_back(lattice.meet_of(containing));
  }
  return out;
}

ClosedFamily recover_S(const BoundedLattice& lattice, const PointwiseIdeal& ideal) {
  ClosedFamily family{SpaceModel(ideal.point_count()), std::vector<PointSet>(lattice.size())};
  for (std::size_t x = 0; x < ideal.point_count(); ++x) {
    if (ideal.stalks[x] >= lattice.size()) throw std::invalid_argument("stalk index out of range");
    for (Index i = 0; i < lattice.size(); ++i) {
      if (lattice.leq(ideal.stalks[x], i)) family.sets[i].insert(x);
    }
  }
  return family;
}

std::vector<PointwiseIdeal> enumerate_all_ideals(const BoundedLattice& lattice, SpaceModel space,
                                                 std::size_t bound) {
  const std::size_t n = lattice.size();
  std::size_t total = 1;
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    if (total > bound / n) {
      throw std::length_error("ideal enumeration needs size^|X| <= " + std::to_string(bound));
    }
    total *= n;
  }
  if (total > bound) throw std::length_error("ideal enumeration needs size^|X| <= " + std::to_string(bound));
  std::vector<PointwiseIdeal> out;
  out.reserve(total);
  PointwiseIdeal current{std::vector<Index>(space.point_count(), 0)};
  for (std::size_t count = 0; count < total; ++count) {
    out.push_back(current);
    for (std::size_t x = space.point_count(); x-- > 0;) {
      if (++current.stalks[x] < n) break;
      current.stalks[x] = 0;
    }
  }
  return out;
}

std::vector<PointwiseIdeal> enumerate_all_ideals(const IdealLattice& ideals, SpaceModel space,
                                                 std::size_t bound) {
  std::vector<PointwiseIdeal> out = enumerate_all_ideals(ideals.lattice, space, bound);
  const FunctionAlgebra algebra(ideals.spec, space);
  for (const PointwiseIdeal& ideal : out) {
    if (!is_two_sided_ideal(algebra, algebra.ideal_subspace(ideals, ideal))) {
      throw std::logic_error("stalk assignment is not a two-sided ideal of A^X");
    }
  }
  return out;
}

PointwiseSubspaces product_subspace(SpaceModel space, PointSet vanish_on, const Subspace& values) {
  if (!space.contains(vanish_on)) throw std::invalid_argument("Y is not a subset of X");
  PointwiseSubspaces out;
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    out.values.push_back(vanish_on.contains(x) ? Subspace::zero(values.ambient_dim()) : values);
  }
  return out;
}

PointwiseSubspaces pointwise_sum(const PointwiseSubspaces& a, const PointwiseSubspaces& b) {
  if (a.values.size() != b.values.size()) throw std::invalid_argument("families over different spaces");
  PointwiseSubspaces out;
  for (std::size_t x = 0; x < a.values.size(); ++x) out.values.push_back(sum(a.values[x], b.values[x]));
  return out;
}

IdealFromYResult ideal_from_Y_and_I(const BoundedLattice& lattice, SpaceModel space, PointSet y,
                                    Index t) {
  if (t >= lattice.size()) throw std::invalid_argument("ideal index out of range");
  if (!space.contains(y)) throw std::invalid_argument("Y is not a subset of X");
  IdealFromYResult result;
  bool matches = true;
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    const Index expected = y.contains(x) ? t : lattice.top();
    const Index vanish_part = y.contains(x) ? lattice.bottom() : lattice.top();
    matches = matches && lattice.join(t, vanish_part) == expected;
    result.ideal.stalks.push_back(expected);
  }
  result.lattice_sum_matches = matches;
  return result;
}

IdealFromYResult ideal_from_Y_and_I(const IdealLattice& ideals, SpaceModel space, PointSet y,
                                    Index t) {
  IdealFromYResult result = ideal_from_Y_and_I(ideals.lattice, space, y, t);
  const Subspace whole = Subspace::full(ideals.spec.dimension());
  const PointwiseSubspaces lhs = pointwise_sum(product_subspace(space, PointSet{}, ideals.ideals[t].subspace()),
                                               product_subspace(space, y, whole));
  const FunctionAlgebra algebra(ideals.spec, space);
  result.subspace_sum_matches =
      algebra.assemble(lhs.values) == algebra.ideal_subspace(ideals, result.ideal);
  return result;
}

}  // namespace c0ideal

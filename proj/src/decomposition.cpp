#include "c0ideal/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace c0ideal {

Decomposition decompose(const BoundedLattice& lattice, const ClosedFamily& family) {
  if (auto failure = find_incompatibility(lattice, family)) {
    throw std::invalid_argument("cannot decompose an incompatible family");
  }
  Decomposition d{family.space, {}};
  for (Index j = 0; j < lattice.size(); ++j) {
    if (j == lattice.bottom()) continue;
    d.terms.push_back(ProductTerm{union_over_gamma(lattice, family, j), j});
  }
  return d;
}

Decomposition minimal_terms(const Decomposition& d) {
  Decomposition out{d.space, {}};
  std::copy_if(d.terms.begin(), d.terms.end(), std::back_inserter(out.terms),
               [&](const ProductTerm& t) { return t.vanish_on != d.space.all(); });
  return out;
}

PointwiseIdeal evaluate(const BoundedLattice& lattice, const Decomposition& d) {
  PointwiseIdeal out;
  for (std::size_t x = 0; x < d.space.point_count(); ++x) {
    Index stalk = lattice.bottom();
    for (const ProductTerm& t : d.terms) {
      if (t.ideal >= lattice.size()) throw std::invalid_argument("term ideal out of range");
      if (!t.vanish_on.contains(x)) stalk = lattice.join(stalk, t.ideal);
    }
    out.stalks.push_back(stalk);
  }
  return out;
}

Subspace evaluate_subspace(const IdealLattice& ideals, const Decomposition& d) {
  const FunctionAlgebra algebra(ideals.spec, d.space);
  Subspace total = Subspace::zero(algebra.dimension());
  for (const ProductTerm& t : d.terms) {
    const PointwiseSubspaces term =
        product_subspace(d.space, t.vanish_on, ideals.ideals.at(t.ideal).subspace());
    total = sum(total, algebra.assemble(term.values));
  }
  return total;
}

bool union_reduction_holds(const BoundedLattice& lattice, const ClosedFamily& family, Index i) {
  PointSet meet = family.space.all();
  for (Index r = 0; r < lattice.size(); ++r) {
    if (!lattice.leq(r, i)) meet = meet & union_over_gamma(lattice, family, r);
  }
  return meet == family[i];
}

std::vector<IdentityCheck> verify_theorem(const BoundedLattice& lattice, const ClosedFamily& family,
                                          const IdealLattice* concrete) {
  std::vector<IdentityCheck> checks;
  const PointwiseIdeal expected = theta(lattice, family);
  const Decomposition d = decompose(lattice, family);
  const PointwiseIdeal evaluated = evaluate(lattice, d);
  checks.push_back({"evaluate-equals-theta", evaluated == expected});
  checks.push_back({"recover-roundtrip", recover_S(lattice, evaluated) == family});
  bool reduction = true;
  for (Index i = 0; i < lattice.size(); ++i) reduction = reduction && union_reduction_holds(lattice, family, i);
  checks.push_back({"union-reduction", reduction});
  if (concrete != nullptr) {
    const FunctionAlgebra algebra(concrete->spec, family.space);
    checks.push_back({"subspace-sum-equals-theta",
                      evaluate_subspace(*concrete, d) == algebra.ideal_subspace(*concrete, expected)});
  }
  return checks;
}

std::string format_check_line(const std::string& fixture, std::size_t family_id,
                              const IdentityCheck& check) {
  return std::string(check.passed ? "PASS " : "FAIL ") + fixture + " " + std::to_string(family_id) +
         " " + check.identity;
}

}  // namespace c0ideal

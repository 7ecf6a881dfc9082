#pragma once

// Bundled lattices: the 9-element ideal lattice of B(H) ⊕ B(H), chains
// (ideal lattices of B(H) for the various cardinal dimensions), and Boolean
// lattices of block algebras.

#include <optional>
#include <string>
#include <vector>

#include "c0ideal/fdalgebra.hpp"
#include "c0ideal/lattice.hpp"

namespace c0ideal {

struct Fixture {
  std::string name;
  BoundedLattice lattice;
  std::optional<AlgebraSpec> spec;      // concrete algebra when one exists
  std::optional<ClosedFamily> family;   // sample compatible family
};

/// I_1 = 0⊕0, I_2 = K⊕0, I_3 = 0⊕K, I_4 = B⊕0, I_5 = K⊕K, I_6 = 0⊕B,
/// I_7 = B⊕K, I_8 = K⊕B, I_9 = B⊕B, ordered componentwise with 0 < K < B.
/// The sample family has four points with stalks I_2, I_3, I_4, I_6 (the
/// join-irreducibles), which makes S_2, ..., S_9 distinct and nonempty.
Fixture bh2_fixture();

/// The family S_i = { x : I_{stalk(x)} <= I_i } on a space with one point per
/// listed stalk (0-based lattice indices).
ClosedFamily family_from_stalks(const BoundedLattice& lattice, const std::vector<Index>& stalks);

/// Total order 0 < 1 < ... < m-1; carries spec M_2 when m = 2. Throws
/// std::invalid_argument for m < 2.
Fixture chain_fixture(std::size_t m);

/// Boolean lattice of block subsets with its spec; the lattice is checked to
/// be order-isomorphic to enumerate_ideals(spec).
Fixture block_fixture(const std::vector<std::size_t>& dims);

/// Names accepted by fixture_by_name, in listing order.
std::vector<std::string> bundled_fixture_names();

/// "bh2", "chain_<m>", or "block_<n1>_<n2>_..."; throws std::invalid_argument
/// for anything else.
Fixture fixture_by_name(const std::string& name);

}  // namespace c0ideal

#pragma once

// Seeded random vectors and subspaces for the Lie-ideal suites.

#include <cstddef>
#include <random>

#include "c0ideal/linalg.hpp"

namespace c0ideal {

/// Random combination of the basis of U with coefficients in {-2, ..., 2}
/// plus occasional imaginary parts.
Vector random_vector_in(const Subspace& u, std::mt19937& rng);

/// span(lower ∪ R) where R is up to dim(upper) - dim(lower) random vectors of
/// `upper`. Requires lower ⊆ upper.
Subspace random_subspace_between(const Subspace& lower, const Subspace& upper, std::mt19937& rng);

/// Span of 1 to `max_vectors` vectors, each with 1 to 3 nonzero entries drawn
/// from {1, -1, 2, i}.
Subspace random_sparse_subspace(std::size_t ambient_dim, std::mt19937& rng, std::size_t max_vectors = 3);

}  // namespace c0ideal

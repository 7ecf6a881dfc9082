#include "c0ideal/sampling.hpp"

#include <stdexcept>

namespace c0ideal {

namespace {

std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Vector random_vector_in(const Subspace& u, std::mt19937& rng) {
  Vector v = zero_vector(u.ambient_dim());
  std::uniform_int_distribution<long> coefficient(-2, 2);
  for (const Vector& b : u.basis()) {
    Scalar c(Rational(coefficient(rng)), Rational(uniform(rng, 0, 3) == 0 ? coefficient(rng) : 0));
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!b[k].is_zero()) v[k] += c * b[k];
    }
  }
  return v;
}

Subspace random_subspace_between(const Subspace& lower, const Subspace& upper, std::mt19937& rng) {
  if (!lower.is_subspace_of(upper)) throw std::invalid_argument("random_subspace_between: lower not in upper");
  std::vector<Vector> rows = lower.basis();
  const std::size_t extra = uniform(rng, 0, upper.dim() - lower.dim());
  for (std::size_t k = 0; k < extra; ++k) rows.push_back(random_vector_in(upper, rng));
  return rref(rows, upper.ambient_dim());
}

Subspace random_sparse_subspace(std::size_t ambient_dim, std::mt19937& rng, std::size_t max_vectors) {
  if (ambient_dim == 0) return Subspace::zero(0);
  const Scalar entries[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(0), Rational(1))};
  std::vector<Vector> rows;
  const std::size_t count = uniform(rng, 1, max_vectors);
  for (std::size_t r = 0; r < count; ++r) {
    Vector v = zero_vector(ambient_dim);
    const std::size_t nonzeros = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < nonzeros; ++k) v[uniform(rng, 0, ambient_dim - 1)] = entries[uniform(rng, 0, 3)];
    rows.push_back(std::move(v));
  }
  return rref(rows, ambient_dim);
}

}  // namespace c0ideal

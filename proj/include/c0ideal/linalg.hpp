#pragma once

// Exact linear algebra over the Gaussian rationals Q(i).
//
// Every subspace is stored in reduced row-echelon form with unit pivots, so
// two Subspace values describe the same set exactly when they compare equal.

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace c0ideal {

using Rational = mpq_class;

/// a + b i with a, b arbitrary-precision rationals in lowest terms.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = 0);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  // throws std::domain_error on zero

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form "p/q+r/s i"; integer parts drop the denominator and zero
  /// parts are omitted ("0", "3/2", "-i", "1+2 i").
  std::string to_string() const;

  /// Inverse of to_string. Also accepts surrounding whitespace and "i" alone.
  static Scalar parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t dim);
bool is_zero(const Vector& v);

/// Canonical (reduced row-echelon) basis of a subspace of Q(i)^n.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is a member.
  Vector residue(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace rref(std::span<const Vector> rows, std::size_t ambient_dim);

  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of `rows`. Throws std::invalid_argument when a row length
/// differs from ambient_dim.
Subspace rref(std::span<const Vector> rows, std::size_t ambient_dim);

Subspace sum(const Subspace& u, const Subspace& v);

/// Zassenhaus: row-reduce [u | u] over [v | 0]; rows with a zero left half
/// carry a basis of the intersection in their right half.
Subspace intersect(const Subspace& u, const Subspace& v);

bool contains(const Subspace& u, const Vector& v);

/// Solution space of { x : row . x = 0 for every row }.
Subspace kernel(std::span<const Vector> rows, std::size_t columns);

/// Linear functionals cutting out u: v is in u iff every functional vanishes
/// on v. One functional per non-pivot column.
std::vector<Vector> annihilator(const Subspace& u);

Scalar dot(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace c0ideal

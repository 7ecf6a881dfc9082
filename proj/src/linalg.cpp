#include "c0ideal/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace c0ideal {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim()) {
    std::ostringstream msg;
    msg << op << ": ambient dimensions differ (" << u.ambient_dim() << " vs "
        << v.ambient_dim() << ")";
    throw std::invalid_argument(msg.str());
  }
}

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad rational '" + s + "'");
  int slashes = 0;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (++slashes > 1 || k == start || k + 1 == s.size()) {
        throw std::invalid_argument("bad rational '" + s + "'");
      }
    } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("bad rational '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// In-place reduced row echelon form; returns pivot columns of the nonzero rows
// (which are moved to the front, zero rows are dropped).
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Vector& pivot_row = rows[rank];
    const Scalar inv = Scalar(1) / pivot_row[col];
    for (std::size_t k = col; k < columns; ++k) pivot_row[k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t k = col; k < columns; ++k) {
        if (!pivot_row[k].is_zero()) rows[r][k] -= factor * pivot_row[k];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  *this *= rhs.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_text(im_) + " i";
  }
  if (sgn(re_) == 0) return imag;
  return rational_text(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  // Split "re(+|-)im" at the last sign that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  return Scalar(re_text.empty() ? Rational(0) : parse_rational(re_text),
                parse_rational(im_text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(std::size_t dim) { return Vector(dim); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> rows;
  rows.reserve(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    rows.push_back(zero_vector(ambient_dim));
    rows.back()[k] = 1;
  }
  return rref(rows, ambient_dim);
}

Vector Subspace::residue(const Vector& v) const {
  if (v.size() != ambient_dim_) {
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match ambient dimension " +
                                std::to_string(ambient_dim_));
  }
  Vector r = v;
  for (std::size_t p = 0; p < basis_.size(); ++p) {
    const Scalar coeff = r[pivots_[p]];
    if (coeff.is_zero()) continue;
    for (std::size_t k = pivots_[p]; k < ambient_dim_; ++k) {
      if (!basis_[p][k].is_zero()) r[k] -= coeff * basis_[p][k];
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return c0ideal::is_zero(residue(v)); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_same_ambient(*this, other, "is_subspace_of");
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vector& row) { return other.contains(row); });
}

Subspace rref(std::span<const Vector> rows, std::size_t ambient_dim) {
  std::vector<Vector> work;
  work.reserve(rows.size());
  for (const Vector& row : rows) {
    if (row.size() != ambient_dim) {
      throw std::invalid_argument("rref: row of length " + std::to_string(row.size()) +
                                  " in ambient dimension " + std::to_string(ambient_dim));
    }
    if (!is_zero(row)) work.push_back(row);
  }
  Subspace out(ambient_dim);
  out.pivots_ = reduce_rows(work, ambient_dim);
  out.basis_ = std::move(work);
  return out;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "sum");
  if (v.is_zero()) return u;
  if (u.is_zero()) return v;
  std::vector<Vector> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return rref(rows, u.ambient_dim());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "intersect");
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
  std::vector<Vector> rows;
  rows.reserve(u.dim() + v.dim());
  for (const Vector& a : u.basis()) {
    Vector row = a;
    row.insert(row.end(), a.begin(), a.end());
    rows.push_back(std::move(row));
  }
  for (const Vector& b : v.basis()) {
    Vector row = b;
    row.resize(2 * n);
    rows.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = reduce_rows(rows, 2 * n);
  std::vector<Vector> meet;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivots[r] < n) continue;
    meet.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(n), rows[r].end());
  }
  return rref(meet, n);
}

bool contains(const Subspace& u, const Vector& v) { return u.contains(v); }

Subspace kernel(std::span<const Vector> rows, std::size_t columns) {
  std::vector<Vector> work;
  for (const Vector& row : rows) {
    if (row.size() != columns) {
      throw std::invalid_argument("kernel: row of length " + std::to_string(row.size()) +
                                  " with " + std::to_string(columns) + " columns");
    }
    if (!is_zero(row)) work.push_back(row);
  }
  const std::vector<std::size_t> pivots = reduce_rows(work, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> solutions;
  for (std::size_t free_col = 0; free_col < columns; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector x = zero_vector(columns);
    x[free_col] = 1;
    for (std::size_t r = 0; r < work.size(); ++r) x[pivots[r]] = -work[r][free_col];
    solutions.push_back(std::move(x));
  }
  return rref(solutions, columns);
}

std::vector<Vector> annihilator(const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : u.pivots()) is_pivot[p] = true;
  std::vector<Vector> functionals;
  for (std::size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vector phi = zero_vector(n);
    phi[col] = 1;
    for (std::size_t r = 0; r < u.dim(); ++r) phi[u.pivots()[r]] = -u.basis()[r][col];
    functionals.push_back(std::move(phi));
  }
  return functionals;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  }
  return acc;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].to_string();
  }
  return out + ")";
}

}  // namespace c0ideal

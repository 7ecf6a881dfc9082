#pragma once

// Finite bounded lattices standing in for ideal lattices, closed-set families
// over a finite discrete space, and the compatibility relation between them.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c0ideal {

using Index = std::size_t;

/// Subset of {0, ..., 63} packed into a word. The tag keeps point sets and
/// ideal-index sets from being mixed up.
template <class Tag>
class SmallSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr SmallSet prefix(std::size_t n) {
    return SmallSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SmallSet singleton(std::size_t k) { return SmallSet(std::uint64_t{1} << k); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t k) const { return k < capacity && ((bits_ >> k) & 1U); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(SmallSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr SmallSet& insert(std::size_t k) {
    bits_ |= std::uint64_t{1} << k;
    return *this;
  }
  constexpr SmallSet& erase(std::size_t k) {
    bits_ &= ~(std::uint64_t{1} << k);
    return *this;
  }

  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) { return SmallSet(a.bits_ | b.bits_); }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) { return SmallSet(a.bits_ & b.bits_); }
  /// Relative complement a \ b.
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) { return SmallSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SmallSet a, SmallSet b) = default;
  friend constexpr auto operator<=>(SmallSet a, SmallSet b) = default;

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct PointTag {};
struct IndexTag {};
using PointSet = SmallSet<PointTag>;
using IndexSet = SmallSet<IndexTag>;

/// "{0,2,5}" with `offset` added to every element (1 for ideal labels).
template <class Tag>
std::string format_set(SmallSet<Tag> s, std::size_t offset = 0) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(k + offset);
    first = false;
  }
  return out + "}";
}

/// Finite lattice given by explicit meet and join tables. Indices are
/// 0-based; external surfaces label index k as I_{k+1}.
class BoundedLattice {
 public:
  using Table = std::vector<std::vector<Index>>;

  /// Throws std::invalid_argument if the tables are not size x size or hold
  /// out-of-range indices. Lattice laws are checked by validate_lattice.
  BoundedLattice(Table meet, Table join, Index bottom, Index top);

  std::size_t size() const { return meet_.size(); }
  Index meet(Index i, Index j) const { return meet_[i][j]; }
  Index join(Index i, Index j) const { return join_[i][j]; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  const Table& meet_table() const { return meet_; }
  const Table& join_table() const { return join_; }

  /// i <= j iff meet(i, j) == i.
  bool leq(Index i, Index j) const { return meet_[i][j] == i; }

  /// Meet of a set of indices; the empty meet is top.
  Index meet_of(IndexSet s) const;
  /// Join of a set of indices; the empty join is bottom.
  Index join_of(IndexSet s) const;

  friend bool operator==(const BoundedLattice&, const BoundedLattice&) = default;

 private:
  Table meet_;
  Table join_;
  Index bottom_;
  Index top_;
};

/// Builds meet/join tables from a partial order given as leq[i][j]. Throws
/// std::invalid_argument if some pair lacks a greatest lower or least upper
/// bound.
BoundedLattice lattice_from_order(const std::vector<std::vector<bool>>& leq);

struct LatticeViolation {
  std::string law;
  std::vector<Index> witnesses;  // 0-based
  std::string detail;
};

/// First violated lattice identity, or nullopt if the tables describe a
/// bounded lattice with the stated bottom and top.
std::optional<LatticeViolation> validate_lattice(const BoundedLattice& lattice);

bool is_distributive(const BoundedLattice& lattice);

/// A bijection f with i <= j iff f(i) <= f(j), mapping indices of `from` to
/// indices of `to`, if one exists.
std::optional<std::vector<Index>> order_isomorphism(const BoundedLattice& from,
                                                    const BoundedLattice& to);

/// Finite discrete space X = {0, ..., point_count - 1}; every subset is closed.
class SpaceModel {
 public:
  static constexpr std::size_t max_points = PointSet::capacity - 1;

  explicit SpaceModel(std::size_t point_count);
  std::size_t point_count() const { return point_count_; }
  PointSet all() const { return PointSet::prefix(point_count_); }
  bool contains(PointSet s) const { return s.subset_of(all()); }
  friend bool operator==(SpaceModel, SpaceModel) = default;

 private:
  std::size_t point_count_;
};

/// S = {S_i}: one closed subset of X per lattice index.
struct ClosedFamily {
  SpaceModel space{0};
  std::vector<PointSet> sets;

  PointSet operator[](Index i) const { return sets[i]; }
  friend bool operator==(const ClosedFamily&, const ClosedFamily&) = default;
};

enum class CompatibilityMode {
  pairwise,    // S_i ∩ S_j = S_meet(i,j) for all i, j, and S_top = X
  exhaustive,  // every subset γ of indices, including γ = ∅
};

struct CompatibilityFailure {
  IndexSet gamma;  // 0-based indices whose sets were intersected
  Index meet;      // index of the lattice meet over gamma
  PointSet intersection;
  PointSet expected;
};

std::optional<CompatibilityFailure> find_incompatibility(const BoundedLattice& lattice,
                                                         const ClosedFamily& family,
                                                         CompatibilityMode mode =
                                                             CompatibilityMode::pairwise);

inline bool is_compatible(const BoundedLattice& lattice, const ClosedFamily& family,
                          CompatibilityMode mode = CompatibilityMode::pairwise) {
  return !find_incompatibility(lattice, family, mode).has_value();
}

/// γ_j = { i : not (j <= i) }.
IndexSet compute_gamma(const BoundedLattice& lattice, Index j);

/// Union of S_k over k in γ_j.
PointSet union_over_gamma(const BoundedLattice& lattice, const ClosedFamily& family, Index j);

inline constexpr std::size_t default_family_bound = 16;

/// Every compatible family with S_top = X, ordered lexicographically by the
/// bitmask tuple (S_0, ..., S_{n-1}). Throws std::length_error when
/// size * |X| exceeds `bound`.
std::vector<ClosedFamily> enumerate_compatible_families(const BoundedLattice& lattice,
                                                        SpaceModel space,
                                                        std::size_t bound = default_family_bound);

}  // namespace c0ideal

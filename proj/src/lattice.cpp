#include "c0ideal/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace c0ideal {

namespace {

constexpr std::size_t max_exhaustive_size = 20;

std::string label(Index i) { return "I_" + std::to_string(i + 1); }

void check_table(const BoundedLattice::Table& table, std::size_t n, const char* name) {
  if (table.size() != n) {
    throw std::invalid_argument(std::string(name) + " table has " + std::to_string(table.size()) +
                                " rows, expected " + std::to_string(n));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw std::invalid_argument(std::string(name) + " table row " + std::to_string(r + 1) +
                                  " has " + std::to_string(table[r].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    for (Index v : table[r]) {
      if (v >= n) {
        throw std::invalid_argument(std::string(name) + " table entry out of range in row " +
                                    std::to_string(r + 1));
      }
    }
  }
}

LatticeViolation violation(std::string law, std::vector<Index> witnesses, const std::string& detail) {
  return LatticeViolation{std::move(law), std::move(witnesses), detail};
}

}  // namespace

BoundedLattice::BoundedLattice(Table meet, Table join, Index bottom, Index top)
    : meet_(std::move(meet)), join_(std::move(join)), bottom_(bottom), top_(top) {
  const std::size_t n = meet_.size();
  if (n == 0) throw std::invalid_argument("lattice must have at least one element");
  check_table(meet_, n, "meet");
  check_table(join_, n, "join");
  if (bottom_ >= n || top_ >= n) throw std::invalid_argument("bottom/top index out of range");
}

Index BoundedLattice::meet_of(IndexSet s) const {
  Index acc = top_;
  for (Index i : s.elements()) acc = meet_[acc][i];
  return acc;
}

Index BoundedLattice::join_of(IndexSet s) const {
  Index acc = bottom_;
  for (Index i : s.elements()) acc = join_[acc][i];
  return acc;
}

BoundedLattice lattice_from_order(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  if (n == 0) throw std::invalid_argument("empty order");
  auto extremal = [&](Index i, Index j, bool lower) -> Index {
    std::vector<Index> bounds;
    for (Index k = 0; k < n; ++k) {
      if (lower ? (leq[k][i] && leq[k][j]) : (leq[i][k] && leq[j][k])) bounds.push_back(k);
    }
    for (Index b : bounds) {
      bool best = std::all_of(bounds.begin(), bounds.end(),
                              [&](Index c) { return lower ? bool(leq[c][b]) : bool(leq[b][c]); });
      if (best) return b;
    }
    throw std::invalid_argument("order has no " + std::string(lower ? "meet" : "join") + " for " +
                                label(i) + ", " + label(j));
  };
  BoundedLattice::Table meet(n, std::vector<Index>(n));
  BoundedLattice::Table join(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      meet[i][j] = extremal(i, j, true);
      join[i][j] = extremal(i, j, false);
    }
  }
  Index bottom = 0;
  Index top = 0;
  for (Index i = 1; i < n; ++i) {
    bottom = meet[bottom][i];
    top = join[top][i];
  }
  return BoundedLattice(std::move(meet), std::move(join), bottom, top);
}

std::optional<LatticeViolation> validate_lattice(const BoundedLattice& lattice) {
  const std::size_t n = lattice.size();
  const Index bot = lattice.bottom();
  const Index top = lattice.top();
  std::ostringstream detail;

  for (Index i = 0; i < n; ++i) {
    if (lattice.meet(i, i) != i || lattice.join(i, i) != i) {
      detail << "meet/join of " << label(i) << " with itself is not " << label(i);
      return violation("idempotence", {i}, detail.str());
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (lattice.meet(i, j) != lattice.meet(j, i)) {
        detail << "meet(" << label(i) << "," << label(j) << ") = " << label(lattice.meet(i, j))
               << " but meet(" << label(j) << "," << label(i) << ") = " << label(lattice.meet(j, i));
        return violation("meet commutativity", {i, j}, detail.str());
      }
      if (lattice.join(i, j) != lattice.join(j, i)) {
        detail << "join(" << label(i) << "," << label(j) << ") = " << label(lattice.join(i, j))
               << " but join(" << label(j) << "," << label(i) << ") = " << label(lattice.join(j, i));
        return violation("join commutativity", {i, j}, detail.str());
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (lattice.meet(i, lattice.join(i, j)) != i) {
        detail << "meet(" << label(i) << ", join(" << label(i) << "," << label(j) << ")) = "
               << label(lattice.meet(i, lattice.join(i, j))) << ", expected " << label(i);
        return violation("absorption", {i, j}, detail.str());
      }
      if (lattice.join(i, lattice.meet(i, j)) != i) {
        detail << "join(" << label(i) << ", meet(" << label(i) << "," << label(j) << ")) = "
               << label(lattice.join(i, lattice.meet(i, j))) << ", expected " << label(i);
        return violation("absorption", {i, j}, detail.str());
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (lattice.meet(i, top) != i) {
      detail << "meet(" << label(i) << ", top " << label(top) << ") is not " << label(i);
      return violation("top bound", {i, top}, detail.str());
    }
    if (lattice.join(i, bot) != i) {
      detail << "join(" << label(i) << ", bottom " << label(bot) << ") is not " << label(i);
      return violation("bottom bound", {i, bot}, detail.str());
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (lattice.meet(lattice.meet(i, j), k) != lattice.meet(i, lattice.meet(j, k))) {
          detail << "meet is not associative on " << label(i) << ", " << label(j) << ", " << label(k);
          return violation("meet associativity", {i, j, k}, detail.str());
        }
        if (lattice.join(lattice.join(i, j), k) != lattice.join(i, lattice.join(j, k))) {
          detail << "join is not associative on " << label(i) << ", " << label(j) << ", " << label(k);
          return violation("join associativity", {i, j, k}, detail.str());
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const BoundedLattice& lattice) {
  const std::size_t n = lattice.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) !=
            lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<Index>> order_isomorphism(const BoundedLattice& from,
                                                    const BoundedLattice& to) {
  const std::size_t n = from.size();
  if (to.size() != n) return std::nullopt;
  auto signature = [](const BoundedLattice& l, Index i) {
    std::size_t below = 0;
    std::size_t above = 0;
    for (Index k = 0; k < l.size(); ++k) {
      below += l.leq(k, i);
      above += l.leq(i, k);
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sig_from(n);
  std::vector<std::pair<std::size_t, std::size_t>> sig_to(n);
  for (Index i = 0; i < n; ++i) {
    sig_from[i] = signature(from, i);
    sig_to[i] = signature(to, i);
  }
  std::vector<Index> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(Index)> extend = [&](Index i) -> bool {
    if (i == n) return true;
    for (Index t = 0; t < n; ++t) {
      if (used[t] || sig_from[i] != sig_to[t]) continue;
      bool consistent = true;
      for (Index k = 0; k < i && consistent; ++k) {
        consistent = from.leq(i, k) == to.leq(t, image[k]) && from.leq(k, i) == to.leq(image[k], t);
      }
      if (!consistent) continue;
      image[i] = t;
      used[t] = true;
      if (extend(i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

SpaceModel::SpaceModel(std::size_t point_count) : point_count_(point_count) {
  if (point_count > max_points) {
    throw std::length_error("space has " + std::to_string(point_count) + " points; at most " +
                            std::to_string(max_points) + " supported");
  }
}

std::optional<CompatibilityFailure> find_incompatibility(const BoundedLattice& lattice,
                                                         const ClosedFamily& family,
                                                         CompatibilityMode mode) {
  const std::size_t n = lattice.size();
  if (family.sets.size() != n) {
    throw std::invalid_argument("family has " + std::to_string(family.sets.size()) +
                                " sets for a lattice of size " + std::to_string(n));
  }
  const PointSet everything = family.space.all();
  for (PointSet s : family.sets) {
    if (!family.space.contains(s)) throw std::invalid_argument("family set outside the space");
  }

  if (mode == CompatibilityMode::pairwise) {
    if (family[lattice.top()] != everything) {
      return CompatibilityFailure{IndexSet{}, lattice.top(), everything, family[lattice.top()]};
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const Index m = lattice.meet(i, j);
        const PointSet both = family[i] & family[j];
        if (both != family[m]) {
          IndexSet gamma;
          gamma.insert(i).insert(j);
          return CompatibilityFailure{gamma, m, both, family[m]};
        }
      }
    }
    return std::nullopt;
  }

  if (n > max_exhaustive_size) {
    throw std::length_error("exhaustive compatibility check limited to lattices of size " +
                            std::to_string(max_exhaustive_size));
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const IndexSet gamma(bits);
    PointSet meet_sets = everything;
    for (Index j : gamma.elements()) meet_sets = meet_sets & family[j];
    const Index m = lattice.meet_of(gamma);
    if (meet_sets != family[m]) return CompatibilityFailure{gamma, m, meet_sets, family[m]};
  }
  return std::nullopt;
}

IndexSet compute_gamma(const BoundedLattice& lattice, Index j) {
  IndexSet gamma;
  for (Index i = 0; i < lattice.size(); ++i) {
    if (!lattice.leq(j, i)) gamma.insert(i);
  }
  return gamma;
}

PointSet union_over_gamma(const BoundedLattice& lattice, const ClosedFamily& family, Index j) {
  PointSet out;
  for (Index k : compute_gamma(lattice, j).elements()) out = out | family[k];
  return out;
}

std::vector<ClosedFamily> enumerate_compatible_families(const BoundedLattice& lattice,
                                                        SpaceModel space, std::size_t bound) {
  const std::size_t n = lattice.size();
  if (n * space.point_count() > bound) {
    throw std::length_error("family enumeration needs size * |X| <= " + std::to_string(bound) +
                            ", got " + std::to_string(n) + " * " +
                            std::to_string(space.point_count()));
  }
  // Constraints S_a ∩ S_b = S_meet(a,b), each checked once all three indices
  // are assigned, i.e. at the largest of them.
  struct Triple {
    Index a, b, m;
  };
  std::vector<std::vector<Triple>> due(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const Index m = lattice.meet(a, b);
      due[std::max({a, b, m})].push_back(Triple{a, b, m});
    }
  }
  const std::uint64_t subset_count = std::uint64_t{1} << space.point_count();
  std::vector<ClosedFamily> out;
  ClosedFamily current{space, std::vector<PointSet>(n)};
  std::function<void(Index)> assign = [&](Index i) {
    if (i == n) {
      out.push_back(current);
      return;
    }
    const std::uint64_t first = i == lattice.top() ? space.all().bits() : 0;
    const std::uint64_t last = i == lattice.top() ? space.all().bits() : subset_count - 1;
    for (std::uint64_t bits = first; bits <= last; ++bits) {
      current.sets[i] = PointSet(bits);
      const bool ok = std::all_of(due[i].begin(), due[i].end(), [&](const Triple& t) {
        return (current.sets[t.a] & current.sets[t.b]) == current.sets[t.m];
      });
      if (ok) assign(i + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace c0ideal

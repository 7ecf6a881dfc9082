#include "c0ideal/fixtures.hpp"

#include <array>
#include <stdexcept>

#include "c0ideal/function_algebra.hpp"

namespace c0ideal {

Fixture bh2_fixture() {
  // Component levels: 0 = {0}, 1 = K(H), 2 = B(H).
  constexpr std::array<std::array<int, 2>, 9> levels{{
      {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}}};
  std::vector<std::vector<bool>> leq(9, std::vector<bool>(9));
  for (Index i = 0; i < 9; ++i) {
    for (Index j = 0; j < 9; ++j) {
      leq[i][j] = levels[i][0] <= levels[j][0] && levels[i][1] <= levels[j][1];
    }
  }
  BoundedLattice lattice = lattice_from_order(leq);
  ClosedFamily family = family_from_stalks(lattice, {1, 2, 3, 5});
  return Fixture{"bh2", std::move(lattice), std::nullopt, std::move(family)};
}

ClosedFamily family_from_stalks(const BoundedLattice& lattice, const std::vector<Index>& stalks) {
  return recover_S(lattice, PointwiseIdeal{stalks});
}

Fixture chain_fixture(std::size_t m) {
  if (m < 2) throw std::invalid_argument("chain needs at least 2 elements");
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) leq[i][j] = i <= j;
  }
  BoundedLattice lattice = lattice_from_order(leq);
  std::optional<AlgebraSpec> spec;
  if (m == 2) spec = AlgebraSpec({2});
  std::vector<Index> stalks;
  for (Index i = 0; i < m && stalks.size() < 3; ++i) stalks.push_back(i);
  ClosedFamily family = family_from_stalks(lattice, stalks);
  return Fixture{"chain_" + std::to_string(m), std::move(lattice), std::move(spec), std::move(family)};
}

Fixture block_fixture(const std::vector<std::size_t>& dims) {
  AlgebraSpec spec(dims);
  const std::size_t k = spec.block_count();
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) leq[i][j] = (i & ~j) == 0;
  }
  BoundedLattice lattice = lattice_from_order(leq);
  if (!order_isomorphism(lattice, enumerate_ideals(spec).lattice)) {
    throw std::logic_error("block lattice does not match the enumerated ideals");
  }
  std::string name = "block";
  for (std::size_t d : dims) name += "_" + std::to_string(d);
  std::vector<Index> stalks;
  for (Index i = 1; i < n && stalks.size() < 2; ++i) stalks.push_back(i);
  if (stalks.empty()) stalks.push_back(0);
  ClosedFamily family = family_from_stalks(lattice, stalks);
  return Fixture{std::move(name), std::move(lattice), std::move(spec), std::move(family)};
}

std::vector<std::string> bundled_fixture_names() {
  std::vector<std::string> names{"bh2"};
  for (std::size_t m = 2; m <= 8; ++m) names.push_back("chain_" + std::to_string(m));
  for (const char* b : {"block_1", "block_2", "block_3", "block_1_1", "block_1_2", "block_2_2",
                        "block_2_3", "block_1_1_1", "block_1_1_2"}) {
    names.emplace_back(b);
  }
  return names;
}

Fixture fixture_by_name(const std::string& name) {
  if (name == "bh2") return bh2_fixture();
  auto parse_count = [&](const std::string& text) -> std::size_t {
    if (text.empty() || text.size() > 2 || text.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("unknown fixture '" + name + "'");
    }
    return std::stoul(text);
  };
  if (name.rfind("chain_", 0) == 0) return chain_fixture(parse_count(name.substr(6)));
  if (name.rfind("block_", 0) == 0) {
    std::vector<std::size_t> dims;
    std::size_t start = 6;
    while (start <= name.size()) {
      const std::size_t end = name.find('_', start);
      dims.push_back(parse_count(name.substr(start, end - start)));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return block_fixture(dims);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace c0ideal

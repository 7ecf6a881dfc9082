// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "c0ideal/commands.hpp"
#include "c0ideal/decomposition.hpp"
#include "c0ideal/fixtures.hpp"
#include "c0ideal/lie.hpp"
#include "c0ideal/sampling.hpp"
#include "support/oracles.hpp"

using namespace c0ideal;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

const std::vector<std::vector<std::size_t>> grid_specs{{2}, {1, 1}, {1, 2}, {1, 1, 1}};

// Families bound large enough for n·|X| = 8·3.
constexpr std::size_t grid_family_bound = 64;

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_text(const IndexSet& s) { return format_set(s, 1); }

Outcome gamma_table() {
  Outcome o;
  const BoundedLattice l = bh2_fixture().lattice;
  const std::vector<std::string> printed{"{1,3,6}",         "{1,2,4}",         "{1,2,3,5,6,8}",   "{1,2,3,4,6}",
                                         "{1,2,3,4,5,7}",   "{1,2,3,4,5,6,8}", "{1,2,3,4,5,6,7}", "{1,2,3,4,5,6,7,8}"};
  for (Index j = 1; j < 9; ++j) {
    if (set_text(compute_gamma(l, j)) != printed[j - 1]) o.fail("gamma_" + std::to_string(j + 1));
  }
  std::ostringstream out;
  run_command("gamma", problem_from_fixture(bh2_fixture(), std::nullopt), {}, out);
  if (out.str() != read_file(std::string(C0IDEAL_SOURCE_DIR) + "/tests/golden/bh2_gamma.txt")) {
    o.fail("output differs from golden file");
  }
  return o;
}

Outcome chain_reduction() {
  Outcome o;
  std::size_t families = 0;
  for (std::size_t m = 3; m <= 8; ++m) {
    const BoundedLattice l = chain_fixture(m).lattice;
    for (std::size_t points = 0; points <= 3; ++points) {
      const auto all = enumerate_compatible_families(l, SpaceModel(points), grid_family_bound);
      // Compatible families on a chain are the nested sequences: m^|X| of them.
      if (all.size() != power(m, points)) o.fail("family count for m=" + std::to_string(m));
      for (const ClosedFamily& s : all) {
        ++families;
        for (Index j = 1; j < m; ++j) {
          if (union_over_gamma(l, s, j) != s[j - 1]) o.fail("m=" + std::to_string(m) + " j=" + std::to_string(j + 1));
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(families) + " families";
  return o;
}

Outcome bijection() {
  Outcome o;
  std::string sample;
  for (const auto& dims : grid_specs) {
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec(dims));
    const BoundedLattice& l = ideals.lattice;
    for (std::size_t points = 1; points <= 3; ++points) {
      const SpaceModel x(points);
      const auto families = enumerate_compatible_families(l, x, grid_family_bound);
      const auto all = enumerate_all_ideals(ideals, x);
      const std::size_t expected = power(power(2, dims.size()), points);
      if (families.size() != all.size() || all.size() != expected) o.fail("count mismatch");
      if (dims == std::vector<std::size_t>{1, 1} && points == 2) {
        sample = std::to_string(families.size()) + " = " + std::to_string(all.size()) + " for [1,1], |X|=2";
      }
      for (const ClosedFamily& s : families) {
        if (recover_S(l, theta(l, s)) != s) o.fail("recover(theta(S)) != S");
      }
      for (const PointwiseIdeal& j : all) {
        if (theta(l, recover_S(l, j)) != j) o.fail("theta(recover(J)) != J");
      }
    }
  }
  if (o.passed) o.detail = sample;
  return o;
}

Outcome finite_sum() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& dims : grid_specs) {
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec(dims));
    const BoundedLattice& l = ideals.lattice;
    for (std::size_t points = 1; points <= 3; ++points) {
      for (const ClosedFamily& s : enumerate_compatible_families(l, SpaceModel(points), grid_family_bound)) {
        ++checked;
        for (const IdentityCheck& c : verify_theorem(l, s, &ideals)) {
          if (!c.passed) o.fail(c.identity);
        }
        // Union reduction recomputed from the order alone.
        for (Index i = 0; i < l.size(); ++i) {
          if (i == l.top()) continue;
          PointSet meet = s.space.all();
          for (Index r = 0; r < l.size(); ++r) {
            if (l.leq(r, i)) continue;
            PointSet u;
            for (Index k = 0; k < l.size(); ++k) {
              if (!l.leq(r, k)) u = u | s[k];
            }
            meet = meet & u;
          }
          if (meet != s[i]) o.fail("union reduction at i=" + std::to_string(i + 1));
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " families";
  return o;
}

Outcome ideal_from_y() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& dims : grid_specs) {
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec(dims));
    for (std::size_t points = 1; points <= 3; ++points) {
      const SpaceModel x(points);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << points); ++bits) {
        const PointSet y(bits);
        for (Index t = 0; t < ideals.lattice.size(); ++t) {
          ++pairs;
          const IdealFromYResult r = ideal_from_Y_and_I(ideals, x, y, t);
          if (!r.lattice_sum_matches || !r.subspace_sum_matches.value_or(false)) o.fail("sum mismatch");
          // { f : f(Y) ⊆ I_t }: stalk I_t on Y, A elsewhere.
          PointwiseIdeal expected;
          for (std::size_t p = 0; p < points; ++p) expected.stalks.push_back(y.contains(p) ? t : ideals.lattice.top());
          if (r.ideal != expected) o.fail("stalks differ from the direct description");
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " (Y, t) pairs";
  return o;
}

Outcome normalizer_decomposition() {
  Outcome o;
  std::size_t ideals_checked = 0;
  for (std::size_t n : {2, 3}) {
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec({n}));
    for (std::size_t points = 0; points <= 2; ++points) {
      const SpaceModel x(points);
      const FunctionAlgebra b(ideals.spec, x);
      const Subspace z = b.central_functions();
      for (const PointwiseIdeal& j : enumerate_all_ideals(ideals, x)) {
        ++ideals_checked;
        const Subspace js = b.ideal_subspace(ideals, j);
        const Subspace n_j = lie_normalizer(b, js);
        if (n_j != sum(js, z)) o.fail("N(J) != J + Z(B)");
        if (normalizer_decomposition_check(ideals, x, j).status != CheckStatus::passed) o.fail("check failed");
        // Pointwise: dim N(J) = Σ_x (n² if J(x) = A else 1).
        std::size_t expected = 0;
        for (Index stalk : j.stalks) expected += stalk == ideals.lattice.top() ? n * n : 1;
        if (n_j.dim() != expected) o.fail("dimension");
      }
    }
  }
  const IdealLattice m2 = enumerate_ideals(AlgebraSpec({2}));
  const FunctionAlgebra b(m2.spec, SpaceModel(2));
  const std::size_t dim5 = lie_normalizer(b, b.ideal_subspace(m2, PointwiseIdeal{{0, 1}})).dim();
  if (dim5 != 5) o.fail("M_2, |X|=2, Y={0}: dim " + std::to_string(dim5));
  if (o.passed) o.detail = std::to_string(ideals_checked) + " ideals; M_2, |X|=2, Y={0}: dim N(J) = 5";
  return o;
}

Outcome sandwich() {
  Outcome o;
  std::mt19937 rng(20240607);
  std::size_t discrepancies = 0;
  std::size_t generated = 0;
  std::size_t non_lie = 0;
  const IdealLattice m2 = enumerate_ideals(AlgebraSpec({2}));
  for (std::size_t points = 1; points <= 2; ++points) {
    const SandwichSearch search(m2, SpaceModel(points));
    const FunctionAlgebra& b = search.algebra();
    for (std::size_t k = 0; k < search.ideals().size(); ++k) {
      const Subspace lower = commutator_ideal_span(b, search.ideal_space(k));
      const Subspace upper = lie_normalizer(b, search.ideal_space(k));
      for (int trial = 0; trial < 200; ++trial) {
        ++generated;
        const Subspace l = random_subspace_between(lower, upper, rng);
        if (!is_lie_ideal(b, l) || !search.witness_index(l)) ++discrepancies;
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const Subspace l = random_sparse_subspace(b.dimension(), rng);
      const bool lie = is_lie_ideal(b, l);
      const bool witnessed = search.witness_index(l).has_value();
      if (lie != witnessed) ++discrepancies;
      if (!lie) ++non_lie;
    }
  }
  if (discrepancies != 0) o.fail(std::to_string(discrepancies) + " discrepancies");
  if (non_lie == 0) o.fail("random subspaces never left the Lie ideals");
  if (o.passed) {
    o.detail = std::to_string(generated) + " sandwiched, 400 random (" + std::to_string(non_lie) +
               " non-Lie), 0 discrepancies";
  }
  return o;
}

Outcome cqp() {
  Outcome o;
  for (const auto& dims : grid_specs) {
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec(dims));
    for (std::size_t points = 1; points <= 3; ++points) {
      const SpaceModel x(points);
      const bool c = check_cqp(ideals, x).holds;
      const bool w = weak_centrality(ideals, x);
      if (!c || !w) o.fail("cqp/weak-centrality false");
      const CqpTransferReport t = cqp_transfer_check(ideals.spec, x);
      if (t.skipped || !all_passed(t.checks)) o.fail("transfer");
    }
  }
  if (o.passed) o.detail = "12 algebras";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::size_t assignments = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const BoundedLattice& l : oracle::all_lattices(n)) {
      for (std::size_t points = 0; points <= 3; ++points) {
        const std::uint64_t per_set = std::uint64_t{1} << points;
        const std::uint64_t total = power(per_set, n);
        for (std::uint64_t code = 0; code < total; ++code) {
          ClosedFamily s{SpaceModel(points), {}};
          std::uint64_t c = code;
          for (std::size_t i = 0; i < n; ++i) {
            s.sets.push_back(PointSet(c % per_set));
            c /= per_set;
          }
          ++assignments;
          if (is_compatible(l, s, CompatibilityMode::pairwise) != is_compatible(l, s, CompatibilityMode::exhaustive)) {
            o.fail("disagreement");
          }
        }
      }
    }
  }
  std::size_t cases = 0;
  for (const auto& [dims, points] : std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{
           {{1}, 1}, {{1}, 2}, {{1}, 3}, {{1}, 4}, {{1}, 5}, {{1, 1}, 1}, {{1, 1}, 2}, {{1, 1, 1}, 1},
           {{2}, 1}, {{1, 2}, 1}, {{1, 1, 1, 1}, 1}, {{1, 1, 1, 1, 1}, 1}}) {
    ++cases;
    const IdealLattice ideals = enumerate_ideals(AlgebraSpec(dims));
    const SpaceModel x(points);
    const FunctionAlgebra b(ideals.spec, x);
    std::set<std::string> ours;
    for (const PointwiseIdeal& j : enumerate_all_ideals(ideals, x)) ours.insert(oracle::key(b.ideal_subspace(ideals, j)));
    std::set<std::string> found;
    for (const Subspace& s : oracle::grid_ideals(dims, points)) found.insert(oracle::key(s));
    if (ours != found) o.fail("ideal search mismatch");
    if (points == 1) {
      std::set<std::string> blocks;
      for (const BlockIdeal& i : ideals.ideals) blocks.insert(oracle::key(i.subspace()));
      if (blocks != found) o.fail("enumerate_ideals incomplete");
    }
  }
  if (o.passed) o.detail = std::to_string(assignments) + " assignments, " + std::to_string(cases) + " algebras";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "gamma table of the 9-element lattice", 1, gamma_table},
      {2, "chain reduction, m = 3..8, |X| <= 3", 5, chain_reduction},
      {3, "bijection between families and ideals", 30, bijection},
      {4, "finite-sum decomposition and union reduction", 60, finite_sum},
      {5, "ideal from (Y, I_t)", 10, ideal_from_y},
      {6, "normalizer decomposition, M_2 and M_3", 10, normalizer_decomposition},
      {7, "sandwich characterization of Lie ideals", 60, sandwich},
      {8, "centre-quotient property and weak centrality", 10, cqp},
      {9, "oracle agreement", 120, oracle_agreement},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.fail("time limit exceeded");
    if (!o.passed) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing << "]";
    if (!o.detail.empty()) std::cout << " " << o.detail;
    std::cout << std::endl;
  }
  return failures;
}

#include "c0ideal/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "c0ideal/decomposition.hpp"
#include "c0ideal/fixtures.hpp"
#include "c0ideal/lie.hpp"
#include "c0ideal/sampling.hpp"

namespace c0ideal {

namespace {

using nlohmann::json;

std::string label(Index i) { return "I_" + std::to_string(i + 1); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

const ClosedFamily& need_family(const Problem& p) {
  if (!p.family) throw InputError("this command needs a \"family\"");
  return *p.family;
}

const IdealLattice& need_concrete(const Problem& p) {
  if (!p.concrete) throw InputError("this command needs a concrete algebra (\"blocks\")");
  return *p.concrete;
}

constexpr std::size_t raw_assignment_cap = 16;

std::size_t family_bound(const CommandOptions& o) { return o.bound.value_or(default_family_bound); }

std::vector<ClosedFamily> all_families(const Problem& p, const CommandOptions& o) {
  try {
    return enumerate_compatible_families(p.lattice, p.space, family_bound(o));
  } catch (const std::length_error& e) {
    throw InputError(std::string(e.what()) + " (raise it with --bound)");
  }
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].to_string();
  }
  return out + ")";
}

std::string describe_failure(const CompatibilityFailure& f) {
  return "gamma=" + format_set(f.gamma, 1) + " meet=" + label(f.meet) + " intersection=" +
         format_set(f.intersection) + " expected=" + format_set(f.expected);
}

// Throws InputError with the first violated condition when the family is not
// compatible in the requested mode.
void require_compatible(const Problem& p, const ClosedFamily& family, CompatibilityMode mode) {
  if (auto f = find_incompatibility(p.lattice, family, mode)) {
    throw InputError("family is not compatible: " + describe_failure(*f));
  }
}

CompatibilityMode mode_of(const CommandOptions& o) {
  return o.oracle ? CompatibilityMode::exhaustive : CompatibilityMode::pairwise;
}

int cmd_validate(const Problem& p, const CommandOptions&, std::ostream& out) {
  out << "lattice: " << p.lattice.size() << " elements, bottom " << label(p.lattice.bottom()) << ", top "
      << label(p.lattice.top()) << "\n";
  if (auto v = validate_lattice(p.lattice)) {
    out << "FAIL " << v->law << " at (";
    for (std::size_t k = 0; k < v->witnesses.size(); ++k) out << (k ? "," : "") << label(v->witnesses[k]);
    out << "): " << v->detail << "\n";
    return 1;
  }
  out << "PASS lattice laws\n";
  out << "distributive: " << yes_no(is_distributive(p.lattice)) << "\n";
  return 0;
}

int cmd_compat(const Problem& p, const CommandOptions& o, std::ostream& out) {
  const ClosedFamily& family = need_family(p);
  out << "mode: " << (o.oracle ? "exhaustive" : "pairwise") << "\n";
  if (auto f = find_incompatibility(p.lattice, family, mode_of(o))) {
    out << "compatible: no\n" << "violation: " << describe_failure(*f) << "\n";
    return 1;
  }
  out << "compatible: yes\n";
  return 0;
}

int cmd_gamma(const Problem& p, const CommandOptions&, std::ostream& out) {
  for (Index j = 0; j < p.lattice.size(); ++j) {
    if (j == p.lattice.bottom()) continue;
    out << "gamma_" << j + 1 << " = " << format_set(compute_gamma(p.lattice, j), 1) << "\n";
  }
  return 0;
}

int cmd_theta(const Problem& p, const CommandOptions& o, std::ostream& out) {
  const ClosedFamily& family = need_family(p);
  require_compatible(p, family, mode_of(o));
  json doc = problem_header_json(p);
  doc["ideal"] = ideal_to_json(theta(p.lattice, family));
  out << doc.dump() << "\n";
  return 0;
}

int cmd_recover(const Problem& p, const CommandOptions&, std::ostream& out) {
  if (!p.ideal) throw InputError("recover needs an \"ideal\"");
  json doc = problem_header_json(p);
  doc["family"] = family_to_json(recover_S(p.lattice, *p.ideal));
  out << doc.dump() << "\n";
  return 0;
}

int cmd_decompose(const Problem& p, const CommandOptions& o, std::ostream& out) {
  const ClosedFamily& family = need_family(p);
  require_compatible(p, family, mode_of(o));
  const Decomposition full = decompose(p.lattice, family);
  const Decomposition shown = o.minimal ? minimal_terms(full) : full;
  for (const ProductTerm& t : shown.terms) {
    out << "term " << label(t.ideal) << " vanish_on=" << format_set(t.vanish_on) << "\n";
  }
  const PointwiseIdeal evaluated = evaluate(p.lattice, shown);
  const PointwiseIdeal expected = theta(p.lattice, family);
  out << "evaluate = " << format_stalks(evaluated) << "\n";
  out << "theta    = " << format_stalks(expected) << "\n";
  out << pass_fail(evaluated == expected) << " evaluate-equals-theta\n";
  return evaluated == expected ? 0 : 1;
}

int cmd_verify_fin_sum(const Problem& p, const CommandOptions& o, std::ostream& out) {
  std::vector<ClosedFamily> families;
  if (p.family) {
    require_compatible(p, *p.family, mode_of(o));
    families.push_back(*p.family);
  } else {
    families = all_families(p, o);
  }
  const IdealLattice* concrete = p.concrete ? &*p.concrete : nullptr;
  std::size_t passed = 0;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const auto checks = verify_theorem(p.lattice, families[k], concrete);
    for (const IdentityCheck& c : checks) out << format_check_line(p.name, k + 1, c) << "\n";
    if (all_passed(checks)) ++passed;
  }
  const bool ok = passed == families.size();
  out << passed << "/" << families.size() << " families " << pass_fail(ok) << "\n";
  return ok ? 0 : 1;
}

int cmd_ideal_from_y(const Problem& p, const CommandOptions&, std::ostream& out) {
  if (!p.y || !p.ideal_index) throw InputError("ideal-from-y needs \"Y\" and \"ideal_index\"");
  const IdealFromYResult r = p.concrete ? ideal_from_Y_and_I(*p.concrete, p.space, *p.y, *p.ideal_index)
                                        : ideal_from_Y_and_I(p.lattice, p.space, *p.y, *p.ideal_index);
  out << "ideal = " << format_stalks(r.ideal) << "\n";
  out << pass_fail(r.lattice_sum_matches) << " lattice-sum\n";
  bool ok = r.lattice_sum_matches;
  if (r.subspace_sum_matches) {
    out << pass_fail(*r.subspace_sum_matches) << " subspace-sum\n";
    ok = ok && *r.subspace_sum_matches;
  }
  return ok ? 0 : 1;
}

// The ideal named by "ideal" or by theta("family"), if any.
std::optional<PointwiseIdeal> named_ideal(const Problem& p, const CommandOptions& o) {
  if (p.ideal) return p.ideal;
  if (p.family) {
    require_compatible(p, *p.family, mode_of(o));
    return theta(p.lattice, *p.family);
  }
  return std::nullopt;
}

int cmd_normalizer(const Problem& p, const CommandOptions& o, std::ostream& out) {
  const IdealLattice& ideals = need_concrete(p);
  const FunctionAlgebra algebra(ideals.spec, p.space);
  const std::optional<PointwiseIdeal> single = named_ideal(p, o);
  const std::vector<PointwiseIdeal> targets =
      single ? std::vector<PointwiseIdeal>{*single} : enumerate_all_ideals(ideals, p.space);
  bool ok = true;
  for (const PointwiseIdeal& j : targets) {
    const Subspace js = algebra.ideal_subspace(ideals, j);
    const Subspace n = lie_normalizer(algebra, js);
    const Subspace expected = sum(js, algebra.central_functions());
    const bool equal = n == expected;
    out << "J = " << format_stalks(j) << " dim J = " << js.dim() << " dim N(J) = " << n.dim()
        << " dim J+Z(B) = " << expected.dim() << " N(J) = J+Z(B): " << yes_no(equal) << "\n";
    if (single) {
      for (const Vector& v : n.basis()) out << "  " << format_vector(v) << "\n";
    }
    if (ideals.spec.block_count() == 1) {
      ok = ok && equal;
    }
  }
  if (ideals.spec.block_count() == 1) {
    out << pass_fail(ok) << " normalizer-decomposition\n";
  } else {
    out << "SKIP normalizer-decomposition: A has " << ideals.spec.block_count()
        << " blocks; the decomposition needs a unique maximal ideal\n";
  }
  return ok ? 0 : 1;
}

int cmd_sandwich(const Problem& p, const CommandOptions&, std::ostream& out) {
  const IdealLattice& ideals = need_concrete(p);
  if (!p.subspace) throw InputError("sandwich needs a \"subspace\"");
  const FunctionAlgebra algebra(ideals.spec, p.space);
  const LieCandidate candidate(algebra, rref(*p.subspace, algebra.dimension()));
  const bool lie = is_lie_ideal(candidate);
  const std::optional<PointwiseIdeal> witness = sandwich_witness(ideals, candidate);
  out << "dim L = " << candidate.space.dim() << "\n";
  out << "lie-ideal: " << yes_no(lie) << "\n";
  out << "witness: " << (witness ? format_stalks(*witness) : std::string("none")) << "\n";
  const bool agree = lie == witness.has_value();
  out << pass_fail(agree) << " lie-ideal-iff-witness\n";
  return agree ? 0 : 1;
}

int cmd_cqp(const Problem& p, const CommandOptions&, std::ostream& out) {
  const IdealLattice& ideals = need_concrete(p);
  const CqpReport report = check_cqp(ideals, p.space);
  for (const NormalizerCheck& c : report.per_ideal) {
    out << pass_fail(c.passed) << " J = " << format_stalks(c.ideal) << " dim J = " << c.ideal_dim
        << " dim N(J) = " << c.normalizer_dim << " dim J+Z(B) = " << c.expected_dim << "\n";
  }
  out << "cqp: " << (report.holds ? "holds" : "fails") << "\n";
  return report.holds ? 0 : 1;
}

int cmd_weak_central(const Problem& p, const CommandOptions&, std::ostream& out) {
  const IdealLattice& ideals = need_concrete(p);
  const bool weak = weak_centrality(ideals, p.space);
  out << "maximal ideals: " << maximal_ideals(ideals.lattice, p.space).size() << "\n";
  out << "weak-centrality: " << (weak ? "holds" : "fails") << "\n";
  const CqpTransferReport t = cqp_transfer_check(ideals.spec, p.space);
  if (t.skipped) {
    out << "SKIP cqp-transfer: |X| = 0, B is the zero algebra\n";
    return weak ? 0 : 1;
  }
  for (const IdentityCheck& c : t.checks) out << pass_fail(c.passed) << " " << c.identity << "\n";
  return weak && all_passed(t.checks) ? 0 : 1;
}

// verify-all: each suite reports one line.
struct SuiteResult {
  enum Kind { pass, fail, skip } kind;
  std::string detail;
};

class SuiteRunner {
 public:
  explicit SuiteRunner(std::ostream& out) : out_(out) {}

  void run(const std::string& name, const std::function<SuiteResult()>& suite) {
    SuiteResult r;
    try {
      r = suite();
    } catch (const InputError& e) {
      r = {SuiteResult::skip, e.what()};
    } catch (const std::length_error& e) {
      r = {SuiteResult::skip, e.what()};
    }
    const char* tag = r.kind == SuiteResult::pass ? "PASS" : r.kind == SuiteResult::fail ? "FAIL" : "SKIP";
    out_ << tag << " " << name;
    if (!r.detail.empty()) out_ << ": " << r.detail;
    out_ << "\n";
    if (r.kind != SuiteResult::skip) ++run_;
    if (r.kind == SuiteResult::pass) ++passed_;
  }

  int finish() {
    const bool ok = passed_ == run_;
    out_ << passed_ << "/" << run_ << " suites " << pass_fail(ok) << "\n";
    return ok ? 0 : 1;
  }

 private:
  std::ostream& out_;
  std::size_t run_ = 0;
  std::size_t passed_ = 0;
};

SuiteResult from_counts(std::size_t good, std::size_t total, const std::string& noun) {
  return {good == total ? SuiteResult::pass : SuiteResult::fail,
          std::to_string(good) + "/" + std::to_string(total) + " " + noun};
}

int cmd_verify_all(const Problem& p, const CommandOptions& o, std::ostream& out) {
  SuiteRunner runner(out);
  const BoundedLattice& L = p.lattice;
  const std::size_t n = L.size();
  const auto violation = validate_lattice(L);
  runner.run("lattice-laws", [&] {
    return violation ? SuiteResult{SuiteResult::fail, violation->law + ": " + violation->detail}
                     : SuiteResult{SuiteResult::pass, std::to_string(n) + " elements"};
  });
  if (violation) return runner.finish();
  if (!is_distributive(L)) out << "NOTE lattice is not distributive\n";

  runner.run("gamma-monotonicity", [&] {
    std::size_t good = 0;
    std::size_t total = 0;
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (!L.leq(j, k)) continue;
        ++total;
        if (compute_gamma(L, j).subset_of(compute_gamma(L, k))) ++good;
      }
    }
    return from_counts(good, total, "comparable pairs");
  });

  runner.run("compat-oracle-agreement", [&] {
    const std::size_t points = p.space.point_count();
    // Every raw assignment is visited, so this suite has its own cap.
    if ((n - 1) * points > raw_assignment_cap) {
      throw InputError("needs (size - 1) * |X| <= " + std::to_string(raw_assignment_cap));
    }
    const std::uint64_t subsets = std::uint64_t{1} << points;
    std::size_t total = 0;
    std::size_t good = 0;
    ClosedFamily family{p.space, std::vector<PointSet>(n)};
    family.sets[L.top()] = p.space.all();
    std::function<void(Index)> assign = [&](Index i) {
      if (i == n) {
        ++total;
        if (is_compatible(L, family, CompatibilityMode::pairwise) ==
            is_compatible(L, family, CompatibilityMode::exhaustive)) {
          ++good;
        }
        return;
      }
      if (i == L.top()) return assign(i + 1);
      for (std::uint64_t bits = 0; bits < subsets; ++bits) {
        family.sets[i] = PointSet(bits);
        assign(i + 1);
      }
    };
    assign(0);
    return from_counts(good, total, "assignments");
  });

  std::optional<std::vector<ClosedFamily>> families;
  runner.run("bijection", [&] {
    families = all_families(p, o);
    const std::vector<PointwiseIdeal> ideals =
        p.concrete ? enumerate_all_ideals(*p.concrete, p.space) : enumerate_all_ideals(L, p.space);
    std::size_t good = 0;
    for (const PointwiseIdeal& j : ideals) good += theta(L, recover_S(L, j)) == j;
    for (const ClosedFamily& s : *families) good += recover_S(L, theta(L, s)) == s;
    const bool ok = good == ideals.size() + families->size() && ideals.size() == families->size();
    return SuiteResult{ok ? SuiteResult::pass : SuiteResult::fail,
                       std::to_string(families->size()) + " families, " + std::to_string(ideals.size()) +
                           " ideals"};
  });

  runner.run("fin-sum", [&] {
    if (!families) throw InputError("family enumeration out of bounds");
    std::size_t good = 0;
    const IdealLattice* concrete = p.concrete ? &*p.concrete : nullptr;
    for (const ClosedFamily& s : *families) good += all_passed(verify_theorem(L, s, concrete));
    return from_counts(good, families->size(), "families");
  });

  runner.run("ideal-from-y", [&] {
    std::size_t good = 0;
    std::size_t total = 0;
    for (std::uint64_t bits = 0; bits <= p.space.all().bits(); ++bits) {
      for (Index t = 0; t < n; ++t) {
        const IdealFromYResult r = p.concrete ? ideal_from_Y_and_I(*p.concrete, p.space, PointSet(bits), t)
                                              : ideal_from_Y_and_I(L, p.space, PointSet(bits), t);
        ++total;
        good += r.lattice_sum_matches && r.subspace_sum_matches.value_or(true);
      }
    }
    return from_counts(good, total, "(Y, t) pairs");
  });

  if (!p.concrete) {
    out << "NOTE abstract lattice: linear-algebra suites need \"blocks\"\n";
    return runner.finish();
  }
  const IdealLattice& ideals = *p.concrete;
  const FunctionAlgebra algebra(ideals.spec, p.space);

  runner.run("commutator-intersection", [&] {
    const Subspace brackets = algebra.commutator_span();
    const auto all = enumerate_all_ideals(ideals, p.space);
    std::size_t good = 0;
    for (const PointwiseIdeal& j : all) {
      const Subspace js = algebra.ideal_subspace(ideals, j);
      good += commutator_ideal_span(algebra, js) == intersect(js, brackets);
    }
    return from_counts(good, all.size(), "ideals");
  });

  runner.run("cqp", [&] {
    const CqpReport r = check_cqp(ideals, p.space);
    std::size_t good = 0;
    for (const NormalizerCheck& c : r.per_ideal) good += c.passed;
    return from_counts(good, r.per_ideal.size(), "ideals with N(J) = J + Z(B)");
  });

  runner.run("weak-centrality", [&] {
    const bool weak = weak_centrality(ideals, p.space);
    return SuiteResult{weak ? SuiteResult::pass : SuiteResult::fail,
                       std::to_string(maximal_ideals(ideals.lattice, p.space).size()) + " maximal ideals"};
  });

  runner.run("cqp-transfer", [&] {
    const CqpTransferReport t = cqp_transfer_check(ideals.spec, p.space);
    if (t.skipped) return SuiteResult{SuiteResult::skip, "|X| = 0, B is the zero algebra"};
    std::size_t good = 0;
    for (const IdentityCheck& c : t.checks) good += c.passed;
    return from_counts(good, t.checks.size(), "implications");
  });

  runner.run("normalizer-decomposition", [&] {
    const auto all = enumerate_all_ideals(ideals, p.space);
    std::size_t good = 0;
    for (const PointwiseIdeal& j : all) {
      const NormalizerDecompositionReport r = normalizer_decomposition_check(ideals, p.space, j);
      if (r.status == CheckStatus::precondition_violated) return SuiteResult{SuiteResult::skip, r.message};
      good += r.status == CheckStatus::passed;
    }
    return from_counts(good, all.size(), "ideals");
  });

  runner.run("sandwich", [&] {
    constexpr std::size_t per_ideal = 20;
    constexpr std::size_t sparse = 50;
    std::mt19937 rng(o.seed);
    const SandwichSearch search(ideals, p.space);
    std::size_t good = 0;
    std::size_t total = 0;
    for (std::size_t k = 0; k < search.ideals().size(); ++k) {
      for (std::size_t r = 0; r < per_ideal; ++r) {
        const Subspace l = random_subspace_between(search.lower(k), search.upper(k), rng);
        ++total;
        good += is_lie_ideal(algebra, l) && search.witness_index(l).has_value();
      }
    }
    for (std::size_t r = 0; r < sparse; ++r) {
      const Subspace l = random_sparse_subspace(algebra.dimension(), rng);
      ++total;
      good += is_lie_ideal(algebra, l) == search.witness_index(l).has_value();
    }
    return from_counts(good, total, "subspaces (seed " + std::to_string(o.seed) + ")");
  });

  return runner.finish();
}

using Handler = int (*)(const Problem&, const CommandOptions&, std::ostream&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"validate", cmd_validate},       {"compat", cmd_compat},
      {"gamma", cmd_gamma},             {"theta", cmd_theta},
      {"recover", cmd_recover},         {"decompose", cmd_decompose},
      {"verify-fin-sum", cmd_verify_fin_sum}, {"ideal-from-y", cmd_ideal_from_y},
      {"normalizer", cmd_normalizer},   {"sandwich", cmd_sandwich},
      {"cqp", cmd_cqp},                 {"weak-central", cmd_weak_central},
      {"verify-all", cmd_verify_all},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& problem_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_known_command(const std::string& name) {
  if (name == "fixtures") return true;
  const auto& names = problem_commands();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int run_command(const std::string& name, const Problem& problem, const CommandOptions& options,
                std::ostream& out) {
  for (const auto& [command, handler] : handlers()) {
    if (command != name) continue;
    if (command != "validate" && command != "verify-all") {
      if (auto v = validate_lattice(problem.lattice)) {
        throw InputError("lattice fails " + v->law + ": " + v->detail + " (run validate)");
      }
    }
    return handler(problem, options, out);
  }
  throw InputError("unknown command '" + name + "'");
}

int list_fixtures(std::ostream& out) {
  for (const std::string& name : bundled_fixture_names()) {
    const Fixture f = fixture_by_name(name);
    out << name << " size=" << f.lattice.size();
    if (f.spec) {
      out << " blocks=[";
      const auto& dims = f.spec->block_dims();
      for (std::size_t k = 0; k < dims.size(); ++k) out << (k ? "," : "") << dims[k];
      out << "]";
    } else {
      out << " abstract";
    }
    if (f.family) out << " points=" << f.family->space.point_count();
    out << "\n";
  }
  return 0;
}

}  // namespace c0ideal

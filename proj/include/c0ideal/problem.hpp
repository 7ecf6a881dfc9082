#pragma once

// JSON problem files.
//
//   {
//     "name":   "bh2",                       optional label used in reports
//     "blocks": [1, 1],                      block sizes of A, or
//     "lattice": {"size": 4, "meet": [[...]], "join": [[...]],
//                 "bottom": 1, "top": 4},    abstract lattice, or
//     "generator": {"kind": "chain", "length": 5},
//     "points": 2,                           |X|
//     "family": [[], [0], [1], [0, 1]],      S_1 .. S_n as sorted point lists
//     "ideal": [2, 3],                       stalk label per point
//     "Y": [0], "ideal_index": 2,            operands of ideal-from-y
//     "subspace": [["1", "0", ...], ...]     spanning vectors of a subspace of A^X
//   }
//
// Ideal indices are 1-based labels (I_1 .. I_n) everywhere in the file;
// points are 0-based. Scalars are strings in the form "p/q+r/s i".

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "c0ideal/fdalgebra.hpp"
#include "c0ideal/fixtures.hpp"
#include "c0ideal/function_algebra.hpp"
#include "c0ideal/lattice.hpp"
#include "c0ideal/linalg.hpp"

namespace c0ideal {

/// Bad input: malformed JSON, schema violations, or exceeded bounds.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemLimits {
  std::size_t max_lattice_size = 12;
  std::size_t max_points = 4;
  std::size_t max_algebra_dim = 32;
};

struct Problem {
  std::string name = "problem";
  BoundedLattice lattice{{{0}}, {{0}}, 0, 0};
  std::optional<IdealLattice> concrete;
  bool lattice_from_blocks = false;  // lattice indices are block bitmasks
  SpaceModel space{0};
  std::optional<ClosedFamily> family;
  std::optional<PointwiseIdeal> ideal;
  std::optional<PointSet> y;
  std::optional<Index> ideal_index;  // 0-based
  std::optional<std::vector<Vector>> subspace;
};

/// Throws InputError; parse failures report line and column.
Problem parse_problem_text(std::string_view text, const ProblemLimits& limits = {});
Problem parse_problem(const nlohmann::json& doc, const ProblemLimits& limits = {});

/// Problem built from a bundled fixture, with the fixture's sample family when
/// its point count matches (or when `points` is not given).
Problem problem_from_fixture(const Fixture& fixture, std::optional<std::size_t> points,
                             const ProblemLimits& limits = {});

/// The lattice source (blocks or lattice tables), name and points. Operands
/// are added by the caller.
nlohmann::json problem_header_json(const Problem& problem);

nlohmann::json family_to_json(const ClosedFamily& family);
nlohmann::json ideal_to_json(const PointwiseIdeal& ideal);

/// "(I_2,I_3)".
std::string format_stalks(const PointwiseIdeal& ideal);

}  // namespace c0ideal

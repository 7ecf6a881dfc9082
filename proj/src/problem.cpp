#include "c0ideal/problem.hpp"

#include <algorithm>
#include <sstream>

namespace c0ideal {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw InputError(message); }

std::size_t get_count(const json& value, const std::string& what) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) fail(what + " must be an integer");
  const auto v = value.get<long long>();
  if (v < 0) fail(what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

// 1-based label in [1, n] -> 0-based index.
Index get_label(const json& value, std::size_t n, const std::string& what) {
  const std::size_t v = get_count(value, what);
  if (v < 1 || v > n) fail(what + " must be an ideal label between 1 and " + std::to_string(n));
  return v - 1;
}

PointSet get_point_set(const json& value, SpaceModel space, const std::string& what) {
  if (!value.is_array()) fail(what + " must be a list of points");
  PointSet s;
  for (const json& p : value) {
    const std::size_t x = get_count(p, what + " entry");
    if (x >= space.point_count()) {
      fail(what + " contains point " + std::to_string(x) + " outside [0, " +
           std::to_string(space.point_count()) + ")");
    }
    if (s.contains(x)) fail(what + " lists point " + std::to_string(x) + " twice");
    s.insert(x);
  }
  return s;
}

BoundedLattice::Table get_table(const json& value, std::size_t n, const std::string& what) {
  if (!value.is_array() || value.size() != n) fail(what + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " table");
  BoundedLattice::Table table;
  for (const json& row : value) {
    if (!row.is_array() || row.size() != n) fail(what + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " table");
    std::vector<Index> r;
    for (const json& cell : row) r.push_back(get_label(cell, n, what + " entry"));
    table.push_back(std::move(r));
  }
  return table;
}

BoundedLattice parse_lattice(const json& value, const ProblemLimits& limits) {
  if (!value.is_object()) fail("\"lattice\" must be an object");
  for (const char* key : {"size", "meet", "join", "bottom", "top"}) {
    if (!value.contains(key)) fail(std::string("\"lattice\" is missing \"") + key + "\"");
  }
  const std::size_t n = get_count(value["size"], "lattice size");
  if (n == 0) fail("lattice size must be positive");
  if (n > limits.max_lattice_size) {
    fail("lattice size " + std::to_string(n) + " exceeds the bound " + std::to_string(limits.max_lattice_size));
  }
  return BoundedLattice(get_table(value["meet"], n, "meet"), get_table(value["join"], n, "join"),
                        get_label(value["bottom"], n, "bottom"), get_label(value["top"], n, "top"));
}

BoundedLattice parse_generator(const json& value, const ProblemLimits& limits) {
  if (!value.is_object() || !value.contains("kind")) fail("\"generator\" needs a \"kind\"");
  if (value["kind"] != "chain") fail("unknown generator kind (only \"chain\" is supported)");
  if (!value.contains("length")) fail("chain generator needs \"length\"");
  const std::size_t m = get_count(value["length"], "chain length");
  if (m < 2) fail("chain length must be at least 2");
  if (m > limits.max_lattice_size) fail("chain length exceeds the lattice bound");
  return chain_fixture(m).lattice;
}

std::vector<std::size_t> parse_blocks(const json& value) {
  if (!value.is_array() || value.empty()) fail("\"blocks\" must be a nonempty list of block sizes");
  std::vector<std::size_t> dims;
  for (const json& b : value) {
    const std::size_t d = get_count(b, "block size");
    if (d == 0) fail("block sizes must be positive");
    dims.push_back(d);
  }
  return dims;
}

void check_algebra_limits(const AlgebraSpec& spec, const ProblemLimits& limits) {
  if (spec.dimension() > limits.max_algebra_dim) {
    fail("algebra dimension " + std::to_string(spec.dimension()) + " exceeds the bound " +
         std::to_string(limits.max_algebra_dim));
  }
  if (spec.block_count() >= 63 || (std::size_t{1} << spec.block_count()) > limits.max_lattice_size) {
    fail("ideal lattice of " + std::to_string(spec.block_count()) + " blocks exceeds the lattice bound " +
         std::to_string(limits.max_lattice_size));
  }
}

void parse_operands(const json& doc, Problem& p) {
  const std::size_t n = p.lattice.size();
  if (doc.contains("family")) {
    const json& fam = doc["family"];
    if (!fam.is_array() || fam.size() != n) fail("\"family\" must list " + std::to_string(n) + " point sets");
    ClosedFamily family{p.space, {}};
    for (std::size_t i = 0; i < n; ++i) {
      family.sets.push_back(get_point_set(fam[i], p.space, "family set S_" + std::to_string(i + 1)));
    }
    p.family = std::move(family);
  }
  if (doc.contains("ideal")) {
    const json& st = doc["ideal"];
    if (!st.is_array() || st.size() != p.space.point_count()) {
      fail("\"ideal\" must give one stalk label per point");
    }
    PointwiseIdeal ideal;
    for (const json& s : st) ideal.stalks.push_back(get_label(s, n, "stalk"));
    p.ideal = std::move(ideal);
  }
  if (doc.contains("Y")) p.y = get_point_set(doc["Y"], p.space, "\"Y\"");
  if (doc.contains("ideal_index")) p.ideal_index = get_label(doc["ideal_index"], n, "\"ideal_index\"");
  if (doc.contains("subspace")) {
    if (!p.concrete) fail("\"subspace\" needs a concrete algebra (\"blocks\")");
    const std::size_t dim = p.space.point_count() * p.concrete->spec.dimension();
    const json& rows = doc["subspace"];
    if (!rows.is_array()) fail("\"subspace\" must be a list of vectors");
    std::vector<Vector> vectors;
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != dim) {
        fail("\"subspace\" vectors must have " + std::to_string(dim) + " entries");
      }
      Vector v;
      for (const json& entry : row) {
        try {
          if (entry.is_string()) {
            v.push_back(Scalar::parse(entry.get<std::string>()));
          } else if (entry.is_number_integer()) {
            v.push_back(Scalar(entry.get<long>()));
          } else {
            fail("\"subspace\" entries must be strings like \"1/2+3 i\" or integers");
          }
        } catch (const std::invalid_argument& e) {
          fail(std::string("bad scalar in \"subspace\": ") + e.what());
        }
      }
      vectors.push_back(std::move(v));
    }
    p.subspace = std::move(vectors);
  }
}

}  // namespace

Problem parse_problem(const json& doc, const ProblemLimits& limits) {
  if (!doc.is_object()) fail("problem file must be a JSON object");
  Problem p;
  try {
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) fail("\"name\" must be a string");
      p.name = doc["name"].get<std::string>();
    }
    if (doc.contains("lattice") && doc.contains("generator")) {
      fail("give either \"lattice\" or \"generator\", not both");
    }
    std::optional<BoundedLattice> abstract;
    if (doc.contains("lattice")) abstract = parse_lattice(doc["lattice"], limits);
    if (doc.contains("generator")) abstract = parse_generator(doc["generator"], limits);
    if (doc.contains("blocks")) {
      AlgebraSpec spec(parse_blocks(doc["blocks"]));
      check_algebra_limits(spec, limits);
      IdealLattice ideals = enumerate_ideals(spec);
      if (abstract) {
        if (auto v = validate_lattice(*abstract)) fail("\"lattice\" is not a lattice: " + v->detail);
        try {
          ideals = reindex_ideals(ideals, *abstract);
        } catch (const std::invalid_argument&) {
          fail("\"lattice\" and \"blocks\" describe non-isomorphic ideal lattices");
        }
      } else {
        p.lattice_from_blocks = true;
      }
      p.lattice = ideals.lattice;
      p.concrete = std::move(ideals);
    } else if (abstract) {
      p.lattice = *abstract;
    } else {
      fail("problem needs \"blocks\", \"lattice\" or \"generator\"");
    }
    if (doc.contains("points")) {
      const std::size_t points = get_count(doc["points"], "\"points\"");
      if (points > limits.max_points) {
        fail("|X| = " + std::to_string(points) + " exceeds the bound " + std::to_string(limits.max_points));
      }
      p.space = SpaceModel(points);
    }
    parse_operands(doc, p);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid problem file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return p;
}

Problem parse_problem_text(std::string_view text, const ProblemLimits& limits) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column;
    throw InputError(msg.str());
  }
  return parse_problem(doc, limits);
}

Problem problem_from_fixture(const Fixture& fixture, std::optional<std::size_t> points,
                             const ProblemLimits& limits) {
  Problem p;
  p.name = fixture.name;
  if (fixture.lattice.size() > limits.max_lattice_size) fail("fixture lattice exceeds the lattice bound");
  p.lattice = fixture.lattice;
  if (fixture.spec) {
    check_algebra_limits(*fixture.spec, limits);
    p.concrete = reindex_ideals(enumerate_ideals(*fixture.spec), fixture.lattice);
    p.lattice_from_blocks = p.concrete->lattice == enumerate_ideals(*fixture.spec).lattice;
  }
  const std::size_t fixture_points = fixture.family ? fixture.family->space.point_count() : 0;
  const std::size_t n_points = points.value_or(fixture_points);
  if (n_points > limits.max_points) {
    fail("|X| = " + std::to_string(n_points) + " exceeds the bound " + std::to_string(limits.max_points));
  }
  p.space = SpaceModel(n_points);
  if (fixture.family && fixture_points == n_points) p.family = fixture.family;
  return p;
}

json problem_header_json(const Problem& problem) {
  json doc;
  doc["name"] = problem.name;
  if (problem.concrete) doc["blocks"] = problem.concrete->spec.block_dims();
  if (!problem.lattice_from_blocks) {
    const BoundedLattice& l = problem.lattice;
    auto labels = [](const BoundedLattice::Table& t) {
      json rows = json::array();
      for (const auto& row : t) {
        json r = json::array();
        for (Index v : row) r.push_back(v + 1);
        rows.push_back(std::move(r));
      }
      return rows;
    };
    doc["lattice"] = {{"size", l.size()},
                      {"meet", labels(l.meet_table())},
                      {"join", labels(l.join_table())},
                      {"bottom", l.bottom() + 1},
                      {"top", l.top() + 1}};
  }
  doc["points"] = problem.space.point_count();
  return doc;
}

json family_to_json(const ClosedFamily& family) {
  json sets = json::array();
  for (PointSet s : family.sets) sets.push_back(s.elements());
  return sets;
}

json ideal_to_json(const PointwiseIdeal& ideal) {
  json stalks = json::array();
  for (Index s : ideal.stalks) stalks.push_back(s + 1);
  return stalks;
}

std::string format_stalks(const PointwiseIdeal& ideal) {
  std::string out = "(";
  for (std::size_t x = 0; x < ideal.stalks.size(); ++x) {
    if (x) out += ",";
    out += "I_" + std::to_string(ideal.stalks[x] + 1);
  }
  return out + ")";
}

}  // namespace c0ideal

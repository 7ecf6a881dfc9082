#pragma once

// The CLI commands as library functions writing to a stream.
//
// Exit codes: 0 every checked identity passed, 1 a checked identity failed,
// 2 bad input. Input errors are thrown as InputError; run_command itself
// returns only 0 or 1.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "c0ideal/problem.hpp"

namespace c0ideal {

struct CommandOptions {
  bool oracle = false;               // exhaustive-γ compatibility
  bool minimal = false;              // drop terms with Y_j = X
  std::uint32_t seed = 1;            // random-subspace suites
  std::optional<std::size_t> bound;  // family enumeration bound (n·|X|)
};

/// Commands that read a problem, in help order.
const std::vector<std::string>& problem_commands();

bool is_known_command(const std::string& name);

/// Runs a problem command. Throws InputError for unknown commands and for
/// missing or out-of-bounds operands.
int run_command(const std::string& name, const Problem& problem, const CommandOptions& options,
                std::ostream& out);

/// "fixtures": one line per bundled fixture.
int list_fixtures(std::ostream& out);

}  // namespace c0ideal

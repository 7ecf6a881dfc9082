#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "c0ideal/commands.hpp"
#include "c0ideal/fixtures.hpp"
#include "c0ideal/problem.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw c0ideal::InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideals and Lie ideals of C0(X,A) on finite models"};
  std::string command;
  std::string path;
  std::string fixture;
  std::optional<std::size_t> points;
  std::optional<std::size_t> bound;
  c0ideal::CommandOptions options;

  std::string commands = "fixtures";
  for (const std::string& name : c0ideal::problem_commands()) commands += ", " + name;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("problem", path, "Problem JSON file ('-' for stdin)");
  app.add_option("--fixture", fixture, "Use a bundled fixture instead of a file");
  app.add_option("--points", points, "|X| for --fixture (drops the sample family if it differs)");
  app.add_flag("--oracle", options.oracle, "Check compatibility over every subset of indices");
  app.add_flag("--minimal", options.minimal, "decompose: drop terms with Y_j = X");
  app.add_option("--seed", options.seed, "Seed for the random-subspace suites");
  app.add_option("--bound", bound, "Bound on size * |X| for family enumeration (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  options.bound = bound;

  try {
    if (!c0ideal::is_known_command(command)) {
      throw c0ideal::InputError("unknown command '" + command + "' (expected one of: " + commands + ")");
    }
    if (command == "fixtures") return c0ideal::list_fixtures(std::cout);
    c0ideal::Problem problem;
    if (!fixture.empty() && !path.empty()) throw c0ideal::InputError("give a problem file or --fixture, not both");
    if (!fixture.empty()) {
      c0ideal::Fixture f = [&] {
        try {
          return c0ideal::fixture_by_name(fixture);
        } catch (const std::invalid_argument& e) {
          throw c0ideal::InputError(e.what());
        }
      }();
      problem = c0ideal::problem_from_fixture(f, points);
    } else if (!path.empty()) {
      if (points) throw c0ideal::InputError("--points applies only to --fixture");
      problem = c0ideal::parse_problem_text(read_input(path));
    } else {
      throw c0ideal::InputError("command '" + command + "' needs a problem file or --fixture");
    }
    return c0ideal::run_command(command, problem, options, std::cout);
  } catch (const c0ideal::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

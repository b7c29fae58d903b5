#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/cube.hpp"
#include "khcube/diagram.hpp"
#include "khcube/ring.hpp"

namespace khcube::cli {

enum ExitCode : int { ok = 0, validation_failure = 1, resource_abort = 2, property_failure = 3 };

struct RunConfig {
  std::string subcommand;
  std::string input;                // PD code, CSV path or JSON path
  std::optional<Ring> ring;         // unset: the subcommand's default
  bool reduced = false;
  SignRule rule = SignRule::tilde_delta;
  Direction direction = Direction::increasing;
  int max_crossings = kDefaultCrossingCap;
  int threads = 1;
  int crossing = 1;                 // triangle
  std::vector<std::string> checks;  // table: any of cor15, cor16, unknot
  bool extended = true;             // oslemma
  std::string dump_complex, dump_cube, output, emit_family;
};

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Every property suite of the library that applies to one diagram.
std::vector<Check> verify_battery(const PlanarDiagram& d, const RunConfig& cfg);

/// argv[0] is the program name. Output goes to `out` unless -o names a file.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace khcube::cli

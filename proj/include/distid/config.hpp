#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distid/bounds.hpp"
#include "distid/family.hpp"
#include "distid/rng.hpp"

namespace distid {

enum class Command { kBounds, kSimulate, kLemma, kExponent, kSweep };
enum class OutputFormat { kCsv, kJson };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

/// Everything one CLI invocation needs. Fields not used by `command` are ignored.
struct RunConfig {
  std::optional<Command> command;
  std::optional<FamilySpec> family;
  std::optional<FamilySequenceSpec> sequence;  ///< sweep only; n_grid is copied in
  std::vector<std::uint64_t> n_grid;           ///< a scalar "n" becomes a one-point grid
  std::uint64_t trials = 10000;
  Seed seed = kDefaultSeed;
  std::string out;  ///< empty writes to stdout
  OutputFormat format = OutputFormat::kCsv;
  int workers = 1;
  // lemma
  std::vector<std::uint64_t> k_values;
  std::vector<std::uint64_t> r_values;  ///< empty means every r in [2, k]
  std::string weights = "random";       ///< "random" (i.i.d. U[0,1)) or "equal" (all 1)
  bool facts = true;                    ///< add verify_facts rows for even r, k <= 6
};

/// Parses the JSON config text. Unknown keys, type mismatches and syntax
/// errors raise ConfigError naming the key or line. Ends with validate_config,
/// so the subcommand-less parts of a config are checked too.
RunConfig parse_config(const std::string& text);

/// Per-command required fields and value checks; throws ConfigError.
void validate_config(const RunConfig& config);

/// Help text describing the config keys and defaults.
std::string config_reference();

}  // namespace distid

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/cli/envelope.hpp"
#include "rlab/groups/presentation.hpp"

namespace rlab::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kOverflow = 3, kMismatch = 4 };

struct RunConfig {
  std::string command;     // rigidity | charvar | group | fingerprint
  std::string subcommand;  // gamma4 | abelianize | cosets | subgroups | rs | luck
  /// Fixture specs: a fixture name, optionally "NAME:sub=w1,w2,..." for the
  /// subgroup generated by the words (as a Reidemeister-Schreier presentation).
  std::vector<std::string> fixtures;
  std::vector<std::string> files;
  std::vector<int> n;
  std::optional<int> k;
  std::size_t index = 4;
  std::size_t min_index = 1;
  std::size_t bound = 64;
  std::size_t limit = 100000;
  /// Search-node budget for subgroup enumeration.
  long max_nodes = 20'000'000;
  int precision = 30;
  std::string strategy = "hlt";
  int workers = 4;
  bool skip_numeric = false;
  bool normal = false;
  std::vector<std::string> subgroup;
  std::string out;
  std::vector<std::string> argv;

  Json to_json() const;
};

/// Configuration or input errors (exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation ran out of its configured resources before producing a result (exit code 3).
struct ResourceOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  ResultEnvelope envelope;
  int exit_code = kOk;
  /// One line per failed golden check or resource problem.
  std::vector<std::string> problems;
};

inline constexpr std::size_t kMaxFingerprintBound = 512;

/// Runs a command. Throws ConfigError for bad configuration or unparsable input.
Outcome run_command(const RunConfig& config);

/// Resolves a fixture spec or a presentation file.
Presentation resolve_fixture(const std::string& spec);

}  // namespace rlab::cli

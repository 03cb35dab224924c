#pragma once

// Front end shared by the `sumrank` executable and the tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumrank/acd.hpp"

namespace sumrank::cli {

enum class Command { tlrs_build, tlrs_sweep, acd_build, acd_search, acd_sweep, verify_paper_examples };
enum class Format { json, csv, text };

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_invalid_config = 2, exit_guard_exceeded = 3 };

struct RunConfig {
  Command command = Command::verify_paper_examples;
  unsigned p = 5;
  unsigned m = 1;
  unsigned r = 2;
  std::vector<std::uint32_t> base_modulus;  // empty: library default
  std::vector<std::uint32_t> top_modulus;
  unsigned ell = 0;  // 0: taken from --lambda, or every admissible ℓ in sweeps
  std::optional<unsigned> k;
  std::optional<unsigned> h;
  std::string eta;    // empty in tlrs-sweep: all of L*
  std::string gamma;  // empty: the skew unit α
  std::vector<std::string> lambda;
  acd::SearchStrategy strategy = acd::SearchStrategy::automatic;
  Format format = Format::json;
  std::uint64_t guard = acd::kDefaultEnumerationGuard;
  std::uint64_t seed = 1;
  unsigned samples = 500;
  unsigned jobs = 1;
  /// Exit 3 instead of skipping a distance enumeration that exceeds the guard.
  bool require_distance = false;
};

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

/// SUMRANK_ENUM_GUARD if set and numeric, else the library default.
std::uint64_t guard_from_env();

/// Either a config or the exit status to return immediately (help, parse error).
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sumrank::cli

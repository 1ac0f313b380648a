#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace csl::cli {

enum class Command { index, snf, reflect, compose, verify, spectrum, decompose, corpus };
enum class OutputFormat { plain, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;

/// Environment variable that overrides the default residue-enumeration cap.
inline constexpr const char* kCapEnvVar = "CSL_COUNT_CAP";

struct RunConfig {
  Command command = Command::index;
  std::vector<std::string> inputs;  // matrix files, "-" for stdin
  std::optional<std::string> vector;
  std::string method = "all";
  std::size_t dimension = 3;
  std::uint64_t count = 200;
  std::uint64_t max_sigma = 99;
  std::size_t reflections = 3;
  std::int64_t bound = 4;
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  std::optional<std::string> odd;
  std::optional<std::string> three;
  bool details = false;
  OutputFormat format = OutputFormat::plain;
};

/// Executes one command. Returns 0 on success, 1 when independent methods
/// disagree, 2 on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Cap from kCapEnvVar when set to a positive integer, else the library default.
std::uint64_t default_cap();

}  // namespace csl::cli

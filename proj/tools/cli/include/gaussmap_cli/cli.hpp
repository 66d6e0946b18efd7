#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussmap/curve.hpp"

namespace gaussmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Json, Csv, Markdown };

struct RunConfig {
  std::string command;
  int g_min = 0;
  int g_max = 0;
  std::optional<int> k;
  std::string curve_source;  // empty: default curve per genus
  std::string method = "equations";
  int samples = 100;
  std::uint64_t seed = 0;
  int random_curves = 0;
  std::optional<Format> format;
  std::string out_path;
  std::string theorem;
  std::string quadric;
  std::vector<int> pair;
  bool timing = false;
};

/// Thrown for anything the user can fix by changing the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Largest genus accepted; GAUSSMAP_MAX_GENUS overrides the default 12.
int max_genus();

/// Parses "N" or "A..B".
std::pair<int, int> parse_genus_range(const std::string& text);
/// A JSON file {"branch_points": [...]} or an inline comma-separated list.
Curve load_curve(const std::string& source);
nlohmann::json curve_json(const Curve& c);

CommandResult run_command(const RunConfig& config);

/// Renders a report in the requested format.
std::string render(const RunConfig& config, const CommandResult& result);

/// Full entry point: parses argv, runs, writes output. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace gaussmap::cli

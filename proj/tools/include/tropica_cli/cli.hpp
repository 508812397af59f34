#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

namespace tropica::cli {

enum class OutputFormat { text, json, csv };

/// Exit statuses of the tool.
enum ExitStatus : int {
  kOk = 0,
  kArgumentError = 2,
  kSizeGuard = 3,
  kCrossCheck = 4,
};

/// A fully parsed invocation. `params` holds the command options as strings
/// ("oracle line" style commands use a space-separated command name).
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> cache_dir;
  bool force = false;
  int threads = 0;
};

/// Rendered output of one command in every format.
struct Report {
  int status = kOk;
  nlohmann::json document;
  std::string text;
  std::string csv;
};

struct DispatchResult {
  int status = kOk;
  std::string output;  // in the requested format
  std::string error;
  bool cache_hit = false;
};

/// Validates `config`, consults the cache, runs the command and renders it.
DispatchResult dispatch(const RunConfig& config);

/// Runs the command for `config` without any caching.
Report execute(const RunConfig& config);

/// Cache key for a config: command, sorted parameters, force flag and versions.
std::string cache_key(const RunConfig& config);

std::optional<Report> cache_load(const std::filesystem::path& dir, const std::string& key);
void cache_store(const std::filesystem::path& dir, const std::string& key, const Report& report);

/// Parses argv with CLI11, dispatches, and writes to `out` / `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropica::cli

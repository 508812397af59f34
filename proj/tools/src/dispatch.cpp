#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "tropica/parallel.hpp"
#include "tropica/version.hpp"

namespace tropica::cli {

namespace {

std::mutex cache_mutex;

const CommandSpec& find_spec(const std::string& command) {
  for (const auto& spec : commands())
    if (spec.name == command) return spec;
  throw ArgumentError("unknown command: " + command);
}

void validate(const RunConfig& config) {
  const CommandSpec& spec = find_spec(config.command);
  for (const auto& name : spec.required)
    if (!config.params.count(name)) throw ArgumentError("missing --" + name);
  for (const auto& [name, value] : config.params) {
    const bool known = std::find(spec.required.begin(), spec.required.end(), name) != spec.required.end() ||
                       std::find(spec.optional.begin(), spec.optional.end(), name) != spec.optional.end();
    if (!known) throw ArgumentError("unknown option --" + name + " for " + config.command);
    if (integer_params().count(name)) Params(config.params).integer(name);
  }
  if (config.threads < 0) throw ArgumentError("--threads must be nonnegative");
  if (config.params.count("dump-matrix") && !config.params.count("edges"))
    throw ArgumentError("--dump-matrix needs --edges");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key) {
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  return dir / name.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json doc = report.document;
      doc["schemaVersion"] = kReportSchemaVersion;
      doc["version"] = kVersion;
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv:
      return report.csv;
    case OutputFormat::text:
      break;
  }
  return report.text;
}

}  // namespace

std::string cache_key(const RunConfig& config) {
  std::string key = std::string("tropica ") + kVersion + " schema " + std::to_string(kReportSchemaVersion) + " | " +
                    config.command + " |";
  for (const auto& [name, value] : config.params) key += " " + name + "=" + value;
  key += config.force ? " | force" : " |";
  return key;
}

std::optional<Report> cache_load(const std::filesystem::path& dir, const std::string& key) {
  std::lock_guard lock(cache_mutex);
  std::ifstream in(cache_file(dir, key));
  if (!in) return std::nullopt;
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("key", "") != key) return std::nullopt;
  Report r;
  r.status = doc.at("status").get<int>();
  r.document = doc.at("document");
  r.text = doc.at("text").get<std::string>();
  r.csv = doc.at("csv").get<std::string>();
  return r;
}

void cache_store(const std::filesystem::path& dir, const std::string& key, const Report& report) {
  static std::atomic<unsigned> counter{0};
  std::lock_guard lock(cache_mutex);
  std::filesystem::create_directories(dir);
  const auto target = cache_file(dir, key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) return;
    const nlohmann::json doc = {
        {"key", key}, {"status", report.status}, {"document", report.document}, {"text", report.text}, {"csv", report.csv}};
    out << doc.dump() << "\n";
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::filesystem::rename(tmp, target);
}

Report execute(const RunConfig& config) {
  validate(config);
  return run_command(config.command, Params(config.params), config.force);
}

DispatchResult dispatch(const RunConfig& config) {
  DispatchResult result;
  try {
    validate(config);
    if (config.threads > 0) set_thread_count(config.threads);
    const bool cacheable =
        config.cache_dir && find_spec(config.command).cacheable && !config.params.count("dump-matrix");
    const std::string key = cache_key(config);
    std::optional<Report> report;
    if (cacheable) {
      report = cache_load(*config.cache_dir, key);
      result.cache_hit = report.has_value();
    }
    if (!report) report = execute(config);
    if (config.params.count("dump-matrix")) {
      const Params p(config.params);
      dump_matrix(p.integer("genus"), p.integer("edges"), p.str("dump-matrix"));
    }
    if (cacheable && !result.cache_hit && report->status == kOk) cache_store(*config.cache_dir, key, *report);
    result.status = report->status;
    result.output = render(*report, config.format);
    if (report->status == kCrossCheck) result.error = "cross-check failed";
  } catch (const SizeGuardError& e) {
    result.status = kSizeGuard;
    result.error = e.what();
  } catch (const CrossCheckError& e) {
    result.status = kCrossCheck;
    result.error = e.what();
  } catch (const UnsupportedError& e) {
    result.status = kArgumentError;
    result.error = e.what();
  } catch (const std::invalid_argument& e) {
    result.status = kArgumentError;
    result.error = e.what();
  } catch (const LoopContractionError& e) {
    result.status = kArgumentError;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.status = 1;
    result.error = std::string("internal error: ") + e.what();
  }
  return result;
}

}  // namespace tropica::cli

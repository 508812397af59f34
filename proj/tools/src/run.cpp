#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tropica/version.hpp"

namespace tropica::cli {

namespace {

struct Bound {
  std::string name;
  CLI::Option* option = nullptr;
  bool is_flag = false;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> storage;
  std::vector<Bound> bound;
};

const std::map<std::string, std::string>& help_text() {
  static const std::map<std::string, std::string> text = {
      {"genus", "genus of the source curve"},
      {"mu", "ramification profile over 0, e.g. 2,1"},
      {"nu", "ramification profile over infinity"},
      {"list-covers", "list every cover with its multiplicity"},
      {"lmu", "length of mu"},
      {"lnu", "length of nu"},
      {"verify", "compare every chamber polynomial with exact interpolation"},
      {"degree", "degree of the cover"},
      {"per-graph", "break the count down by Feynman graph and vertex order"},
      {"graph", "file with a graph in text format"},
      {"order", "vertex order, e.g. 1,3,4,2 (default identity)"},
      {"dmax", "largest degree d (q-exponent 2d)"},
      {"edges", "restrict to one edge count"},
      {"dump-matrix", "write the differential at --edges as row col p/q triplets"},
      {"marks", "number of marked legs"},
      {"poset", "list the types and the face relation"},
  };
  return text;
}

std::vector<std::string> flag_names() { return {"list-covers", "verify", "per-graph", "poset"}; }

void bind(Command& cmd, const CommandSpec& spec) {
  const auto flags = flag_names();
  auto add = [&](const std::string& name, bool required) {
    const std::string desc = help_text().count(name) ? help_text().at(name) : name;
    if (std::find(flags.begin(), flags.end(), name) != flags.end()) {
      cmd.bound.push_back({name, cmd.app->add_flag("--" + name, desc), true});
    } else {
      auto* opt = cmd.app->add_option("--" + name, cmd.storage[name], desc);
      if (required) opt->required();
      cmd.bound.push_back({name, opt, false});
    }
  };
  for (const auto& name : spec.required) add(name, true);
  for (const auto& name : spec.optional) add(name, false);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical Hurwitz numbers, chamber polynomials, Feynman integrals, graph complexes and moduli types",
               "tropica"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  bool json_out = false;
  bool csv_out = false;
  bool force = false;
  int threads = 0;
  std::string cache_dir;
  auto* json_opt = app.add_flag("--json", json_out, "emit JSON");
  auto* csv_opt = app.add_flag("--csv", csv_out, "emit CSV");
  json_opt->excludes(csv_opt);
  app.add_option("--cache-dir", cache_dir, "directory for cached reports");
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
  app.add_flag("--force", force, "override size guards");

  static const std::map<std::string, std::string> descriptions = {
      {"double-hurwitz", "tropical double Hurwitz number of the line"},
      {"chambers", "walls, chambers and chamber polynomials in genus 0"},
      {"elliptic", "tropical simple Hurwitz number of the elliptic curve"},
      {"feynman", "refined Feynman integral of one graph and vertex order"},
      {"mirror-check", "compare Hurwitz numbers with the Feynman graph sum"},
      {"graph-complex", "dimensions, ranks and homology of the graph complex"},
      {"moduli", "combinatorial types of the tropical moduli space"},
      {"oracle line", "double Hurwitz number by counting permutations"},
      {"oracle elliptic", "simple elliptic Hurwitz number by counting permutations"},
  };

  std::vector<std::unique_ptr<Command>> cmds;
  CLI::App* oracle = app.add_subcommand("oracle", "symmetric-group monodromy counts");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  for (const auto& spec : commands()) {
    auto cmd = std::make_unique<Command>();
    cmd->name = spec.name;
    const bool nested = spec.name.rfind("oracle ", 0) == 0;
    CLI::App* parent = nested ? oracle : &app;
    cmd->app = parent->add_subcommand(nested ? spec.name.substr(7) : spec.name, descriptions.at(spec.name));
    cmd->app->fallthrough();
    bind(*cmd, spec);
    cmds.push_back(std::move(cmd));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  RunConfig config;
  config.format = json_out ? OutputFormat::json : csv_out ? OutputFormat::csv : OutputFormat::text;
  config.force = force;
  config.threads = threads;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  for (const auto& cmd : cmds) {
    if (!cmd->app->parsed()) continue;
    config.command = cmd->name;
    for (const auto& b : cmd->bound) {
      if (b.option->count() == 0) continue;
      config.params[b.name] = b.is_flag ? "true" : cmd->storage.at(b.name);
    }
  }

  const DispatchResult result = dispatch(config);
  out << result.output;
  if (!result.error.empty()) err << "error: " << result.error << "\n";
  return result.status;
}

}  // namespace tropica::cli

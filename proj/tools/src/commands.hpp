#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropica/errors.hpp"
#include "tropica_cli/cli.hpp"

namespace tropica::cli {

/// Read-only view of validated command parameters.
class Params {
public:
  explicit Params(const std::map<std::string, std::string>& values) : values_(values) {}

  bool has(const std::string& name) const { return values_.count(name) > 0; }
  bool flag(const std::string& name) const {
    auto it = values_.find(name);
    return it != values_.end() && it->second == "true";
  }
  const std::string& str(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw ArgumentError("missing --" + name);
    return it->second;
  }
  int integer(const std::string& name) const {
    const std::string& s = str(name);
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ArgumentError("--" + name + " expects an integer, got '" + s + "'");
  }

private:
  const std::map<std::string, std::string>& values_;
};

struct CommandSpec {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  bool cacheable = true;
};

const std::vector<CommandSpec>& commands();
const std::set<std::string>& integer_params();

Report run_command(const std::string& command, const Params& params, bool force);

/// Writes the matrix of d: G_n -> G_{n-1} as "row col p/q" lines (nonzero entries, 0-based).
void dump_matrix(int genus, int edges, const std::string& path);

}  // namespace tropica::cli

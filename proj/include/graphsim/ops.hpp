#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim::ops {

// One registered tool. `parameters` follows the function-calling schema
// style: {"type":"object","properties":{...},"required":[...]}; graph_id is
// always listed and always required.
struct OpDef {
  std::string name;
  std::string description;
  json parameters;
  bool mutating = false;
  std::function<json(PropertyGraph &, const json &args)> execute;
};

// Wire alias: accepted on input, normalized to the canonical name (and
// canonical argument shape) before dispatch and logging.
struct AliasDef {
  std::string name;
  std::string alias_of;
  std::string description;
  json parameters;
  std::function<json(const json &args)> normalize_args;
};

class Registry {
 public:
  void add(OpDef op);
  void add_alias(AliasDef alias);

  bool has(const std::string &name) const;
  // Alias-resolved canonical name; throws Error(kUnknownOperation) if the
  // name is not registered.
  std::string canonical_name(const std::string &name) const;
  const OpDef &op(const std::string &name) const;

  // Alias-normalizes (name, args), validates args against the schema, and
  // runs the operation. Throws Error for validation failures and op-level
  // errors; on any throw the graph is unchanged.
  json execute(PropertyGraph &graph, const std::string &name, const json &args) const;

  // Normalization without execution: resolves aliases and rewrites alias
  // argument shapes; returns {canonical_name, canonical_args}.
  std::pair<std::string, json> normalize(const std::string &name, const json &args) const;

  std::vector<std::string> canonical_names() const;  // sorted
  // Schema documents for every canonical op plus alias documents carrying an
  // "alias_of" pointer.
  std::vector<json> schema_documents() const;

 private:
  std::map<std::string, OpDef> ops_;
  std::map<std::string, AliasDef> aliases_;
};

// Registry with the full matching / mutation / retrieval / path /
// connectivity / algorithm tool families registered.
const Registry &default_registry();

// Validates `args` against a parameters schema (type, required, enum,
// unknown-key rejection; graph_id is always tolerated). Throws
// Error(kInvalidArgument) on violation.
void validate_args(const json &args, const json &parameters, const std::string &op_name);

}  // namespace graphsim::ops

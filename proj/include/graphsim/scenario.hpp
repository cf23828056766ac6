#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphsim/sandbox.hpp"

namespace graphsim::engine {

enum class Mode { kA, kB, kC };
const char *to_string(Mode mode);

enum class ScenarioClass { kConstraint, kAugmentation };
const char *to_string(ScenarioClass cls);
ScenarioClass scenario_class_from_string(const std::string &name);

struct BusinessEvent {
  std::string event_id;
  json payload;  // structured map: source_node, approval_type, amount, ...
  std::optional<std::string> trigger_field;

  json to_json() const;
  static BusinessEvent from_json(const json &doc);
};

struct ProgramStep {
  std::string name;
  json args;

  json to_json() const;
  static ProgramStep from_json(const json &doc);
};

// Exact-equality activation condition: fires when payload[field] == value.
struct TriggerSpec {
  std::string field;
  json value;
};

struct ScenarioProgram {
  std::string rule_id;
  ScenarioClass cls = ScenarioClass::kConstraint;
  std::vector<ProgramStep> steps;
  ProgramStep decision_step;
  std::optional<TriggerSpec> trigger;

  json to_json() const;
  static ScenarioProgram from_json(const json &doc);

  bool activated_by(const BusinessEvent &event) const;
};

struct StepFailure {
  std::size_t index = 0;  // 0-based position in steps
  std::string name;
  json error;
};

struct SimulationReport {
  std::string applied_rule;
  std::size_t deleted_nodes = 0;
  std::size_t deleted_edges = 0;
  std::size_t created_nodes = 0;
  std::size_t created_edges = 0;
  std::size_t updated_nodes = 0;
  std::size_t updated_edges = 0;
  std::vector<std::string> deleted_node_names;
  std::vector<std::string> created_node_names;
  bool empty_graph = false;
  StateHash pre_hash;
  StateHash post_hash;
  std::optional<StepFailure> failed_step;

  json to_json() const;
};

struct DecisionTrace {
  std::string event_id;
  std::string triggered_rule;
  SimulationReport simulation;
  json decision;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> step_log_range;
  std::string timestamp;

  // Audit-file document: event_id, triggered_rule, mutation summary
  // (deleted_nodes as names, new_nodes/new_edges as counts), flattened
  // decision fields (final_path, max_degree, slots_required, ...), timestamp,
  // plus the full simulation/decision detail.
  json to_json() const;
};

// Executes scenario programs against sandbox sessions and derives auditable
// decisions from the evolved graph.
class ScenarioEngine {
 public:
  explicit ScenarioEngine(Sandbox &sandbox) : sandbox_(sandbox) {}

  // Rejects a malformed program before execution: constraint steps are
  // limited to match/delete/update/set_edge_weights, augmentation adds the
  // create ops, and the decision step must be read-only.
  void validate_program(const ScenarioProgram &program) const;

  // Runs the steps in order through sandbox.call. Each call is atomic; the
  // program is not: on a failing step prior steps remain applied and the
  // report carries the failure.
  SimulationReport apply_scenario(const GraphId &id, const ScenarioProgram &program);

  // apply_scenario + decision step. On an empty post-state the decision step
  // is skipped and the decision is the structured empty-graph outcome;
  // missing-endpoint connectivity/path decisions resolve to the structured
  // no-path result. Never throws for runtime outcomes.
  DecisionTrace derive_decision(const GraphId &id, const BusinessEvent &event,
                                const ScenarioProgram &program);

  static Mode classify_mode(const std::optional<ScenarioProgram> &program,
                            bool static_graph_in_context);

  // First program activated by the event's trigger condition, if any.
  static const ScenarioProgram *select_program(const BusinessEvent &event,
                                               const std::vector<ScenarioProgram> &programs);

 private:
  json run_decision_step(const GraphId &id, const ScenarioProgram &program);

  Sandbox &sandbox_;
};

// Appends trace documents as JSON lines to a session audit file.
void append_trace(const std::string &path, const DecisionTrace &trace);

}  // namespace graphsim::engine

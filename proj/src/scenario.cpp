#include "graphsim/scenario.hpp"

#include <fstream>

#include "graphsim/algo.hpp"

namespace graphsim::engine {

const char *to_string(Mode mode) {
  switch (mode) {
    case Mode::kA:
      return "A";
    case Mode::kB:
      return "B";
    case Mode::kC:
      return "C";
  }
  return "?";
}

const char *to_string(ScenarioClass cls) {
  return cls == ScenarioClass::kConstraint ? "constraint" : "augmentation";
}

ScenarioClass scenario_class_from_string(const std::string &name) {
  if (name == "constraint") return ScenarioClass::kConstraint;
  if (name == "augmentation") return ScenarioClass::kAugmentation;
  throw Error(ErrorCode::kInvalidArgument, "unknown scenario class '" + name + "'");
}

json BusinessEvent::to_json() const {
  json out{{"event_id", event_id}, {"payload", payload}};
  if (trigger_field) out["trigger_field"] = *trigger_field;
  return out;
}

BusinessEvent BusinessEvent::from_json(const json &doc) {
  BusinessEvent event;
  event.event_id = doc.at("event_id").get<std::string>();
  event.payload = doc.value("payload", json::object());
  if (doc.contains("trigger_field") && !doc["trigger_field"].is_null()) {
    event.trigger_field = doc["trigger_field"].get<std::string>();
  }
  return event;
}

json ProgramStep::to_json() const { return json{{"name", name}, {"args", args}}; }

ProgramStep ProgramStep::from_json(const json &doc) {
  ProgramStep step;
  step.name = doc.at("name").get<std::string>();
  step.args = doc.value("args", json::object());
  return step;
}

json ScenarioProgram::to_json() const {
  json steps_doc = json::array();
  for (const auto &step : steps) steps_doc.push_back(step.to_json());
  json out{{"rule_id", rule_id},
           {"class", to_string(cls)},
           {"steps", steps_doc},
           {"decision_step", decision_step.to_json()}};
  if (trigger) out["trigger"] = json{{"field", trigger->field}, {"value", trigger->value}};
  return out;
}

ScenarioProgram ScenarioProgram::from_json(const json &doc) {
  ScenarioProgram program;
  program.rule_id = doc.at("rule_id").get<std::string>();
  program.cls = scenario_class_from_string(doc.at("class").get<std::string>());
  for (const auto &step : doc.value("steps", json::array())) {
    program.steps.push_back(ProgramStep::from_json(step));
  }
  program.decision_step = ProgramStep::from_json(doc.at("decision_step"));
  if (doc.contains("trigger") && !doc["trigger"].is_null()) {
    program.trigger =
        TriggerSpec{doc["trigger"].at("field").get<std::string>(), doc["trigger"].at("value")};
  }
  return program;
}

bool ScenarioProgram::activated_by(const BusinessEvent &event) const {
  if (!trigger) return false;
  if (!event.payload.is_object() || !event.payload.contains(trigger->field)) return false;
  return event.payload[trigger->field] == trigger->value;
}

json SimulationReport::to_json() const {
  json deltas{{"deleted_nodes", deleted_nodes}, {"deleted_edges", deleted_edges},
              {"created_nodes", created_nodes}, {"created_edges", created_edges},
              {"updated_nodes", updated_nodes}, {"updated_edges", updated_edges}};
  json out{{"applied_rule", applied_rule},
           {"deltas", deltas},
           {"empty_graph", empty_graph},
           {"pre_hash", pre_hash.digest},
           {"post_hash", post_hash.digest}};
  if (!deleted_node_names.empty()) out["deleted_node_names"] = deleted_node_names;
  if (!created_node_names.empty()) out["created_node_names"] = created_node_names;
  if (failed_step) {
    out["failed_step"] = json{
        {"index", failed_step->index}, {"name", failed_step->name}, {"error", failed_step->error}};
  }
  return out;
}

json DecisionTrace::to_json() const {
  json out{{"event_id", event_id}, {"triggered_rule", triggered_rule}};
  if (!simulation.deleted_node_names.empty()) {
    out["deleted_nodes"] = simulation.deleted_node_names;
  }
  if (simulation.created_nodes > 0) out["new_nodes"] = simulation.created_nodes;
  if (simulation.created_edges > 0) out["new_edges"] = simulation.created_edges;
  // Flattened decision fields in the audit shape.
  if (decision.is_object()) {
    if (decision.contains("found") && decision["found"].is_boolean() &&
        decision["found"].get<bool>() && decision.contains("path")) {
      out["final_path"] = decision["path"];
    }
    for (const char *field : {"max_degree", "slots_required", "simulation_result"}) {
      if (decision.contains(field)) out[field] = decision[field];
    }
  }
  out["decision"] = decision;
  out["simulation"] = simulation.to_json();
  if (step_log_range) {
    out["step_log_range"] = json::array({step_log_range->first, step_log_range->second});
  } else {
    out["step_log_range"] = nullptr;
  }
  out["timestamp"] = timestamp;
  return out;
}

namespace {

const std::set<std::string> kConstraintSteps = {
    "match_nodes",  "match_edges",  "delete_nodes",     "delete_edges",
    "update_nodes", "update_edges", "set_edge_weights",
};
const std::set<std::string> kAugmentationExtra = {"create_nodes", "create_edges"};

// In-context computations have no registered tool; they run on the exported
// graph instead of through dispatch.
bool is_reasoning_decision(const std::string &name) { return name == "greedy_coloring"; }

}  // namespace

void ScenarioEngine::validate_program(const ScenarioProgram &program) const {
  const ops::Registry &registry = sandbox_.registry();
  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    std::string canonical = registry.canonical_name(program.steps[i].name);
    bool allowed = kConstraintSteps.count(canonical) > 0;
    if (!allowed && program.cls == ScenarioClass::kAugmentation) {
      allowed = kAugmentationExtra.count(canonical) > 0;
    }
    if (!allowed) {
      throw Error(ErrorCode::kInvalidArgument,
                  "step " + std::to_string(i + 1) + " ('" + program.steps[i].name +
                      "') is not permitted in a " + to_string(program.cls) + " program");
    }
  }
  const std::string &decision = program.decision_step.name;
  if (is_reasoning_decision(decision)) return;
  std::string canonical = registry.canonical_name(decision);
  if (registry.op(canonical).mutating) {
    throw Error(ErrorCode::kInvalidArgument,
                "decision step '" + decision + "' must be a read-only or algorithm call");
  }
}

SimulationReport ScenarioEngine::apply_scenario(const GraphId &id,
                                                const ScenarioProgram &program) {
  validate_program(program);
  SimulationReport report;
  report.applied_rule = program.rule_id;
  report.pre_hash = sandbox_.current_hash(id);

  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    const ProgramStep &step = program.steps[i];
    json result = sandbox_.call(id, step.name, step.args);
    if (result.value("status", "") != "ok") {
      report.failed_step = StepFailure{i, step.name, result.value("error", json::object())};
      break;
    }
    std::string canonical = sandbox_.registry().canonical_name(step.name);
    if (canonical == "delete_nodes") {
      report.deleted_nodes += result.value("deleted_nodes", 0u);
      report.deleted_edges += result.value("deleted_edges", 0u);
      for (const auto &name : result.value("node_names", json::array())) {
        report.deleted_node_names.push_back(name.get<std::string>());
      }
    } else if (canonical == "delete_edges") {
      report.deleted_edges += result.value("deleted_edges", 0u);
    } else if (canonical == "create_nodes") {
      const auto &created = result["created"]["nodes"];
      report.created_nodes += created.size();
      for (const auto &name : created) {
        report.created_node_names.push_back(name.get<std::string>());
      }
    } else if (canonical == "create_edges") {
      report.created_edges += result["created"]["edges"].size();
    } else if (canonical == "update_nodes") {
      report.updated_nodes += result.value("updated", 0u);
    } else if (canonical == "update_edges" || canonical == "set_edge_weights") {
      report.updated_edges += result.value("updated", 0u);
    }
  }

  PropertyGraph post = sandbox_.export_snapshot(id);
  report.post_hash = state_hash(post);
  report.empty_graph = post.empty();
  return report;
}

json ScenarioEngine::run_decision_step(const GraphId &id, const ScenarioProgram &program) {
  const ProgramStep &decision = program.decision_step;
  if (is_reasoning_decision(decision.name)) {
    // Reasoning mode: the evolved graph is exported and the computation runs
    // in-context, outside the tool dispatch.
    PropertyGraph exported = sandbox_.export_snapshot(id);
    algo::ColoringResult coloring = algo::greedy_coloring(exported);
    json out = coloring.to_json();
    out["status"] = "ok";
    out["mode"] = "reasoning";
    out["max_degree"] = exported.max_degree();
    out["slots_required"] = coloring.colors_used;
    return out;
  }

  json result = sandbox_.call(id, decision.name, decision.args);
  if (result.value("status", "") == "ok") return result;

  // Missing-endpoint connectivity/path decisions resolve to the structured
  // no-path outcome; the logged call keeps the strict error.
  std::string code = result["error"].value("code", "");
  std::string canonical = sandbox_.registry().canonical_name(decision.name);
  if (code == "not-found") {
    if (canonical == "shortest_path") {
      return json{{"status", "ok"},
                  {"found", false},
                  {"path", json::array()},
                  {"annotation", algo::kNoPathAnnotation}};
    }
    if (canonical == "check_graph_connectivity") {
      return json{{"status", "ok"},
                  {"connected", false},
                  {"mode", "pairwise"},
                  {"annotation", algo::kNoPathAnnotation}};
    }
    if (canonical == "check_direct_edge") {
      return json{{"status", "ok"}, {"exists", false}, {"annotation", algo::kNoPathAnnotation}};
    }
  }
  return result;
}

DecisionTrace ScenarioEngine::derive_decision(const GraphId &id, const BusinessEvent &event,
                                              const ScenarioProgram &program) {
  validate_program(program);
  std::uint64_t first_seq = sandbox_.get_log(id).size() + 1;

  DecisionTrace trace;
  trace.event_id = event.event_id;
  trace.triggered_rule = program.rule_id;
  trace.simulation = apply_scenario(id, program);

  if (trace.simulation.failed_step) {
    trace.decision = json{{"simulation_result", "program_halted"},
                          {"failed_step", trace.simulation.failed_step->index},
                          {"reason", "step '" + trace.simulation.failed_step->name + "' failed"}};
  } else if (trace.simulation.empty_graph) {
    trace.decision =
        json{{"simulation_result", "empty_graph"}, {"reason", "all nodes excluded by R"}};
  } else {
    trace.decision = run_decision_step(id, program);
  }

  std::uint64_t last_seq = sandbox_.get_log(id).size();
  if (last_seq >= first_seq) trace.step_log_range = {first_seq, last_seq};

  // Audit timestamp mirrors the event's own timestamp when it carries one.
  if (event.payload.is_object() && event.payload.contains("timestamp") &&
      event.payload["timestamp"].is_string()) {
    trace.timestamp = event.payload["timestamp"].get<std::string>();
  } else {
    trace.timestamp = now_utc();
  }
  return trace;
}

Mode ScenarioEngine::classify_mode(const std::optional<ScenarioProgram> &program,
                                   bool static_graph_in_context) {
  (void)static_graph_in_context;
  if (!program) return Mode::kA;
  if (is_reasoning_decision(program->decision_step.name)) return Mode::kC;
  return Mode::kB;
}

const ScenarioProgram *ScenarioEngine::select_program(const BusinessEvent &event,
                                                      const std::vector<ScenarioProgram> &programs) {
  for (const auto &program : programs) {
    if (program.activated_by(event)) return &program;
  }
  return nullptr;
}

void append_trace(const std::string &path, const DecisionTrace &trace) {
  std::ofstream out(path, std::ios::app);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open audit file '" + path + "'");
  }
  out << to_ordered(trace.to_json()).dump() << '\n';
}

}  // namespace graphsim::engine

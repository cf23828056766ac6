#include <algorithm>
#include <cstdio>

#include "graphsim/algo.hpp"
#include "graphsim/benchgen.hpp"
#include "graphsim/predicate.hpp"

namespace graphsim::benchgen {

namespace {

evalkit::GroundTruthCall make_call(const std::string &name, json args,
                                   std::initializer_list<std::string> required) {
  evalkit::GroundTruthCall call;
  call.call.name = name;
  call.call.args = std::move(args);
  call.required_args = std::set<std::string>(required);
  return call;
}

std::vector<std::string> shuffled_names(const PropertyGraph &g, Rng &rng) {
  std::vector<std::string> names = g.node_names();
  rng.shuffle(names);
  return names;
}

json exclusion_predicate() {
  return json{{"properties", json{{"ijudgemethod", json{{"op", "ne"}, {"value", "1"}}}}}};
}

// Nodes failing the active scope condition (ijudgemethod != "1").
std::vector<std::string> excluded_nodes(const PropertyGraph &g) {
  Predicate pred = Predicate::from_json("ijudgemethod", json{{"op", "ne"}, {"value", "1"}});
  std::vector<std::string> out;
  for (const auto &[name, node] : g.nodes()) {
    if (eval_predicate(node, pred)) out.push_back(name);
  }
  return out;
}

std::set<std::string> survivor_set(const PropertyGraph &g) {
  auto excluded = excluded_nodes(g);
  std::set<std::string> survivors;
  for (const auto &name : g.node_names()) survivors.insert(name);
  for (const auto &name : excluded) survivors.erase(name);
  return survivors;
}

engine::BusinessEvent constraint_event(const std::string &source_node) {
  engine::BusinessEvent event;
  event.event_id = "evt";
  event.payload = json{{"source_node", source_node},
                       {"approval_type", "expense"},
                       {"timestamp", "2025-06-01T09:14:22Z"}};
  event.trigger_field = "approval_type";
  return event;
}

engine::ScenarioProgram constraint_program(const std::vector<std::string> &excluded,
                                           const std::string &decision_name,
                                           json decision_args) {
  engine::ScenarioProgram program;
  program.rule_id = "R_access_scope";
  program.cls = engine::ScenarioClass::kConstraint;
  program.trigger = engine::TriggerSpec{"approval_type", "expense"};
  program.steps.push_back(engine::ProgramStep{"match_nodes", exclusion_predicate()});
  program.steps.push_back(engine::ProgramStep{"delete_nodes", json{{"node_names", excluded}}});
  program.decision_step = engine::ProgramStep{decision_name, std::move(decision_args)};
  return program;
}

class TraversalPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "traversal_plugin"; }
  std::vector<std::string> tasks() const override {
    return {"CONNECTIVITY", "NEIGHBOR", "PREDECESSOR", "EDGE"};
  }

  std::optional<GtPlan> plan(const std::string &task_id, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t instance_index) const override {
    GtPlan plan;
    plan.mode = engine::Mode::kB;
    if (task_id == "CONNECTIVITY") {
      bool want_connected = instance_index % 2 == 0;
      for (int attempt = 0; attempt < 200; ++attempt) {
        auto names = shuffled_names(snapshot, rng);
        if (names.size() < 2) return std::nullopt;
        const std::string &source = names[0];
        const std::string &target = names[1];
        if (algo::reachable(snapshot, source, target) == want_connected) {
          plan.calls.push_back(make_call("check_graph_connectivity",
                                         json{{"source", source}, {"target", target}},
                                         {"source", "target"}));
          plan.meta = json{{"connectivity_semantics", "directed"}};
          return plan;
        }
      }
      return std::nullopt;
    }
    if (task_id == "NEIGHBOR" || task_id == "PREDECESSOR") {
      bool outward = task_id == "NEIGHBOR";
      for (const auto &name : shuffled_names(snapshot, rng)) {
        bool has_any = false;
        for (const auto &[key, edge] : snapshot.edges()) {
          (void)edge;
          if ((outward && key.source == name) || (!outward && key.target == name)) {
            has_any = true;
            break;
          }
        }
        if (has_any) {
          plan.calls.push_back(make_call(
              "get_node_neighbors",
              json{{"name", name}, {"direction", outward ? "out" : "in"}}, {"name", "direction"}));
          return plan;
        }
      }
      return std::nullopt;
    }
    if (task_id == "EDGE") {
      bool want_edge = instance_index % 2 == 0;
      for (int attempt = 0; attempt < 200; ++attempt) {
        auto names = shuffled_names(snapshot, rng);
        if (names.size() < 2) return std::nullopt;
        bool has = !snapshot.edges_between(names[0], names[1]).empty();
        if (has == want_edge) {
          plan.calls.push_back(make_call("check_direct_edge",
                                         json{{"source", names[0]}, {"target", names[1]}},
                                         {"source", "target"}));
          return plan;
        }
      }
      return std::nullopt;
    }
    throw Error(ErrorCode::kInvalidArgument, "traversal plugin cannot build '" + task_id + "'");
  }
};

class GraphInfoPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "graph_info_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_graph_info"}; }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &, Rng &,
                             std::size_t) const override {
    GtPlan plan;
    plan.mode = engine::Mode::kB;
    plan.calls.push_back(make_call("get_graph_info", json::object(), {}));
    return plan;
  }
};

class NodeInfoPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "node_info_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_node_info"}; }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t) const override {
    GtPlan plan;
    plan.mode = engine::Mode::kB;
    auto names = snapshot.node_names();
    plan.calls.push_back(
        make_call("get_node_info", json{{"name", names[rng.uniform(0, names.size() - 1)]}},
                  {"name"}));
    return plan;
  }
};

class MatchingPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "matching_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_bipartite_maximum_matching"}; }

  SamplerConfig sampler_config(const SamplerConfig &base) const override {
    SamplerConfig cfg = base;
    cfg.label_vocabulary = {"LeftRole", "RightRole"};
    cfg.rel_type = "PAIRS_WITH";
    return cfg;
  }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &,
                             std::size_t) const override {
    if (algo::max_matching(snapshot, "LeftRole", "RightRole").size == 0) return std::nullopt;
    GtPlan plan;
    plan.mode = engine::Mode::kB;
    plan.calls.push_back(make_call("calculate_max_matching",
                                   json{{"left_label", "LeftRole"}, {"right_label", "RightRole"}},
                                   {"left_label", "right_label"}));
    return plan;
  }
};

class FlowPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "flow_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_maximum_flow"}; }

  SamplerConfig sampler_config(const SamplerConfig &base) const override {
    SamplerConfig cfg = base;
    cfg.with_weights = true;
    return cfg;
  }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t) const override {
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto names = shuffled_names(snapshot, rng);
      if (names.size() < 2) return std::nullopt;
      if (algo::max_flow(snapshot, names[0], names[1]).max_flow_value > 0.0) {
        GtPlan plan;
        plan.mode = engine::Mode::kB;
        plan.calls.push_back(make_call("calculate_max_flow",
                                       json{{"source", names[0]}, {"sink", names[1]}},
                                       {"source", "sink"}));
        return plan;
      }
    }
    return std::nullopt;
  }
};

// Shared scaffolding for the two scenario-simulation tasks: sample until the
// excluded set is non-empty and the instance parity decides whether the
// static-graph answer must differ from the simulation answer (the ~0.5 mix).
class ConstraintPluginBase : public TaskPlugin {
 protected:
  struct Setup {
    std::vector<std::string> excluded;
    PropertyGraph restricted;
    std::string source;
    std::string target;
  };

  std::optional<Setup> pick_endpoints(const PropertyGraph &snapshot, Rng &rng,
                                      bool want_divergence,
                                      const std::function<bool(const PropertyGraph &,
                                                               const std::string &,
                                                               const std::string &)> &same) const {
    Setup setup;
    setup.excluded = excluded_nodes(snapshot);
    if (setup.excluded.empty()) return std::nullopt;
    auto survivors = survivor_set(snapshot);
    if (survivors.size() < 2) return std::nullopt;
    setup.restricted = induced_subgraph(snapshot, survivors);
    std::vector<std::string> pool(survivors.begin(), survivors.end());
    for (int attempt = 0; attempt < 300; ++attempt) {
      std::string source = pool[rng.uniform(0, pool.size() - 1)];
      std::string target = pool[rng.uniform(0, pool.size() - 1)];
      if (source == target) continue;
      bool agrees = same(setup.restricted, source, target);
      if (agrees != want_divergence) {
        setup.source = source;
        setup.target = target;
        return setup;
      }
    }
    return std::nullopt;
  }

  static std::vector<evalkit::GroundTruthCall> constraint_calls(
      const std::vector<std::string> &excluded, const std::string &decision_name,
      const json &decision_args, std::initializer_list<std::string> decision_required) {
    std::vector<evalkit::GroundTruthCall> calls;
    calls.push_back(make_call("match_nodes", exclusion_predicate(), {"properties"}));
    calls.push_back(make_call("delete_nodes", json{{"node_names", excluded}}, {"node_names"}));
    calls.push_back(make_call(decision_name, decision_args, decision_required));
    return calls;
  }
};

class ConstraintConnectionPlugin : public ConstraintPluginBase {
 public:
  std::string name() const override { return "constraint_connection_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_constraint_connection"}; }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t instance_index) const override {
    bool want_divergence = instance_index % 2 == 0;
    auto setup = pick_endpoints(
        snapshot, rng, want_divergence,
        [&snapshot](const PropertyGraph &restricted, const std::string &s, const std::string &t) {
          return algo::reachable(snapshot, s, t) == algo::reachable(restricted, s, t);
        });
    if (!setup) return std::nullopt;

    GtPlan plan;
    plan.mode = engine::Mode::kB;
    json decision_args{{"source", setup->source}, {"target", setup->target}};
    plan.event = constraint_event(setup->source);
    plan.program =
        constraint_program(setup->excluded, "check_graph_connectivity", decision_args);
    plan.calls = constraint_calls(setup->excluded, "check_graph_connectivity", decision_args,
                                  {"source", "target"});
    plan.meta = json{{"connectivity_semantics", "directed"},
                     {"answer_differs_from_static", want_divergence}};
    return plan;
  }
};

class ConstraintPathPlugin : public ConstraintPluginBase {
 public:
  std::string name() const override { return "constraint_path_plugin"; }
  std::vector<std::string> tasks() const override { return {"fc_constraint_path"}; }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t instance_index) const override {
    bool want_divergence = instance_index % 2 == 0;
    auto setup = pick_endpoints(
        snapshot, rng, want_divergence,
        [&snapshot](const PropertyGraph &restricted, const std::string &s, const std::string &t) {
          algo::PathResult in_g = algo::shortest_path(snapshot, s, t);
          algo::PathResult in_r = algo::shortest_path(restricted, s, t);
          return in_g.found == in_r.found && in_g.path == in_r.path;
        });
    if (!setup) return std::nullopt;

    GtPlan plan;
    plan.mode = engine::Mode::kB;
    json decision_args{{"source", setup->source}, {"target", setup->target}};
    plan.event = constraint_event(setup->source);
    plan.program = constraint_program(setup->excluded, "shortest_path", decision_args);
    plan.calls =
        constraint_calls(setup->excluded, "shortest_path", decision_args, {"source", "target"});
    plan.meta = json{{"answer_differs_from_static", want_divergence}};
    return plan;
  }
};

class ColoringPlugin : public TaskPlugin {
 public:
  std::string name() const override { return "coloring_plugin"; }
  std::vector<std::string> tasks() const override { return {"delta_plus_one_coloring"}; }

  SamplerConfig sampler_config(const SamplerConfig &base) const override {
    SamplerConfig cfg = base;
    cfg.label_vocabulary = {"AuditorRole"};
    cfg.rel_type = "CONFLICT";
    return cfg;
  }

  std::optional<GtPlan> plan(const std::string &, const PropertyGraph &snapshot, Rng &rng,
                             std::size_t) const override {
    std::size_t new_count = rng.uniform(4, 8);
    json nodes = json::array();
    std::vector<std::string> unit_names;
    for (std::size_t i = 0; i < new_count; ++i) {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "Unit_N%02u", static_cast<unsigned>(i + 1));
      unit_names.push_back(buf);
      nodes.push_back(json{{"name", buf}, {"label", "AuditorRole"}});
    }

    // Each new unit conflicts with one or two prior roles (existing or new).
    std::set<EdgeKey> keys;
    json edges = json::array();
    auto existing = snapshot.node_names();
    for (std::size_t i = 0; i < new_count; ++i) {
      std::size_t fan_out = rng.uniform(1, 2);
      for (std::size_t k = 0; k < fan_out; ++k) {
        std::vector<std::string> pool = existing;
        for (std::size_t j = 0; j < i; ++j) pool.push_back(unit_names[j]);
        const std::string &peer = pool[rng.uniform(0, pool.size() - 1)];
        EdgeKey key{unit_names[i], peer, "CONFLICT"};
        if (key.source == key.target || keys.count(key)) continue;
        keys.insert(key);
        edges.push_back(json{{"source", key.source}, {"target", key.target},
                             {"rel_type", "CONFLICT"}});
      }
    }
    if (edges.empty()) return std::nullopt;

    json units = json::array();
    for (const auto &unit : unit_names) units.push_back(unit);
    engine::BusinessEvent event;
    event.event_id = "evt";
    event.payload = json{{"event_type", "org_restructure"},
                         {"new_units", units},
                         {"timestamp", "2025-06-01T10:03:45Z"}};
    event.trigger_field = "event_type";

    engine::ScenarioProgram program;
    program.rule_id = "R_expand";
    program.cls = engine::ScenarioClass::kAugmentation;
    program.trigger = engine::TriggerSpec{"event_type", "org_restructure"};
    program.steps.push_back(engine::ProgramStep{"create_nodes", json{{"nodes", nodes}}});
    program.steps.push_back(engine::ProgramStep{"create_edges", json{{"edges", edges}}});
    program.steps.push_back(engine::ProgramStep{"get_graph_info", json::object()});
    program.decision_step = engine::ProgramStep{"greedy_coloring", json::object()};

    GtPlan plan;
    plan.mode = engine::Mode::kC;
    plan.event = event;
    plan.program = program;
    plan.calls.push_back(make_call("create_nodes", json{{"nodes", nodes}}, {"nodes"}));
    plan.calls.push_back(make_call("create_edges", json{{"edges", edges}}, {"edges"}));
    plan.calls.push_back(make_call("get_graph_info", json::object(), {}));
    plan.meta = json{{"reasoning_step", "greedy_coloring"}};
    return plan;
  }
};

}  // namespace

std::vector<std::unique_ptr<TaskPlugin>> make_plugins() {
  std::vector<std::unique_ptr<TaskPlugin>> plugins;
  plugins.push_back(std::make_unique<TraversalPlugin>());
  plugins.push_back(std::make_unique<GraphInfoPlugin>());
  plugins.push_back(std::make_unique<NodeInfoPlugin>());
  plugins.push_back(std::make_unique<MatchingPlugin>());
  plugins.push_back(std::make_unique<FlowPlugin>());
  plugins.push_back(std::make_unique<ConstraintConnectionPlugin>());
  plugins.push_back(std::make_unique<ConstraintPathPlugin>());
  plugins.push_back(std::make_unique<ColoringPlugin>());
  return plugins;
}

const TaskPlugin &plugin_for(const std::vector<std::unique_ptr<TaskPlugin>> &plugins,
                             const std::string &task_id) {
  for (const auto &plugin : plugins) {
    auto tasks = plugin->tasks();
    if (std::find(tasks.begin(), tasks.end(), task_id) != tasks.end()) return *plugin;
  }
  throw Error(ErrorCode::kInvalidArgument, "no plugin builds task '" + task_id + "'");
}

std::string render_answer(const std::string &task_id, const json &decision_result,
                          const PropertyGraph &post_state) {
  bool ok = decision_result.is_object() && decision_result.value("status", "") == "ok";
  if (task_id == "CONNECTIVITY" || task_id == "fc_constraint_connection") {
    return ok && decision_result.value("connected", false) ? "true" : "false";
  }
  if (task_id == "NEIGHBOR" || task_id == "PREDECESSOR") {
    return ok ? decision_result["neighbors"].dump() : "[]";
  }
  if (task_id == "EDGE") {
    return ok && decision_result.value("exists", false) ? "true" : "false";
  }
  if (task_id == "fc_graph_info") {
    return json{{"node_count", decision_result.at("node_count")},
                {"edge_count", decision_result.at("edge_count")},
                {"max_degree", decision_result.at("max_degree")}}
        .dump();
  }
  if (task_id == "fc_node_info") {
    return decision_result.at("node").dump();
  }
  if (task_id == "fc_bipartite_maximum_matching") {
    return ok ? canonical_number(decision_result.at("size").get<double>()) : "0";
  }
  if (task_id == "fc_maximum_flow") {
    return ok ? canonical_number(decision_result.at("max_flow_value").get<double>()) : "0";
  }
  if (task_id == "fc_constraint_path") {
    if (ok && decision_result.value("found", false)) return decision_result["path"].dump();
    return algo::kNoPathAnnotation;
  }
  if (task_id == "delta_plus_one_coloring") {
    // Reasoning-mode answer: greedy coloring of the evolved graph.
    return canonical_number(
        static_cast<double>(algo::greedy_coloring(post_state).colors_used));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown task '" + task_id + "'");
}

}  // namespace graphsim::benchgen

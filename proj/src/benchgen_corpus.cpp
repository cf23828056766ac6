#include <cstdio>
#include <filesystem>
#include <fstream>

#include "graphsim/algo.hpp"
#include "graphsim/benchgen.hpp"
#include "graphsim/predicate.hpp"

namespace graphsim::benchgen {

namespace fs = std::filesystem;

evalkit::GroundTruthInstance Instance::ground_truth() const {
  evalkit::GroundTruthInstance gt;
  gt.task_id = task_id;
  gt.instance_id = instance_id;
  gt.calls = calls;
  gt.answer = answer;
  return gt;
}

json Instance::to_json() const {
  json calls_doc = json::array();
  for (const auto &call : calls) calls_doc.push_back(call.to_json());
  json out{{"task_id", task_id},
           {"instance_id", instance_id},
           {"split", split},
           {"mode", engine::to_string(mode)},
           {"graph_id", graph_id.value},
           {"calls", calls_doc},
           {"answer", answer},
           {"meta", meta}};
  out["event"] = event ? event->to_json() : json();
  out["program"] = program ? program->to_json() : json();
  return out;
}

namespace {

// Independent cross-check for scenario tasks: re-derive the survivors from
// the program's match predicates, build the induced subgraph, and recompute
// the decision straight through the algorithm layer.
void verify_constraint_instance(const Instance &instance) {
  if (!instance.program) {
    throw Error(ErrorCode::kValidation, "constraint instance without a program");
  }
  std::set<std::string> survivors;
  for (const auto &name : instance.snapshot.node_names()) survivors.insert(name);
  for (const auto &step : instance.program->steps) {
    if (step.name != "match_nodes") continue;
    MatchSpec spec = MatchSpec::from_json(step.args);
    for (const auto &[name, node] : instance.snapshot.nodes()) {
      if (spec.matches(node)) survivors.erase(name);
    }
  }
  PropertyGraph oracle = induced_subgraph(instance.snapshot, survivors);

  const auto &decision = instance.program->decision_step;
  std::string source = decision.args.at("source").get<std::string>();
  std::string target = decision.args.at("target").get<std::string>();
  std::string expected;
  if (instance.task_id == "fc_constraint_connection") {
    bool connected = oracle.has_node(source) && oracle.has_node(target) &&
                     algo::reachable(oracle, source, target);
    expected = connected ? "true" : "false";
  } else {
    if (oracle.has_node(source) && oracle.has_node(target)) {
      algo::PathResult path = algo::shortest_path(oracle, source, target);
      expected = path.found ? json(path.path).dump() : algo::kNoPathAnnotation;
    } else {
      expected = algo::kNoPathAnnotation;
    }
  }
  if (expected != instance.answer) {
    throw Error(ErrorCode::kValidation,
                "ground-truth answer '" + instance.answer +
                    "' disagrees with the induced-subgraph oracle '" + expected + "'");
  }

  // The post-simulation state must be exactly the induced subgraph.
  PropertyGraph post = instance.snapshot;
  for (const auto &call : instance.calls) {
    if (call.call.name == "delete_nodes") {
      json args = call.call.args;
      args.erase("graph_id");
      ops::default_registry().execute(post, "delete_nodes", args);
    }
  }
  if (!(state_hash(post) == state_hash(oracle))) {
    throw Error(ErrorCode::kValidation, "post-simulation state diverges from induced subgraph");
  }
}

}  // namespace

Instance generate_task(Sandbox &sandbox, const TaskPlugin &plugin, const std::string &task_id,
                       const SamplerConfig &cfg, std::uint64_t seed, const std::string &split,
                       std::size_t instance_index, GraphId graph_id) {
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SamplerConfig scfg = plugin.sampler_config(cfg);
    scfg.seed = Rng::mix({seed, static_cast<std::uint64_t>(attempt), 0x5eedu});
    PropertyGraph snapshot = sample_subgraph(scfg);
    Rng plan_rng(Rng::mix({seed, static_cast<std::uint64_t>(attempt), 0x91a7u}));
    auto plan = plugin.plan(task_id, snapshot, plan_rng, instance_index);
    if (!plan) continue;

    GraphId id = sandbox.create_session(snapshot, graph_id);
    std::vector<json> results;
    for (auto &call : plan->calls) {
      call.call.args["graph_id"] = id.value;
      json result = sandbox.call(id, call.call.name, call.call.args);
      if (result.value("status", "") != "ok") {
        sandbox.drop_session(id);
        throw Error(ErrorCode::kValidation,
                    "ground-truth call '" + call.call.name + "' failed for " + task_id + ": " +
                        result.dump());
      }
      results.push_back(std::move(result));
    }

    PropertyGraph post = sandbox.export_snapshot(id);
    ReplayReport replay = sandbox.replay_verify(id);
    sandbox.drop_session(id);
    if (!replay.ok) {
      throw Error(ErrorCode::kValidation, "ground-truth session failed replay verification");
    }

    Instance instance;
    instance.task_id = task_id;
    instance.instance_id = task_id + "-" + split + "-" + std::to_string(instance_index);
    instance.split = split;
    instance.mode = plan->mode;
    instance.graph_id = id;
    instance.snapshot = std::move(snapshot);
    instance.event = plan->event;
    instance.program = plan->program;
    instance.calls = plan->calls;
    instance.meta = plan->meta;
    if (instance.event) instance.event->event_id = instance.instance_id;
    instance.answer = render_answer(task_id, results.empty() ? json() : results.back(), post);

    if (task_id == "fc_constraint_connection" || task_id == "fc_constraint_path") {
      verify_constraint_instance(instance);
    }
    return instance;
  }
  throw Error(ErrorCode::kValidation, "could not satisfy preconditions for task '" + task_id +
                                          "' after " + std::to_string(kMaxAttempts) +
                                          " resamples");
}

json CorpusStats::to_json() const {
  return json{{"train_instances", train_instances},
              {"test_instances", test_instances},
              {"resamples", resamples}};
}

CorpusStats generate_corpus(const CorpusManifest &manifest, const std::string &out_dir) {
  Sandbox sandbox;
  auto plugins = make_plugins();
  CorpusStats stats;
  std::set<std::string> seen_ids;

  fs::create_directories(fs::path(out_dir) / "train");
  fs::create_directories(fs::path(out_dir) / "test");

  for (const std::string split : {"train", "test"}) {
    std::ofstream instances_out((fs::path(out_dir) / split / "instances.jsonl").string());
    std::ofstream snapshots_out((fs::path(out_dir) / split / "snapshots.jsonl").string());
    std::size_t per_task =
        split == std::string("train") ? manifest.train_per_task : manifest.test_per_task;
    for (const auto &task : manifest.tasks) {
      const TaskPlugin &plugin = plugin_for(plugins, task);
      for (std::size_t i = 0; i < per_task; ++i) {
        std::uint64_t seed = Rng::mix({manifest.master_seed, Rng::hash_string(split),
                                       Rng::hash_string(task), i});
        GraphId graph_id =
            GraphId::from_bits(Rng::mix({seed, 0xa11ceull}), Rng::mix({seed, 0xb0b5ull}));
        if (!seen_ids.insert(graph_id.value).second) {
          throw Error(ErrorCode::kConflict,
                      "duplicate graph id '" + graph_id.value + "' across corpus splits");
        }
        Instance instance =
            generate_task(sandbox, plugin, task, manifest.sampler, seed, split, i, graph_id);
        instances_out << to_ordered(instance.to_json()).dump() << '\n';
        snapshots_out << to_ordered(json{{"graph_id", instance.graph_id.value},
                                         {"snapshot", instance.snapshot.to_snapshot()}})
                             .dump()
                      << '\n';
        if (split == std::string("train")) {
          ++stats.train_instances;
        } else {
          ++stats.test_instances;
        }
      }
    }
  }

  json manifest_doc{{"master_seed", manifest.master_seed},
                    {"train_per_task", manifest.train_per_task},
                    {"test_per_task", manifest.test_per_task},
                    {"tasks", manifest.tasks},
                    {"stats", stats.to_json()}};
  std::ofstream manifest_out((fs::path(out_dir) / "manifest.json").string());
  manifest_out << manifest_doc.dump(2) << '\n';
  return stats;
}

evalkit::Transcript bypass_agent(const Instance &instance, BypassStyle style) {
  evalkit::Transcript transcript;
  transcript.task_id = instance.task_id;
  transcript.instance_id = instance.instance_id;

  // Answer straight from the unrestricted snapshot: the simulation steps are
  // never applied, so scenario tasks answer the wrong graph.
  std::optional<evalkit::ToolCallRecord> decision_call;
  if (instance.program) {
    if (instance.program->decision_step.name != "greedy_coloring") {
      evalkit::ToolCallRecord call;
      call.name = instance.program->decision_step.name;
      call.args = instance.program->decision_step.args;
      call.args["graph_id"] = instance.graph_id.value;
      decision_call = call;
    }
  } else if (!instance.calls.empty()) {
    decision_call = instance.calls.back().call;
  }

  json decision_result;
  PropertyGraph scratch = instance.snapshot;
  if (decision_call) {
    try {
      json args = decision_call->args;
      args.erase("graph_id");
      decision_result = ops::default_registry().execute(scratch, decision_call->name, args);
    } catch (const Error &e) {
      decision_result = e.to_result();
    }
  }
  transcript.final_answer = render_answer(instance.task_id, decision_result, scratch);

  if (style == BypassStyle::kDirectDecision && decision_call) {
    transcript.calls.push_back(*decision_call);
  }
  return transcript;
}

}  // namespace graphsim::benchgen

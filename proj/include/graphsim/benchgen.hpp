#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphsim/evalkit.hpp"
#include "graphsim/rng.hpp"
#include "graphsim/scenario.hpp"

namespace graphsim::benchgen {

inline constexpr std::array<const char *, 11> kTaskIds = {
    "CONNECTIVITY",
    "NEIGHBOR",
    "PREDECESSOR",
    "EDGE",
    "fc_graph_info",
    "fc_node_info",
    "fc_bipartite_maximum_matching",
    "fc_maximum_flow",
    "fc_constraint_connection",
    "fc_constraint_path",
    "delta_plus_one_coloring",
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct CategoricalField {
  std::string name;
  std::vector<std::string> values;
  std::vector<double> weights;  // same length as values
};

struct SamplerConfig {
  Range node_range{20, 30};
  Range edge_range{30, 60};
  std::uint64_t seed = 1;
  std::vector<std::string> label_vocabulary{"ApprovalNode", "AuditorRole", "OrgUnit", "Desk"};
  std::vector<CategoricalField> categorical_fields{
      {"ijudgemethod", {"1", "0", "2"}, {0.65, 0.20, 0.15}},
      {"department", {"finance", "ops", "audit", "legal"}, {0.25, 0.25, 0.25, 0.25}},
  };
  std::string numeric_field = "priority";
  Range numeric_range{1, 9};
  std::string rel_type = "ROUTES_TO";
  bool with_weights = false;
  Range weight_range{1, 20};
};

// Weakly connected random graph (spanning tree plus random extra edges),
// counts within the configured inclusive ranges, deterministic under seed.
PropertyGraph sample_subgraph(const SamplerConfig &cfg);

// One fully materialized benchmark instance. Ground-truth calls were executed
// live against a fresh session; the answer comes from the recorded results
// (never hand-computed).
struct Instance {
  std::string task_id;
  std::string instance_id;
  std::string split;  // train | test
  engine::Mode mode = engine::Mode::kB;
  GraphId graph_id;
  PropertyGraph snapshot;
  std::optional<engine::BusinessEvent> event;
  std::optional<engine::ScenarioProgram> program;
  std::vector<evalkit::GroundTruthCall> calls;
  std::string answer;
  json meta;  // e.g. {"connectivity_semantics":"directed"}

  evalkit::GroundTruthInstance ground_truth() const;
  json to_json() const;  // corpus line (snapshot stored separately)
};

// Build plan produced by a plugin for one sampled graph: the call sequence to
// execute live; the answer is rendered from the recorded results afterwards
// (render_answer below).
struct GtPlan {
  engine::Mode mode = engine::Mode::kB;
  std::optional<engine::BusinessEvent> event;
  std::optional<engine::ScenarioProgram> program;
  std::vector<evalkit::GroundTruthCall> calls;
  json meta;
};

// One plugin covers one or more related tasks (the traversal plugin carries
// four), eight plugins in total across the eleven tasks.
class TaskPlugin {
 public:
  virtual ~TaskPlugin() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> tasks() const = 0;
  // Tailors the sampler for this task (weights, labels, rel_type).
  virtual SamplerConfig sampler_config(const SamplerConfig &base) const { return base; }
  // nullopt = preconditions unsatisfiable on this sample; caller resamples.
  // instance_index drives deterministic instance-level disciplines (e.g. the
  // ~0.5 answer-changing mix for constraint tasks).
  virtual std::optional<GtPlan> plan(const std::string &task_id, const PropertyGraph &snapshot,
                                     Rng &rng, std::size_t instance_index) const = 0;
};

std::vector<std::unique_ptr<TaskPlugin>> make_plugins();
const TaskPlugin &plugin_for(const std::vector<std::unique_ptr<TaskPlugin>> &plugins,
                             const std::string &task_id);

// Samples a graph, creates a session under the given id, executes the
// plugin's plan, extracts the answer, and verifies the session replays.
// Resamples with derived seeds on precondition failure (bounded retries).
Instance generate_task(Sandbox &sandbox, const TaskPlugin &plugin, const std::string &task_id,
                       const SamplerConfig &cfg, std::uint64_t seed, const std::string &split,
                       std::size_t instance_index, GraphId graph_id);

struct CorpusManifest {
  std::size_t train_per_task = 200;
  std::size_t test_per_task = 100;
  std::uint64_t master_seed = 20260801;
  std::vector<std::string> tasks{kTaskIds.begin(), kTaskIds.end()};
  SamplerConfig sampler;
};

struct CorpusStats {
  std::size_t train_instances = 0;
  std::size_t test_instances = 0;
  std::size_t resamples = 0;

  json to_json() const;
};

// Writes <out_dir>/{train,test}/instances.jsonl + snapshots.jsonl and
// <out_dir>/manifest.json. Train/test graph-id sets are disjoint (rejected
// otherwise) and generation is deterministic under (manifest, master seed).
CorpusStats generate_corpus(const CorpusManifest &manifest, const std::string &out_dir);

enum class BypassStyle {
  kSilent,          // zero tool calls
  kDirectDecision,  // the decision call alone, skipping the simulation steps
};

// Scripted stub demonstrating simulation bypass: answers from the
// unrestricted snapshot without running the scenario program. Scores acc 1 /
// f1 0 whenever the static answer coincides with the simulation answer.
evalkit::Transcript bypass_agent(const Instance &instance,
                                 BypassStyle style = BypassStyle::kSilent);

// Shared answer rendering (ground truth, bypass, and scoring must agree).
std::string render_answer(const std::string &task_id, const json &decision_result,
                          const PropertyGraph &post_state);

}  // namespace graphsim::benchgen

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "graphsim/benchgen.hpp"
#include "graphsim/fixtures.hpp"
#include "graphsim/service.hpp"

namespace {

using namespace graphsim;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitThreshold = 2;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_serve(const std::optional<std::string> &config_path,
              const std::optional<std::string> &listen, int port,
              const std::optional<std::string> &log_dir, long ttl) {
  service::ServiceConfig config = service::ServiceConfig::load(config_path);
  if (listen) config.listen_host = *listen;
  if (port >= 0) config.listen_port = port;
  if (log_dir) config.log_dir = log_dir;
  if (ttl >= 0) config.session_ttl = std::chrono::seconds(ttl);

  service::Server server(config);
  int bound = server.start();
  std::cout << "listening on " << config.listen_host << ":" << bound << std::endl;
  // Serve until interrupted.
  while (server.running()) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  return kExitOk;
}

int cmd_gen(const std::string &out_dir, std::size_t train, std::size_t test, std::uint64_t seed,
            const std::vector<std::string> &tasks) {
  benchgen::CorpusManifest manifest;
  manifest.train_per_task = train;
  manifest.test_per_task = test;
  manifest.master_seed = seed;
  if (!tasks.empty()) manifest.tasks = tasks;
  benchgen::CorpusStats stats = benchgen::generate_corpus(manifest, out_dir);
  std::cout << "corpus written to " << out_dir << ": " << stats.train_instances << " train, "
            << stats.test_instances << " test" << std::endl;
  return kExitOk;
}

int cmd_eval(const std::string &transcripts_path, const std::string &gt_path,
             const std::optional<std::string> &report_path) {
  auto transcripts = evalkit::load_transcripts(transcripts_path);
  auto ground_truth = evalkit::load_ground_truth(gt_path);
  evalkit::Report report = evalkit::evaluate(transcripts, ground_truth);
  evalkit::ThresholdReport verdict = evalkit::threshold_report(report.overall);

  std::cout << report.to_table() << '\n';
  if (verdict.deployable) {
    std::cout << "deployable: yes (F1 >= " << evalkit::kMinDeployableF1
              << ", IA <= " << evalkit::kMaxDeployableIA << ")\n";
  } else {
    std::cout << "deployable: no\n";
    for (const auto &reason : verdict.reasons) std::cout << "  - " << reason << '\n';
  }
  if (report_path) {
    json doc = report.to_json();
    doc["threshold"] = verdict.to_json();
    std::ofstream out(*report_path);
    out << doc.dump(2) << '\n';
  }
  return verdict.deployable ? kExitOk : kExitThreshold;
}

int cmd_replay(const std::string &snapshot_path, const std::string &log_path,
               const std::optional<std::string> &expect_hash) {
  PropertyGraph snapshot = PropertyGraph::from_snapshot(json::parse(read_file(snapshot_path)));
  std::vector<OpLogEntry> entries = import_log(read_file(log_path));

  // Without an expected hash the log is replayed for internal consistency:
  // the final state of the replay is the expectation.
  StateHash expected;
  if (expect_hash) {
    expected.digest = *expect_hash;
  } else {
    PropertyGraph scratch = snapshot;
    for (const auto &entry : entries) {
      try {
        ops::default_registry().execute(scratch, entry.name, entry.args);
      } catch (const Error &) {
      }
    }
    expected = state_hash(scratch);
  }
  ReplayReport report = replay_entries(ops::default_registry(), snapshot, entries, expected);
  std::cout << report.to_json().dump(2) << std::endl;
  return report.ok ? kExitOk : kExitValidation;
}

int cmd_demo() {
  Sandbox sandbox;
  engine::ScenarioEngine scenario_engine(sandbox);

  GraphId id = sandbox.create_session(fixtures::approval_routing_snapshot());
  engine::BusinessEvent event = fixtures::approval_routing_event();
  engine::ScenarioProgram program = fixtures::approval_routing_program();
  engine::DecisionTrace trace = scenario_engine.derive_decision(id, event, program);
  std::cout << to_ordered(trace.to_json()).dump(2) << std::endl;

  ReplayReport replay = sandbox.replay_verify(id);
  std::cout << "replay ok: " << (replay.ok ? "true" : "false") << std::endl;
  return replay.ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Session-isolated graph simulation sandbox and benchmark kit"};
  app.require_subcommand(1);

  auto *serve = app.add_subcommand("serve", "Start the tool-call service");
  std::optional<std::string> serve_config, serve_listen, serve_log_dir;
  int serve_port = -1;
  long serve_ttl = -1;
  serve->add_option("--config", serve_config, "JSON config file");
  serve->add_option("--listen", serve_listen, "Listen address");
  serve->add_option("--port", serve_port, "Listen port");
  serve->add_option("--log-dir", serve_log_dir, "Per-session audit log directory");
  serve->add_option("--ttl", serve_ttl, "Idle session TTL in seconds (0 = never)");

  auto *gen = app.add_subcommand("gen", "Generate a benchmark corpus");
  std::string gen_out = "corpus";
  std::size_t gen_train = 200, gen_test = 100;
  std::uint64_t gen_seed = 20260801;
  std::vector<std::string> gen_tasks;
  gen->add_option("--out", gen_out, "Output directory");
  gen->add_option("--train", gen_train, "Training instances per task");
  gen->add_option("--test", gen_test, "Test instances per task");
  gen->add_option("--seed", gen_seed, "Master seed");
  gen->add_option("--tasks", gen_tasks, "Subset of task ids");

  auto *eval = app.add_subcommand("eval", "Score transcripts against ground truth");
  std::string eval_transcripts, eval_gt;
  std::optional<std::string> eval_report;
  eval->add_option("--transcripts", eval_transcripts, "Transcript JSONL file")->required();
  eval->add_option("--gt", eval_gt, "Ground-truth JSONL file")->required();
  eval->add_option("--report", eval_report, "Write the machine-readable report here");

  auto *replay = app.add_subcommand("replay", "Verify a session log against a snapshot");
  std::string replay_snapshot, replay_log;
  std::optional<std::string> replay_hash;
  replay->add_option("--snapshot", replay_snapshot, "Snapshot JSON file")->required();
  replay->add_option("--log", replay_log, "Operation log JSONL file")->required();
  replay->add_option("--expect-hash", replay_hash, "Expected final state hash");

  auto *demo = app.add_subcommand("demo", "Run the expense-approval demo end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) {
      return cmd_serve(serve_config, serve_listen, serve_port, serve_log_dir, serve_ttl);
    }
    if (gen->parsed()) return cmd_gen(gen_out, gen_train, gen_test, gen_seed, gen_tasks);
    if (eval->parsed()) return cmd_eval(eval_transcripts, eval_gt, eval_report);
    if (replay->parsed()) return cmd_replay(replay_snapshot, replay_log, replay_hash);
    if (demo->parsed()) return cmd_demo();
  } catch (const Error &e) {
    std::cerr << "error: " << e.message() << std::endl;
    return kExitValidation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitValidation;
  }
  return kExitOk;
}

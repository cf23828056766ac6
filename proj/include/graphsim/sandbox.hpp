#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphsim/hash.hpp"
#include "graphsim/oplog.hpp"
#include "graphsim/ops.hpp"

namespace graphsim {

// 128-bit identifier rendered lowercase 8-4-4-4-12 hex.
struct GraphId {
  std::string value;

  bool operator==(const GraphId &) const = default;
  static GraphId from_bits(std::uint64_t hi, std::uint64_t lo);
  static bool looks_valid(const std::string &value);
};

struct ReplayReport {
  bool ok = false;
  std::optional<std::uint64_t> first_divergence;
  StateHash expected_hash;  // live session state
  StateHash actual_hash;    // state reached by replaying the log
  std::vector<bool> per_entry_result_match;

  json to_json() const;
};

// Re-executes `entries` against a copy of `snapshot` and compares each
// recorded result (canonical structural equality, timestamps ignored) plus
// the final state hash against `expected_final`.
ReplayReport replay_entries(const ops::Registry &registry, const PropertyGraph &snapshot,
                            const std::vector<OpLogEntry> &entries,
                            const StateHash &expected_final);

struct SandboxConfig {
  // When set, each session appends its log entries to <log_dir>/<id>.log.
  std::optional<std::string> log_dir;
  // Idle sessions older than this are dropped lazily; zero disables expiry.
  std::chrono::seconds session_ttl{0};
};

// Session registry keyed by graph_id. Calls against one session are strictly
// serialized in FIFO arrival order; distinct sessions proceed in parallel.
class Sandbox {
 public:
  Sandbox() : Sandbox(SandboxConfig{}) {}
  explicit Sandbox(SandboxConfig config, const ops::Registry &registry = ops::default_registry());

  // Deep-copies the snapshot into a fresh session. Throws Error(kValidation)
  // listing all invariant violations if the snapshot is invalid.
  GraphId create_session(const PropertyGraph &snapshot);
  // Deterministic-id variant (corpus generation); duplicate ids conflict.
  GraphId create_session(const PropertyGraph &snapshot, GraphId id);

  // Executes one operation transactionally: either it fully applies, or the
  // working graph is unchanged and an error-shaped result is returned. Every
  // invocation on an existing session appends exactly one log entry (errors
  // included). Unknown sessions yield a session-not-found result (unlogged).
  json call(const GraphId &id, const std::string &name, const json &args);

  std::vector<OpLogEntry> get_log(const GraphId &id) const;
  ReplayReport replay_verify(const GraphId &id) const;
  PropertyGraph export_snapshot(const GraphId &id) const;  // current working copy
  PropertyGraph original_snapshot(const GraphId &id) const;
  StateHash current_hash(const GraphId &id) const;
  void drop_session(const GraphId &id);  // second drop throws session-not-found

  bool has_session(const GraphId &id) const;
  std::size_t session_count() const;
  std::vector<std::string> session_ids() const;  // sorted

  const ops::Registry &registry() const { return registry_; }

 private:
  // Ticket lock: strict FIFO admission per session.
  struct FifoMutex {
    std::mutex m;
    std::condition_variable cv;
    std::uint64_t next_ticket = 0;
    std::uint64_t now_serving = 0;

    void lock();
    void unlock();
  };

  struct SessionState {
    GraphId id;
    PropertyGraph snapshot;
    PropertyGraph graph;
    std::vector<OpLogEntry> log;
    std::chrono::system_clock::time_point created_at;
    std::chrono::steady_clock::time_point last_used;
    mutable FifoMutex exec;
  };

  std::shared_ptr<SessionState> find(const GraphId &id) const;
  std::shared_ptr<SessionState> require(const GraphId &id) const;
  void append_audit_line(const SessionState &session, const OpLogEntry &entry);
  void expire_idle_sessions();
  GraphId random_id();

  SandboxConfig config_;
  const ops::Registry &registry_;
  mutable std::shared_mutex registry_mutex_;
  std::unordered_map<std::string, std::shared_ptr<SessionState>> sessions_;
  std::mutex id_rng_mutex_;
  std::uint64_t id_rng_state_;
};

}  // namespace graphsim

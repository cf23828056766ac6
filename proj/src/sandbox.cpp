#include "graphsim/sandbox.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

namespace graphsim {

GraphId GraphId::from_bits(std::uint64_t hi, std::uint64_t lo) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%08" PRIx64 "-%04" PRIx64 "-%04" PRIx64 "-%04" PRIx64
                                  "-%012" PRIx64,
                hi >> 32, (hi >> 16) & 0xffff, hi & 0xffff, lo >> 48, lo & 0xffffffffffffull);
  return GraphId{buf};
}

bool GraphId::looks_valid(const std::string &value) {
  if (value.size() != 36) return false;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i == 8 || i == 13 || i == 18 || i == 23) {
      if (value[i] != '-') return false;
    } else if (!std::isxdigit(static_cast<unsigned char>(value[i])) ||
               std::isupper(static_cast<unsigned char>(value[i]))) {
      return false;
    }
  }
  return true;
}

json ReplayReport::to_json() const {
  json out{{"ok", ok},
           {"expected_hash", expected_hash.digest},
           {"actual_hash", actual_hash.digest},
           {"per_entry_result_match", per_entry_result_match}};
  if (first_divergence) {
    out["first_divergence"] = *first_divergence;
  } else {
    out["first_divergence"] = nullptr;
  }
  return out;
}

ReplayReport replay_entries(const ops::Registry &registry, const PropertyGraph &snapshot,
                            const std::vector<OpLogEntry> &entries,
                            const StateHash &expected_final) {
  ReplayReport report;
  report.expected_hash = expected_final;
  PropertyGraph graph = snapshot;
  bool all_match = true;
  for (const auto &entry : entries) {
    json result;
    try {
      result = registry.execute(graph, entry.name, entry.args);
    } catch (const Error &e) {
      result = e.to_result();
    }
    bool match = canonical_equal(result, entry.result);
    report.per_entry_result_match.push_back(match);
    if (!match && !report.first_divergence) report.first_divergence = entry.seq;
    all_match = all_match && match;
  }
  report.actual_hash = state_hash(graph);
  report.ok = all_match && report.actual_hash == report.expected_hash;
  return report;
}

void Sandbox::FifoMutex::lock() {
  std::unique_lock<std::mutex> guard(m);
  std::uint64_t ticket = next_ticket++;
  cv.wait(guard, [&] { return now_serving == ticket; });
}

void Sandbox::FifoMutex::unlock() {
  {
    std::lock_guard<std::mutex> guard(m);
    ++now_serving;
  }
  cv.notify_all();
}

Sandbox::Sandbox(SandboxConfig config, const ops::Registry &registry)
    : config_(std::move(config)), registry_(registry) {
  std::random_device rd;
  id_rng_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

GraphId Sandbox::random_id() {
  std::lock_guard<std::mutex> guard(id_rng_mutex_);
  auto next = [this] {
    // splitmix64
    std::uint64_t z = (id_rng_state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return GraphId::from_bits(next(), next());
}

GraphId Sandbox::create_session(const PropertyGraph &snapshot) {
  return create_session(snapshot, random_id());
}

GraphId Sandbox::create_session(const PropertyGraph &snapshot, GraphId id) {
  auto violations = snapshot.validate();
  if (!violations.empty()) {
    throw Error(ErrorCode::kValidation, "snapshot violates graph invariants",
                json{{"violations", violations}});
  }
  auto state = std::make_shared<SessionState>();
  state->id = id;
  state->snapshot = snapshot;
  state->graph = snapshot;
  state->created_at = std::chrono::system_clock::now();
  state->last_used = std::chrono::steady_clock::now();

  std::unique_lock<std::shared_mutex> guard(registry_mutex_);
  expire_idle_sessions();
  if (sessions_.count(id.value)) {
    throw Error(ErrorCode::kConflict, "session '" + id.value + "' already exists");
  }
  sessions_.emplace(id.value, std::move(state));
  return id;
}

std::shared_ptr<Sandbox::SessionState> Sandbox::find(const GraphId &id) const {
  std::shared_lock<std::shared_mutex> guard(registry_mutex_);
  auto it = sessions_.find(id.value);
  return it == sessions_.end() ? nullptr : it->second;
}

std::shared_ptr<Sandbox::SessionState> Sandbox::require(const GraphId &id) const {
  auto session = find(id);
  if (!session) {
    throw Error(ErrorCode::kSessionNotFound, "no session with graph_id '" + id.value + "'");
  }
  return session;
}

void Sandbox::expire_idle_sessions() {
  if (config_.session_ttl.count() <= 0) return;
  auto now = std::chrono::steady_clock::now();
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_used > config_.session_ttl) {
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

void Sandbox::append_audit_line(const SessionState &session, const OpLogEntry &entry) {
  if (!config_.log_dir) return;
  std::filesystem::create_directories(*config_.log_dir);
  std::ofstream out(*config_.log_dir + "/" + session.id.value + ".log", std::ios::app);
  out << entry.to_line() << '\n';
}

json Sandbox::call(const GraphId &id, const std::string &name, const json &args) {
  auto session = find(id);
  if (!session) {
    return Error(ErrorCode::kSessionNotFound, "no session with graph_id '" + id.value + "'")
        .to_result();
  }

  std::lock_guard<FifoMutex> guard(session->exec);
  session->last_used = std::chrono::steady_clock::now();

  std::string logged_name = name;
  json logged_args = args.is_null() ? json::object() : args;
  json result;
  try {
    if (!logged_args.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "call arguments must be an object");
    }
    if (logged_args.contains("graph_id")) {
      if (!logged_args["graph_id"].is_string() ||
          logged_args["graph_id"].get<std::string>() != id.value) {
        throw Error(ErrorCode::kInvalidArgument,
                    "graph_id argument does not match the routed session");
      }
    }
    auto [canonical, canonical_args] = registry_.normalize(name, logged_args);
    canonical_args.erase("graph_id");  // constant per session; kept out of the log
    logged_name = canonical;
    logged_args = canonical_args;
    const ops::OpDef &def = registry_.op(canonical);
    ops::validate_args(canonical_args, def.parameters, canonical);
    result = def.execute(session->graph, canonical_args);
  } catch (const Error &e) {
    result = e.to_result();
  }
  if (logged_args.is_object()) logged_args.erase("graph_id");

  OpLogEntry entry;
  entry.seq = session->log.size() + 1;
  entry.timestamp = now_utc();
  entry.name = logged_name;
  entry.args = logged_args;
  entry.result = result;
  session->log.push_back(entry);
  append_audit_line(*session, entry);
  return result;
}

std::vector<OpLogEntry> Sandbox::get_log(const GraphId &id) const {
  auto session = require(id);
  std::lock_guard<FifoMutex> guard(session->exec);
  return session->log;
}

ReplayReport Sandbox::replay_verify(const GraphId &id) const {
  PropertyGraph snapshot;
  std::vector<OpLogEntry> entries;
  StateHash live;
  {
    auto session = require(id);
    std::lock_guard<FifoMutex> guard(session->exec);
    snapshot = session->snapshot;
    entries = session->log;
    live = state_hash(session->graph);
  }
  return replay_entries(registry_, snapshot, entries, live);
}

PropertyGraph Sandbox::export_snapshot(const GraphId &id) const {
  auto session = require(id);
  std::lock_guard<FifoMutex> guard(session->exec);
  return session->graph;
}

PropertyGraph Sandbox::original_snapshot(const GraphId &id) const {
  auto session = require(id);
  std::lock_guard<FifoMutex> guard(session->exec);
  return session->snapshot;
}

StateHash Sandbox::current_hash(const GraphId &id) const {
  auto session = require(id);
  std::lock_guard<FifoMutex> guard(session->exec);
  return state_hash(session->graph);
}

void Sandbox::drop_session(const GraphId &id) {
  std::unique_lock<std::shared_mutex> guard(registry_mutex_);
  if (!sessions_.erase(id.value)) {
    throw Error(ErrorCode::kSessionNotFound, "no session with graph_id '" + id.value + "'");
  }
}

bool Sandbox::has_session(const GraphId &id) const { return find(id) != nullptr; }

std::size_t Sandbox::session_count() const {
  std::shared_lock<std::shared_mutex> guard(registry_mutex_);
  return sessions_.size();
}

std::vector<std::string> Sandbox::session_ids() const {
  std::shared_lock<std::shared_mutex> guard(registry_mutex_);
  std::vector<std::string> out;
  for (const auto &[id, session] : sessions_) {
    (void)session;
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphsim

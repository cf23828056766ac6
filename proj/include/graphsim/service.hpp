#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "graphsim/sandbox.hpp"

namespace graphsim::service {

struct ServiceConfig {
  std::string listen_host = "127.0.0.1";
  int listen_port = 8725;
  std::chrono::seconds session_ttl{0};  // 0 = sessions never expire
  std::optional<std::string> log_dir;

  static ServiceConfig load(const std::optional<std::string> &config_path);
  // GRAPHSIM_LISTEN, GRAPHSIM_PORT, GRAPHSIM_TTL, GRAPHSIM_LOG_DIR override
  // file values.
  void apply_env_overrides();
};

// Request/response tool service over HTTP with JSON bodies:
//   GET    /health
//   GET    /schemas
//   POST   /sessions                    {"snapshot": {...}}
//   POST   /sessions/<id>/call          {"name": ..., "args": {...}}
//   GET    /sessions/<id>/log
//   POST   /sessions/<id>/replay-verify
//   GET    /sessions/<id>/snapshot
//   DELETE /sessions/<id>
//   POST   /fuse                        {"graphs":[...], "targets":[...]}
class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();

  Server(const Server &) = delete;
  Server &operator=(const Server &) = delete;

  // Starts serving on a background thread; returns the bound port (the
  // configured one, or an ephemeral port when configured as 0).
  int start();
  void stop();
  bool running() const { return running_.load(); }

  Sandbox &sandbox() { return *sandbox_; }

 private:
  struct Impl;

  ServiceConfig config_;
  std::unique_ptr<Sandbox> sandbox_;
  std::unique_ptr<Impl> impl_;
  std::thread worker_;
  std::atomic<bool> running_{false};
};

int http_status_for(ErrorCode code);

}  // namespace graphsim::service

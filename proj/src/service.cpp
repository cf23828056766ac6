#include "graphsim/service.hpp"

#include <cstdlib>
#include <fstream>

#include <httplib.h>

#include "graphsim/algo.hpp"

namespace graphsim::service {

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kSessionNotFound:
      return 404;
    case ErrorCode::kConflict:
      return 409;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnknownOperation:
    case ErrorCode::kValidation:
      return 400;
  }
  return 500;
}

ServiceConfig ServiceConfig::load(const std::optional<std::string> &config_path) {
  ServiceConfig config;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) {
      throw Error(ErrorCode::kInvalidArgument, "cannot open config file '" + *config_path + "'");
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "config file is not a JSON object");
    }
    config.listen_host = doc.value("listen_host", config.listen_host);
    config.listen_port = doc.value("listen_port", config.listen_port);
    config.session_ttl = std::chrono::seconds(doc.value("session_ttl_seconds", 0));
    if (doc.contains("log_dir") && !doc["log_dir"].is_null()) {
      config.log_dir = doc["log_dir"].get<std::string>();
    }
  }
  config.apply_env_overrides();
  return config;
}

void ServiceConfig::apply_env_overrides() {
  if (const char *host = std::getenv("GRAPHSIM_LISTEN")) listen_host = host;
  if (const char *port = std::getenv("GRAPHSIM_PORT")) listen_port = std::atoi(port);
  if (const char *ttl = std::getenv("GRAPHSIM_TTL")) {
    session_ttl = std::chrono::seconds(std::atol(ttl));
  }
  if (const char *dir = std::getenv("GRAPHSIM_LOG_DIR")) log_dir = dir;
}

struct Server::Impl {
  httplib::Server http;
};

namespace {

void reply(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_result(httplib::Response &res, const json &result) {
  int status = 200;
  if (result.is_object() && result.value("status", "") == "error") {
    std::string code = result["error"].value("code", "");
    for (ErrorCode candidate :
         {ErrorCode::kInvalidArgument, ErrorCode::kNotFound, ErrorCode::kConflict,
          ErrorCode::kSessionNotFound, ErrorCode::kUnknownOperation, ErrorCode::kValidation}) {
      if (code == to_string(candidate)) status = http_status_for(candidate);
    }
  }
  reply(res, status, result);
}

json parse_body(const httplib::Request &req) {
  if (req.body.empty()) return json::object();
  json doc = json::parse(req.body, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kInvalidArgument, "request body is not valid JSON");
  }
  return doc;
}

template <typename Handler>
void guarded(Handler &&handler, httplib::Response &res) {
  try {
    handler();
  } catch (const Error &e) {
    reply(res, http_status_for(e.code()), e.to_result());
  } catch (const std::exception &e) {
    reply(res, 500,
          json{{"status", "error"},
               {"error", json{{"code", "internal"}, {"message", e.what()}}}});
  }
}

}  // namespace

Server::Server(ServiceConfig config)
    : config_(std::move(config)),
      sandbox_(std::make_unique<Sandbox>(
          SandboxConfig{config_.log_dir, config_.session_ttl})),
      impl_(std::make_unique<Impl>()) {
  auto &http = impl_->http;
  Sandbox &sandbox = *sandbox_;

  http.Get("/health", [](const httplib::Request &, httplib::Response &res) {
    reply(res, 200, json{{"status", "ok"}});
  });

  http.Get("/schemas", [&sandbox](const httplib::Request &, httplib::Response &res) {
    guarded([&] { reply(res, 200, json{{"schemas", sandbox.registry().schema_documents()}}); },
            res);
  });

  http.Post("/sessions", [&sandbox](const httplib::Request &req, httplib::Response &res) {
    guarded(
        [&] {
          json body = parse_body(req);
          if (!body.contains("snapshot")) {
            throw Error(ErrorCode::kInvalidArgument, "body requires a snapshot document");
          }
          PropertyGraph snapshot = PropertyGraph::from_snapshot(body["snapshot"]);
          GraphId id = sandbox.create_session(snapshot);
          reply(res, 200, json{{"status", "ok"}, {"graph_id", id.value}});
        },
        res);
  });

  http.Post(R"(/sessions/([0-9a-f\-]+)/call)",
            [&sandbox](const httplib::Request &req, httplib::Response &res) {
              guarded(
                  [&] {
                    json body = parse_body(req);
                    if (!body.contains("name") || !body["name"].is_string()) {
                      throw Error(ErrorCode::kInvalidArgument, "body requires an operation name");
                    }
                    json args = body.value("args", json::object());
                    // The route is authoritative for the routing key.
                    args["graph_id"] = req.matches[1].str();
                    json result = sandbox.call(GraphId{req.matches[1].str()},
                                               body["name"].get<std::string>(), args);
                    reply_result(res, result);
                  },
                  res);
            });

  http.Get(R"(/sessions/([0-9a-f\-]+)/log)",
           [&sandbox](const httplib::Request &req, httplib::Response &res) {
             guarded(
                 [&] {
                   auto entries = sandbox.get_log(GraphId{req.matches[1].str()});
                   json lines = json::array();
                   for (const auto &entry : entries) {
                     lines.push_back(json::parse(entry.to_line()));
                   }
                   reply(res, 200, json{{"status", "ok"}, {"entries", lines}});
                 },
                 res);
           });

  http.Post(R"(/sessions/([0-9a-f\-]+)/replay-verify)",
            [&sandbox](const httplib::Request &req, httplib::Response &res) {
              guarded(
                  [&] {
                    ReplayReport report = sandbox.replay_verify(GraphId{req.matches[1].str()});
                    json body = report.to_json();
                    body["status"] = "ok";
                    reply(res, 200, body);
                  },
                  res);
            });

  http.Get(R"(/sessions/([0-9a-f\-]+)/snapshot)",
           [&sandbox](const httplib::Request &req, httplib::Response &res) {
             guarded(
                 [&] {
                   PropertyGraph graph = sandbox.export_snapshot(GraphId{req.matches[1].str()});
                   reply(res, 200, json{{"status", "ok"}, {"snapshot", graph.to_snapshot()}});
                 },
                 res);
           });

  http.Delete(R"(/sessions/([0-9a-f\-]+))",
              [&sandbox](const httplib::Request &req, httplib::Response &res) {
                guarded(
                    [&] {
                      sandbox.drop_session(GraphId{req.matches[1].str()});
                      reply(res, 200, json{{"status", "ok"}});
                    },
                    res);
              });

  // Reasoning-mode support: merge session exports into one attribute-pruned
  // graph for in-context computation.
  http.Post("/fuse", [](const httplib::Request &req, httplib::Response &res) {
    guarded(
        [&] {
          json body = parse_body(req);
          if (!body.contains("graphs") || !body["graphs"].is_array()) {
            throw Error(ErrorCode::kInvalidArgument, "body requires a graphs array");
          }
          std::vector<PropertyGraph> graphs;
          for (const auto &doc : body["graphs"]) {
            graphs.push_back(PropertyGraph::from_snapshot(doc));
          }
          std::set<std::string> targets;
          for (const auto &target : body.value("targets", json::array())) {
            targets.insert(target.get<std::string>());
          }
          algo::FusedGraph fused = algo::fuse_graphs(graphs, targets);
          reply(res, 200,
                json{{"status", "ok"},
                     {"graph", fused.graph.to_snapshot()},
                     {"targets", std::vector<std::string>(fused.targets.begin(),
                                                          fused.targets.end())},
                     {"pruned_attribute_count", fused.pruned_attribute_count}});
        },
        res);
  });
}

Server::~Server() { stop(); }

int Server::start() {
  auto &http = impl_->http;
  int port = config_.listen_port;
  if (port == 0) {
    port = http.bind_to_any_port(config_.listen_host);
    if (port < 0) {
      throw Error(ErrorCode::kValidation, "could not bind to " + config_.listen_host);
    }
  } else if (!http.bind_to_port(config_.listen_host, port)) {
    throw Error(ErrorCode::kValidation,
                "could not bind to " + config_.listen_host + ":" + std::to_string(port));
  }
  running_ = true;
  worker_ = std::thread([this] { impl_->http.listen_after_bind(); });
  http.wait_until_ready();
  return port;
}

void Server::stop() {
  if (!running_.exchange(false)) return;
  impl_->http.stop();
  if (worker_.joinable()) worker_.join();
}

}  // namespace graphsim::service

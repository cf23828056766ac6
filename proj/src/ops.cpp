#include "graphsim/ops.hpp"

#include <algorithm>
#include <cmath>

#include "graphsim/algo.hpp"
#include "graphsim/predicate.hpp"

namespace graphsim::ops {

namespace {

json string_param(const std::string &description) {
  return json{{"type", "string"}, {"description", description}};
}

json schema(std::initializer_list<std::pair<std::string, json>> properties,
            std::vector<std::string> required) {
  json props{{"graph_id", string_param("Routing key of the sandbox session.")}};
  for (const auto &[name, doc] : properties) props[name] = doc;
  required.insert(required.begin(), "graph_id");
  return json{{"type", "object"}, {"properties", props}, {"required", required}};
}

bool type_matches(const json &value, const std::string &type) {
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "array") return value.is_array();
  if (type == "object") return value.is_object();
  return true;
}

std::vector<std::string> string_list(const json &value) {
  std::vector<std::string> out;
  for (const auto &item : value) out.push_back(item.get<std::string>());
  return out;
}

json ok() { return json{{"status", "ok"}}; }

// --- selectors ---------------------------------------------------------

// {source, target, rel_type?}: with rel_type the exact key, without it every
// edge between the pair. Matching nothing is an error.
std::vector<EdgeKey> resolve_selector(const PropertyGraph &g, const json &doc,
                                      const std::string &op_name) {
  if (!doc.contains("source") || !doc.contains("target") || !doc["source"].is_string() ||
      !doc["target"].is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                op_name + " selectors require string source and target");
  }
  std::string source = doc["source"].get<std::string>();
  std::string target = doc["target"].get<std::string>();
  std::vector<EdgeKey> matched;
  if (doc.contains("rel_type") && !doc["rel_type"].is_null()) {
    if (!doc["rel_type"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, op_name + " rel_type must be a string");
    }
    EdgeKey key{source, target, doc["rel_type"].get<std::string>()};
    if (g.has_edge(key)) matched.push_back(key);
  } else {
    matched = g.edges_between(source, target);
  }
  if (matched.empty()) {
    throw Error(ErrorCode::kNotFound,
                "no edge matches selector (" + source + " -> " + target +
                    (doc.contains("rel_type") && !doc["rel_type"].is_null()
                         ? ", " + doc["rel_type"].get<std::string>()
                         : "") +
                    ")");
  }
  return matched;
}

struct WeightTransform {
  enum class Kind { kSet, kScale, kAdd } kind;
  double value;
};

WeightTransform parse_weight_transform(const json &doc) {
  if (!doc.is_object() || !doc.contains("op") || !doc["op"].is_string() ||
      !doc.contains("value") || !doc["value"].is_number()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight transform must be {\"op\":\"set|scale|add\",\"value\":number}");
  }
  std::string op = doc["op"].get<std::string>();
  WeightTransform out{WeightTransform::Kind::kSet, doc["value"].get<double>()};
  if (op == "set") {
    out.kind = WeightTransform::Kind::kSet;
  } else if (op == "scale") {
    out.kind = WeightTransform::Kind::kScale;
  } else if (op == "add") {
    out.kind = WeightTransform::Kind::kAdd;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown weight transform op '" + op + "'");
  }
  return out;
}

PropertyMap parse_property_set(const json &doc) {
  PropertyMap out;
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "'set' must be a property object");
  }
  for (const auto &[key, value] : doc.items()) {
    if (key.empty()) throw Error(ErrorCode::kInvalidArgument, "property names must be non-empty");
    out.emplace(key, PropertyValue::from_json(value));
  }
  return out;
}

// --- matching family ----------------------------------------------------

json op_match_nodes(PropertyGraph &g, const json &args) {
  MatchSpec spec = MatchSpec::from_json(args);
  std::vector<std::string> diagnostics;
  std::vector<std::string> names;
  for (const auto &[name, node] : g.nodes()) {
    if (spec.matches(node, &diagnostics)) names.push_back(name);
  }
  json result = ok();
  result["nodes"] = names;
  if (!diagnostics.empty()) result["diagnostics"] = diagnostics;
  return result;
}

json op_match_edges(PropertyGraph &g, const json &args) {
  std::optional<std::string> source, target, rel_type;
  if (args.contains("source")) source = args["source"].get<std::string>();
  if (args.contains("target")) target = args["target"].get<std::string>();
  if (args.contains("rel_type")) rel_type = args["rel_type"].get<std::string>();

  std::vector<Predicate> predicates;
  if (args.contains("properties")) {
    if (!args["properties"].is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "properties filter must be an object");
    }
    for (const auto &[field, doc] : args["properties"].items()) {
      predicates.push_back(Predicate::from_json(field, doc));
    }
  }
  std::optional<Predicate> weight_pred;
  if (args.contains("weight")) {
    weight_pred = Predicate::from_json("weight", args["weight"]);
  }

  std::vector<std::string> diagnostics;
  json edges = json::array();
  for (const auto &[key, edge] : g.edges()) {
    if (source && key.source != *source) continue;
    if (target && key.target != *target) continue;
    if (rel_type && key.rel_type != *rel_type) continue;
    std::string subject = "edge (" + key.source + " -> " + key.target + ", " + key.rel_type + ")";
    bool all = true;
    for (const auto &p : predicates) {
      if (!eval_predicate_on_properties(edge.properties, p, subject, &diagnostics)) {
        all = false;
        break;
      }
    }
    if (all && weight_pred) {
      PropertyMap weight_view;
      if (edge.weight) weight_view.emplace("weight", PropertyValue(*edge.weight));
      all = eval_predicate_on_properties(weight_view, *weight_pred, subject, &diagnostics);
    }
    if (all) edges.push_back(key.to_json());
  }
  json result = ok();
  result["edges"] = edges;
  if (!diagnostics.empty()) result["diagnostics"] = diagnostics;
  return result;
}

// --- mutation family ----------------------------------------------------

json op_create_nodes(PropertyGraph &g, const json &args) {
  std::vector<NodeRecord> nodes;
  std::set<std::string> batch_names;
  std::vector<std::string> offenders;
  for (const auto &doc : args["nodes"]) {
    NodeRecord node = NodeRecord::from_json(doc);
    if (node.name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "node names must be non-empty");
    }
    if (!batch_names.insert(node.name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate node name '" + node.name + "' within batch");
    }
    if (g.has_node(node.name)) offenders.push_back(node.name);
    nodes.push_back(std::move(node));
  }
  if (!offenders.empty()) {
    throw Error(ErrorCode::kConflict, "nodes already exist", json{{"names", offenders}});
  }
  std::vector<std::string> created;
  for (auto &node : nodes) {
    created.push_back(node.name);
    g.add_node(std::move(node));
  }
  std::sort(created.begin(), created.end());
  json result = ok();
  result["created"] = json{{"nodes", created}};
  return result;
}

json op_delete_nodes(PropertyGraph &g, const json &args) {
  std::vector<std::string> listed = string_list(args["node_names"]);
  std::set<std::string> names(listed.begin(), listed.end());  // repeats count once
  std::vector<std::string> missing;
  for (const auto &name : names) {
    if (!g.has_node(name)) missing.push_back(name);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kNotFound, "nodes do not exist", json{{"names", missing}});
  }
  std::size_t incident = 0;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (names.count(key.source) || names.count(key.target)) ++incident;
  }
  for (const auto &name : names) g.remove_node(name);
  json result = ok();
  result["deleted_nodes"] = names.size();
  result["deleted_edges"] = incident;
  result["node_names"] = std::vector<std::string>(names.begin(), names.end());
  return result;
}

json op_update_nodes(PropertyGraph &g, const json &args) {
  std::vector<std::string> listed = string_list(args["node_names"]);
  std::set<std::string> names(listed.begin(), listed.end());
  PropertyMap updates = parse_property_set(args["set"]);
  for (const auto &name : names) {
    if (!g.has_node(name)) {
      throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
    }
  }
  for (const auto &name : names) {
    NodeRecord &node = g.node_mut(name);
    for (const auto &[key, value] : updates) node.properties[key] = value;
  }
  json result = ok();
  result["updated"] = names.size();
  return result;
}

json op_create_edges(PropertyGraph &g, const json &args) {
  std::vector<EdgeRecord> edges;
  std::set<EdgeKey> batch_keys;
  for (const auto &doc : args["edges"]) {
    EdgeRecord edge = EdgeRecord::from_json(doc);
    if (!g.has_node(edge.key.source)) {
      throw Error(ErrorCode::kNotFound, "edge source '" + edge.key.source + "' does not exist");
    }
    if (!g.has_node(edge.key.target)) {
      throw Error(ErrorCode::kNotFound, "edge target '" + edge.key.target + "' does not exist");
    }
    if (!batch_keys.insert(edge.key).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge (" + edge.key.source + " -> " + edge.key.target + ", " +
                      edge.key.rel_type + ") within batch");
    }
    if (g.has_edge(edge.key)) {
      throw Error(ErrorCode::kConflict, "edge (" + edge.key.source + " -> " + edge.key.target +
                                            ", " + edge.key.rel_type + ") already exists");
    }
    if (edge.weight && (!std::isfinite(*edge.weight) || *edge.weight < 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "edge weights must be finite and >= 0");
    }
    edges.push_back(std::move(edge));
  }
  json created = json::array();
  for (const auto &key : batch_keys) created.push_back(key.to_json());
  for (auto &edge : edges) g.add_edge(std::move(edge));
  json result = ok();
  result["created"] = json{{"edges", created}};
  return result;
}

json op_delete_edges(PropertyGraph &g, const json &args) {
  std::set<EdgeKey> to_delete;
  for (const auto &selector : args["edges"]) {
    for (const auto &key : resolve_selector(g, selector, "delete_edges")) {
      to_delete.insert(key);
    }
  }
  for (const auto &key : to_delete) g.remove_edge(key);
  json result = ok();
  result["deleted_edges"] = to_delete.size();
  return result;
}

json op_update_edges(PropertyGraph &g, const json &args) {
  std::vector<EdgeKey> matched = resolve_selector(g, args, "update_edges");
  PropertyMap updates;
  if (args.contains("set")) updates = parse_property_set(args["set"]);
  std::optional<WeightTransform> transform;
  if (args.contains("weight")) transform = parse_weight_transform(args["weight"]);

  // Stage the new weights first: a transform that goes negative anywhere
  // fails the whole call with the graph untouched.
  std::map<EdgeKey, double> new_weights;
  if (transform) {
    for (const auto &key : matched) {
      const EdgeRecord &edge = g.edge(key);
      double current = 0.0;
      if (transform->kind != WeightTransform::Kind::kSet) {
        if (!edge.weight) {
          throw Error(ErrorCode::kInvalidArgument,
                      "weight transform needs an existing weight on edge (" + key.source +
                          " -> " + key.target + ", " + key.rel_type + ")");
        }
        current = *edge.weight;
      }
      double next = 0.0;
      switch (transform->kind) {
        case WeightTransform::Kind::kSet:
          next = transform->value;
          break;
        case WeightTransform::Kind::kScale:
          next = current * transform->value;
          break;
        case WeightTransform::Kind::kAdd:
          next = current + transform->value;
          break;
      }
      if (!std::isfinite(next) || next < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "weight transform yields a negative or non-finite weight on edge (" +
                        key.source + " -> " + key.target + ", " + key.rel_type + ")");
      }
      new_weights[key] = next;
    }
  }
  for (const auto &key : matched) {
    EdgeRecord &edge = g.edge_mut(key);
    for (const auto &[prop, value] : updates) edge.properties[prop] = value;
    if (transform) edge.weight = new_weights[key];
  }
  json result = ok();
  result["updated"] = matched.size();
  return result;
}

json op_set_edge_weights(PropertyGraph &g, const json &args) {
  std::map<EdgeKey, double> assignments;  // later assignments win
  for (const auto &doc : args["assignments"]) {
    if (!doc.is_object() || !doc.contains("weight") || !doc["weight"].is_number()) {
      throw Error(ErrorCode::kInvalidArgument, "assignments require a numeric weight");
    }
    double weight = doc["weight"].get<double>();
    if (!std::isfinite(weight) || weight < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "edge weights must be finite and >= 0");
    }
    for (const auto &key : resolve_selector(g, doc, "set_edge_weights")) {
      assignments[key] = weight;
    }
  }
  for (const auto &[key, weight] : assignments) g.set_edge_weight(key, weight);
  json result = ok();
  result["updated"] = assignments.size();
  return result;
}

// --- retrieval family ---------------------------------------------------

json op_get_node_info(PropertyGraph &g, const json &args) {
  const NodeRecord &node = g.node(args["name"].get<std::string>());
  json result = ok();
  result["node"] = node.to_json();
  return result;
}

json op_get_graph_info(PropertyGraph &g, const json &args) {
  (void)args;
  json edges = json::array();
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    edges.push_back(key.to_json());
  }
  json result = ok();
  result["node_count"] = g.node_count();
  result["edge_count"] = g.edge_count();
  result["nodes"] = g.node_names();
  result["edges"] = edges;
  result["max_degree"] = g.max_degree();
  return result;
}

json op_get_node_neighbors(PropertyGraph &g, const json &args) {
  std::string name = args["name"].get<std::string>();
  if (!g.has_node(name)) {
    throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
  }
  std::string direction = args.value("direction", "out");
  std::set<std::string> neighbors;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if ((direction == "out" || direction == "both") && key.source == name) {
      neighbors.insert(key.target);
    }
    if ((direction == "in" || direction == "both") && key.target == name) {
      neighbors.insert(key.source);
    }
  }
  json result = ok();
  result["neighbors"] = std::vector<std::string>(neighbors.begin(), neighbors.end());
  return result;
}

// --- path / connectivity family ------------------------------------------

json op_shortest_path(PropertyGraph &g, const json &args) {
  std::optional<bool> weighted;
  if (args.contains("weighted")) weighted = args["weighted"].get<bool>();
  algo::PathResult path = algo::shortest_path(g, args["source"].get<std::string>(),
                                              args["target"].get<std::string>(), weighted);
  json result = ok();
  result.update(path.to_json());
  return result;
}

json op_check_graph_connectivity(PropertyGraph &g, const json &args) {
  bool has_source = args.contains("source");
  bool has_target = args.contains("target");
  if (has_source != has_target) {
    throw Error(ErrorCode::kInvalidArgument,
                "connectivity takes either both source and target or neither");
  }
  json result = ok();
  if (has_source) {
    std::string source = args["source"].get<std::string>();
    std::string target = args["target"].get<std::string>();
    if (!g.has_node(source)) {
      throw Error(ErrorCode::kNotFound, "source node '" + source + "' does not exist");
    }
    if (!g.has_node(target)) {
      throw Error(ErrorCode::kNotFound, "target node '" + target + "' does not exist");
    }
    result["connected"] = algo::reachable(g, source, target);
    result["mode"] = "pairwise";
    return result;
  }
  result["mode"] = "global";
  if (g.empty()) {
    result["connected"] = false;
    result["annotation"] = "empty_graph";
    return result;
  }
  result["connected"] = algo::weakly_connected(g);
  return result;
}

json op_check_direct_edge(PropertyGraph &g, const json &args) {
  std::string source = args["source"].get<std::string>();
  std::string target = args["target"].get<std::string>();
  if (!g.has_node(source)) {
    throw Error(ErrorCode::kNotFound, "source node '" + source + "' does not exist");
  }
  if (!g.has_node(target)) {
    throw Error(ErrorCode::kNotFound, "target node '" + target + "' does not exist");
  }
  bool exists = false;
  if (args.contains("rel_type")) {
    exists = g.has_edge(EdgeKey{source, target, args["rel_type"].get<std::string>()});
  } else {
    exists = !g.edges_between(source, target).empty();
  }
  json result = ok();
  result["exists"] = exists;
  return result;
}

json op_analyze_graph_node(PropertyGraph &g, const json &args) {
  std::string name = args["name"].get<std::string>();
  if (!g.has_node(name)) {
    throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
  }
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  std::set<std::string> neighbors;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (key.source == name) {
      ++out_degree;
      neighbors.insert(key.target);
    }
    if (key.target == name) {
      ++in_degree;
      neighbors.insert(key.source);
    }
  }
  json result = ok();
  result["in_degree"] = in_degree;
  result["out_degree"] = out_degree;
  result["degree"] = in_degree + out_degree;
  result["neighbor_count"] = neighbors.size();
  result["property_count"] = g.node(name).properties.size();
  return result;
}

// --- algorithm family -----------------------------------------------------

json op_calculate_max_flow(PropertyGraph &g, const json &args) {
  algo::FlowResult flow =
      algo::max_flow(g, args["source"].get<std::string>(), args["sink"].get<std::string>());
  json result = ok();
  result.update(flow.to_json());
  return result;
}

json op_calculate_max_matching(PropertyGraph &g, const json &args) {
  algo::MatchingResult matching = algo::max_matching(g, args["left_label"].get<std::string>(),
                                                     args["right_label"].get<std::string>());
  json result = ok();
  result.update(matching.to_json());
  return result;
}

json node_list_param() {
  return json{{"type", "array"},
              {"items", json{{"type", "object"}}},
              {"description", "Node records: {name, label?, properties?}."}};
}

json edge_list_param() {
  return json{{"type", "array"},
              {"items", json{{"type", "object"}}},
              {"description", "Edge records: {source, target, rel_type?, weight?, properties?}."}};
}

json name_list_param(const std::string &description) {
  return json{{"type", "array"}, {"items", json{{"type", "string"}}}, {"description", description}};
}

Registry build_default_registry() {
  Registry r;

  r.add({"match_nodes",
         "Names of nodes satisfying every predicate in the match spec (conjunction).",
         schema({{"label", string_param("Exact label filter.")},
                 {"properties",
                  json{{"type", "object"},
                       {"description", "Per-property predicates, e.g. {\"f\":{\"op\":\"ne\",\"value\":\"1\"}}."}}}},
                {}),
         false, op_match_nodes});

  r.add({"match_edges",
         "Edge keys satisfying the source/target/rel_type filters, property predicates, and "
         "weight predicate.",
         schema({{"source", string_param("Exact source filter.")},
                 {"target", string_param("Exact target filter.")},
                 {"rel_type", string_param("Exact relation filter.")},
                 {"properties", json{{"type", "object"}, {"description", "Per-property predicates."}}},
                 {"weight", json{{"type", "object"}, {"description", "Predicate on the edge weight."}}}},
                {}),
         false, op_match_edges});

  r.add({"create_nodes", "Creates a batch of nodes; the whole batch applies or none of it does.",
         schema({{"nodes", node_list_param()}}, {"nodes"}), true, op_create_nodes});

  r.add({"delete_nodes",
         "Deletes the named nodes and all incident edges; unknown names fail the whole call.",
         schema({{"node_names", name_list_param("Names of the nodes to delete.")}}, {"node_names"}),
         true, op_delete_nodes});

  r.add({"update_nodes", "Overwrites/adds the given properties on each named node.",
         schema({{"node_names", name_list_param("Names of the nodes to update.")},
                 {"set", json{{"type", "object"}, {"description", "Properties to write."}}}},
                {"node_names", "set"}),
         true, op_update_nodes});

  r.add({"create_edges", "Creates a batch of edges; endpoints must exist; atomic.",
         schema({{"edges", edge_list_param()}}, {"edges"}), true, op_create_edges});

  r.add({"delete_edges",
         "Deletes edges by selector {source, target, rel_type?}; omitting rel_type removes every "
         "edge between the pair; selectors matching nothing fail the call.",
         schema({{"edges", json{{"type", "array"},
                                {"items", json{{"type", "object"}}},
                                {"description", "Selectors {source, target, rel_type?}."}}}},
                {"edges"}),
         true, op_delete_edges});

  r.add({"update_edges",
         "Merges properties and/or applies a weight transform {set|scale|add} to every edge "
         "matching the selector.",
         schema({{"source", string_param("Selector source.")},
                 {"target", string_param("Selector target.")},
                 {"rel_type", string_param("Selector relation; omit for all between the pair.")},
                 {"set", json{{"type", "object"}, {"description", "Properties to merge."}}},
                 {"weight",
                  json{{"type", "object"},
                       {"description", "Weight transform {\"op\":\"set|scale|add\",\"value\":n}."}}}},
                {"source", "target"}),
         true, op_update_edges});

  r.add({"set_edge_weights", "Sets absolute weights on the selected edges; atomic batch.",
         schema({{"assignments",
                  json{{"type", "array"},
                       {"items", json{{"type", "object"}}},
                       {"description", "Assignments {source, target, rel_type?, weight}."}}}},
                {"assignments"}),
         true, op_set_edge_weights});

  r.add({"get_node_info", "Full record (name, label, properties) of one node.",
         schema({{"name", string_param("Node name.")}}, {"name"}), false, op_get_node_info});

  r.add({"get_graph_info",
         "Node/edge counts, sorted node and edge lists, and the maximum (in+out) degree.",
         schema({}, {}), false, op_get_graph_info});

  r.add({"get_node_neighbors", "Sorted distinct neighbor names in the given direction.",
         schema({{"name", string_param("Node name.")},
                 {"direction", json{{"type", "string"},
                                    {"enum", json::array({"out", "in", "both"})},
                                    {"description", "Traversal direction; default out."}}}},
                {"name"}),
         false, op_get_node_neighbors});

  r.add({"shortest_path",
         "Directed shortest path by hops, or by weight sum when weighted (auto-weighted when "
         "every edge carries a weight); ties break to the lexicographically smallest path.",
         schema({{"source", string_param("Start node.")},
                 {"target", string_param("End node.")},
                 {"weighted", json{{"type", "boolean"},
                                   {"description", "Force weighted/unweighted; omit for auto."}}}},
                {"source", "target"}),
         false, op_shortest_path});

  r.add({"check_graph_connectivity",
         "Directed reachability between source and target, or weak connectivity of the whole "
         "graph when neither is given.",
         schema({{"source", string_param("Optional start node.")},
                 {"target", string_param("Optional end node.")}},
                {}),
         false, op_check_graph_connectivity});

  r.add({"check_direct_edge", "Whether a direct edge source->target (optionally rel_type) exists.",
         schema({{"source", string_param("Source node.")},
                 {"target", string_param("Target node.")},
                 {"rel_type", string_param("Optional exact relation.")}},
                {"source", "target"}),
         false, op_check_direct_edge});

  r.add({"analyze_graph_node",
         "Degree summary of one node: in/out/total degree, distinct neighbor count, property "
         "count.",
         schema({{"name", string_param("Node name.")}}, {"name"}), false, op_analyze_graph_node});

  r.add({"calculate_max_flow",
         "Maximum source->sink flow with edge weights as capacities (augmenting paths).",
         schema({{"source", string_param("Flow source.")}, {"sink", string_param("Flow sink.")}},
                {"source", "sink"}),
         false, op_calculate_max_flow});

  r.add({"calculate_max_matching",
         "Maximum-cardinality matching between the two label classes (direction ignored).",
         schema({{"left_label", string_param("Label of the left class.")},
                 {"right_label", string_param("Label of the right class.")}},
                {"left_label", "right_label"}),
         false, op_calculate_max_matching});

  r.add_alias({"create_node", "create_nodes", "Creates one node (single-record form).",
               schema({{"node", json{{"type", "object"},
                                     {"description", "Node record {name, label?, properties?}."}}}},
                      {"node"}),
               [](const json &args) {
                 if (!args.contains("node") || !args["node"].is_object()) {
                   throw Error(ErrorCode::kInvalidArgument, "create_node requires a node object");
                 }
                 json out = args;
                 out.erase("node");
                 out["nodes"] = json::array({args["node"]});
                 return out;
               }});

  r.add_alias({"create_edge", "create_edges", "Creates one edge (single-record form).",
               schema({{"edge", json{{"type", "object"},
                                     {"description",
                                      "Edge record {source, target, rel_type?, weight?, properties?}."}}}},
                      {"edge"}),
               [](const json &args) {
                 if (!args.contains("edge") || !args["edge"].is_object()) {
                   throw Error(ErrorCode::kInvalidArgument, "create_edge requires an edge object");
                 }
                 json out = args;
                 out.erase("edge");
                 out["edges"] = json::array({args["edge"]});
                 return out;
               }});

  return r;
}

}  // namespace

void Registry::add(OpDef op) { ops_.emplace(op.name, std::move(op)); }

void Registry::add_alias(AliasDef alias) { aliases_.emplace(alias.name, std::move(alias)); }

bool Registry::has(const std::string &name) const {
  return ops_.count(name) > 0 || aliases_.count(name) > 0;
}

std::string Registry::canonical_name(const std::string &name) const {
  if (ops_.count(name)) return name;
  auto it = aliases_.find(name);
  if (it != aliases_.end()) return it->second.alias_of;
  throw Error(ErrorCode::kUnknownOperation, "unknown operation '" + name + "'");
}

const OpDef &Registry::op(const std::string &name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) {
    throw Error(ErrorCode::kUnknownOperation, "unknown operation '" + name + "'");
  }
  return it->second;
}

std::pair<std::string, json> Registry::normalize(const std::string &name, const json &args) const {
  if (ops_.count(name)) return {name, args};
  auto it = aliases_.find(name);
  if (it != aliases_.end()) return {it->second.alias_of, it->second.normalize_args(args)};
  throw Error(ErrorCode::kUnknownOperation, "unknown operation '" + name + "'");
}

json Registry::execute(PropertyGraph &graph, const std::string &name, const json &args) const {
  auto [canonical, canonical_args] = normalize(name, args);
  const OpDef &def = op(canonical);
  validate_args(canonical_args, def.parameters, canonical);
  return def.execute(graph, canonical_args);
}

std::vector<std::string> Registry::canonical_names() const {
  std::vector<std::string> out;
  for (const auto &[name, def] : ops_) {
    (void)def;
    out.push_back(name);
  }
  return out;
}

std::vector<json> Registry::schema_documents() const {
  std::vector<json> out;
  for (const auto &[name, def] : ops_) {
    out.push_back(json{
        {"name", name}, {"description", def.description}, {"parameters", def.parameters}});
  }
  for (const auto &[name, alias] : aliases_) {
    out.push_back(json{{"name", name},
                       {"description", alias.description},
                       {"parameters", alias.parameters},
                       {"alias_of", alias.alias_of}});
  }
  return out;
}

const Registry &default_registry() {
  static const Registry registry = build_default_registry();
  return registry;
}

void validate_args(const json &args, const json &parameters, const std::string &op_name) {
  if (!args.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, op_name + " arguments must be an object");
  }
  const json &props = parameters["properties"];
  for (const auto &[key, value] : args.items()) {
    if (key == "graph_id") {
      if (!value.is_string()) {
        throw Error(ErrorCode::kInvalidArgument, "graph_id must be a string");
      }
      continue;
    }
    auto it = props.find(key);
    if (it == props.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  op_name + " does not take an argument named '" + key + "'");
    }
    const json &decl = *it;
    if (decl.contains("type") && !type_matches(value, decl["type"].get<std::string>())) {
      throw Error(ErrorCode::kInvalidArgument,
                  op_name + " argument '" + key + "' must be of type " +
                      decl["type"].get<std::string>());
    }
    if (decl.contains("enum")) {
      bool found = false;
      for (const auto &candidate : decl["enum"]) {
        if (candidate == value) found = true;
      }
      if (!found) {
        throw Error(ErrorCode::kInvalidArgument,
                    op_name + " argument '" + key + "' is outside its enum");
      }
    }
    if (decl.contains("items") && decl["items"].contains("type") && value.is_array()) {
      for (const auto &item : value) {
        if (!type_matches(item, decl["items"]["type"].get<std::string>())) {
          throw Error(ErrorCode::kInvalidArgument,
                      op_name + " argument '" + key + "' has an element of the wrong type");
        }
      }
    }
  }
  if (parameters.contains("required")) {
    for (const auto &required : parameters["required"]) {
      std::string key = required.get<std::string>();
      if (key == "graph_id") continue;  // satisfied by the routing layer
      if (!args.contains(key)) {
        throw Error(ErrorCode::kInvalidArgument,
                    op_name + " is missing required argument '" + key + "'");
      }
    }
  }
}

}  // namespace graphsim::ops

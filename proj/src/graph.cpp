#include "graphsim/graph.hpp"

#include <cmath>

namespace graphsim {

PropertyValue::PropertyValue(double number) : value_(number) {
  if (!std::isfinite(number)) {
    throw Error(ErrorCode::kInvalidArgument, "property numbers must be finite");
  }
}

json PropertyValue::to_json() const {
  if (is_text()) return text();
  if (is_bool()) return boolean();
  return number();
}

PropertyValue PropertyValue::from_json(const json &value) {
  if (value.is_string()) return PropertyValue(value.get<std::string>());
  if (value.is_boolean()) return PropertyValue(value.get<bool>());
  if (value.is_number()) return PropertyValue(value.get<double>());
  throw Error(ErrorCode::kInvalidArgument,
              "property values must be text, number, or boolean, got " + value.dump());
}

namespace {

json properties_to_json(const PropertyMap &properties) {
  json out = json::object();
  for (const auto &[key, value] : properties) out[key] = value.to_json();
  return out;
}

PropertyMap properties_from_json(const json &doc) {
  PropertyMap out;
  if (doc.is_null()) return out;
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "properties must be an object");
  }
  for (const auto &[key, value] : doc.items()) {
    if (key.empty()) throw Error(ErrorCode::kInvalidArgument, "property names must be non-empty");
    out.emplace(key, PropertyValue::from_json(value));
  }
  return out;
}

}  // namespace

json NodeRecord::to_json() const {
  return json{{"name", name}, {"label", label}, {"properties", properties_to_json(properties)}};
}

NodeRecord NodeRecord::from_json(const json &doc) {
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string()) {
    throw Error(ErrorCode::kInvalidArgument, "node records require a string name");
  }
  NodeRecord node;
  node.name = doc["name"].get<std::string>();
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "node label must be a string");
    }
    node.label = doc["label"].get<std::string>();
  }
  if (doc.contains("properties")) node.properties = properties_from_json(doc["properties"]);
  for (const auto &[key, value] : doc.items()) {
    (void)value;
    if (key != "name" && key != "label" && key != "properties") {
      throw Error(ErrorCode::kInvalidArgument, "unexpected node field '" + key + "'");
    }
  }
  return node;
}

json EdgeKey::to_json() const {
  return json{{"source", source}, {"target", target}, {"rel_type", rel_type}};
}

json EdgeRecord::to_json() const {
  json out = key.to_json();
  if (weight) out["weight"] = *weight;
  if (!properties.empty()) out["properties"] = properties_to_json(properties);
  return out;
}

EdgeRecord EdgeRecord::from_json(const json &doc) {
  if (!doc.is_object() || !doc.contains("source") || !doc.contains("target")) {
    throw Error(ErrorCode::kInvalidArgument, "edge records require source and target");
  }
  for (const char *field : {"source", "target"}) {
    if (!doc[field].is_string() || doc[field].get<std::string>().empty()) {
      throw Error(ErrorCode::kInvalidArgument, std::string(field) + " must be a non-empty string");
    }
  }
  EdgeRecord edge;
  edge.key.source = doc["source"].get<std::string>();
  edge.key.target = doc["target"].get<std::string>();
  if (doc.contains("rel_type")) {
    if (!doc["rel_type"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "rel_type must be a string");
    }
    edge.key.rel_type = doc["rel_type"].get<std::string>();
  }
  if (doc.contains("weight") && !doc["weight"].is_null()) {
    if (!doc["weight"].is_number()) {
      throw Error(ErrorCode::kInvalidArgument, "edge weight must be a number");
    }
    edge.weight = doc["weight"].get<double>();
  }
  if (doc.contains("properties")) edge.properties = properties_from_json(doc["properties"]);
  for (const auto &[key, value] : doc.items()) {
    (void)value;
    if (key != "source" && key != "target" && key != "rel_type" && key != "weight" &&
        key != "properties") {
      throw Error(ErrorCode::kInvalidArgument, "unexpected edge field '" + key + "'");
    }
  }
  return edge;
}

const NodeRecord &PropertyGraph::node(const std::string &name) const {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
  }
  return it->second;
}

const EdgeRecord &PropertyGraph::edge(const EdgeKey &key) const {
  auto it = edges_.find(key);
  if (it == edges_.end()) {
    throw Error(ErrorCode::kNotFound,
                "edge (" + key.source + " -> " + key.target + ", " + key.rel_type +
                    ") does not exist");
  }
  return it->second;
}

NodeRecord &PropertyGraph::node_mut(const std::string &name) {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
  }
  return it->second;
}

EdgeRecord &PropertyGraph::edge_mut(const EdgeKey &key) {
  auto it = edges_.find(key);
  if (it == edges_.end()) {
    throw Error(ErrorCode::kNotFound,
                "edge (" + key.source + " -> " + key.target + ", " + key.rel_type +
                    ") does not exist");
  }
  return it->second;
}

void PropertyGraph::add_node(NodeRecord node) {
  if (node.name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "node names must be non-empty");
  }
  if (nodes_.count(node.name)) {
    throw Error(ErrorCode::kConflict, "node '" + node.name + "' already exists");
  }
  nodes_.emplace(node.name, std::move(node));
}

void PropertyGraph::add_edge(EdgeRecord edge) {
  if (!has_node(edge.key.source)) {
    throw Error(ErrorCode::kNotFound, "edge source '" + edge.key.source + "' does not exist");
  }
  if (!has_node(edge.key.target)) {
    throw Error(ErrorCode::kNotFound, "edge target '" + edge.key.target + "' does not exist");
  }
  if (edges_.count(edge.key)) {
    throw Error(ErrorCode::kConflict, "edge (" + edge.key.source + " -> " + edge.key.target +
                                          ", " + edge.key.rel_type + ") already exists");
  }
  if (edge.weight && (!std::isfinite(*edge.weight) || *edge.weight < 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge weights must be finite and >= 0");
  }
  edges_.emplace(edge.key, std::move(edge));
}

std::size_t PropertyGraph::remove_node(const std::string &name) {
  if (!nodes_.count(name)) {
    throw Error(ErrorCode::kNotFound, "node '" + name + "' does not exist");
  }
  std::size_t removed_edges = 0;
  for (auto it = edges_.begin(); it != edges_.end();) {
    if (it->first.source == name || it->first.target == name) {
      it = edges_.erase(it);
      ++removed_edges;
    } else {
      ++it;
    }
  }
  nodes_.erase(name);
  return removed_edges;
}

void PropertyGraph::remove_edge(const EdgeKey &key) {
  if (!edges_.erase(key)) {
    throw Error(ErrorCode::kNotFound,
                "edge (" + key.source + " -> " + key.target + ", " + key.rel_type +
                    ") does not exist");
  }
}

void PropertyGraph::set_edge_weight(const EdgeKey &key, double weight) {
  if (!std::isfinite(weight) || weight < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "edge weights must be finite and >= 0");
  }
  edge_mut(key).weight = weight;
}

std::vector<EdgeKey> PropertyGraph::edges_between(const std::string &source,
                                                  const std::string &target) const {
  std::vector<EdgeKey> out;
  auto it = edges_.lower_bound(EdgeKey{source, target, ""});
  for (; it != edges_.end() && it->first.source == source && it->first.target == target; ++it) {
    out.push_back(it->first);
  }
  return out;
}

std::vector<std::string> PropertyGraph::node_names() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto &[name, node] : nodes_) {
    (void)node;
    out.push_back(name);
  }
  return out;
}

std::size_t PropertyGraph::degree(const std::string &name) const {
  std::size_t d = 0;
  for (const auto &[key, edge] : edges_) {
    (void)edge;
    if (key.source == name) ++d;
    if (key.target == name) ++d;
  }
  return d;
}

std::size_t PropertyGraph::max_degree() const {
  std::map<std::string, std::size_t> degrees;
  for (const auto &[key, edge] : edges_) {
    (void)edge;
    ++degrees[key.source];
    ++degrees[key.target];
  }
  std::size_t best = 0;
  for (const auto &[name, d] : degrees) {
    (void)name;
    best = std::max(best, d);
  }
  return best;
}

std::vector<std::string> PropertyGraph::validate() const {
  std::vector<std::string> violations;
  for (const auto &[name, node] : nodes_) {
    if (name.empty()) violations.push_back("empty node name");
    if (name != node.name) violations.push_back("node map key '" + name + "' != record name");
    for (const auto &[prop, value] : node.properties) {
      if (prop.empty()) violations.push_back("node '" + name + "' has an empty property name");
      if (value.is_number() && !std::isfinite(value.number())) {
        violations.push_back("node '" + name + "' property '" + prop + "' is not finite");
      }
    }
  }
  for (const auto &[key, edge] : edges_) {
    if (!nodes_.count(key.source)) {
      violations.push_back("edge source '" + key.source + "' does not exist");
    }
    if (!nodes_.count(key.target)) {
      violations.push_back("edge target '" + key.target + "' does not exist");
    }
    if (edge.weight && (!std::isfinite(*edge.weight) || *edge.weight < 0.0)) {
      violations.push_back("edge (" + key.source + " -> " + key.target + ", " + key.rel_type +
                           ") has a negative or non-finite weight");
    }
  }
  return violations;
}

json PropertyGraph::to_snapshot() const {
  json nodes = json::array();
  for (const auto &[name, node] : nodes_) {
    (void)name;
    nodes.push_back(node.to_json());
  }
  json edges = json::array();
  for (const auto &[key, edge] : edges_) {
    (void)key;
    edges.push_back(edge.to_json());
  }
  return json{{"nodes", nodes}, {"edges", edges}};
}

PropertyGraph PropertyGraph::from_snapshot(const json &doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "snapshot must be an object with nodes and edges");
  }
  PropertyGraph g;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) {
      throw Error(ErrorCode::kInvalidArgument, "snapshot nodes must be an array");
    }
    for (const auto &node : doc["nodes"]) g.add_node(NodeRecord::from_json(node));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw Error(ErrorCode::kInvalidArgument, "snapshot edges must be an array");
    }
    for (const auto &edge : doc["edges"]) g.add_edge(EdgeRecord::from_json(edge));
  }
  return g;
}

PropertyGraph induced_subgraph(const PropertyGraph &g, const std::set<std::string> &keep) {
  for (const auto &name : keep) {
    if (!g.has_node(name)) {
      throw Error(ErrorCode::kInvalidArgument, "keep-set names unknown node '" + name + "'");
    }
  }
  PropertyGraph out;
  for (const auto &name : keep) out.add_node(g.node(name));
  for (const auto &[key, edge] : g.edges()) {
    if (keep.count(key.source) && keep.count(key.target)) out.add_edge(edge);
  }
  return out;
}

}  // namespace graphsim

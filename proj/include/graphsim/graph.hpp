#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "graphsim/error.hpp"
#include "graphsim/jsonutil.hpp"

namespace graphsim {

// One attribute value: text, finite decimal, or boolean.
class PropertyValue {
 public:
  PropertyValue() : value_(std::string{}) {}
  PropertyValue(std::string text) : value_(std::move(text)) {}
  PropertyValue(const char *text) : value_(std::string(text)) {}
  PropertyValue(double number);  // rejects NaN/infinity
  PropertyValue(int number) : PropertyValue(static_cast<double>(number)) {}
  PropertyValue(bool flag) : value_(flag) {}

  bool is_text() const { return std::holds_alternative<std::string>(value_); }
  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_bool() const { return std::holds_alternative<bool>(value_); }

  const std::string &text() const { return std::get<std::string>(value_); }
  double number() const { return std::get<double>(value_); }
  bool boolean() const { return std::get<bool>(value_); }

  json to_json() const;
  static PropertyValue from_json(const json &value);

  bool operator==(const PropertyValue &other) const { return value_ == other.value_; }
  bool operator!=(const PropertyValue &other) const { return !(*this == other); }

 private:
  std::variant<std::string, double, bool> value_;
};

using PropertyMap = std::map<std::string, PropertyValue>;

struct NodeRecord {
  std::string name;
  std::string label;
  PropertyMap properties;

  json to_json() const;
  static NodeRecord from_json(const json &doc);
};

// Identity of a directed edge. At most one edge may exist per key.
struct EdgeKey {
  std::string source;
  std::string target;
  std::string rel_type;

  auto operator<=>(const EdgeKey &) const = default;

  json to_json() const;
};

struct EdgeRecord {
  EdgeKey key;
  std::optional<double> weight;  // >= 0 when present
  PropertyMap properties;

  json to_json() const;
  static EdgeRecord from_json(const json &doc);
};

// Directed labeled property graph. Node and edge containers are ordered maps,
// so iteration order is the canonical order (name, then (source, target,
// rel_type)) everywhere.
class PropertyGraph {
 public:
  using NodeMap = std::map<std::string, NodeRecord>;
  using EdgeMap = std::map<EdgeKey, EdgeRecord>;

  const NodeMap &nodes() const { return nodes_; }
  const EdgeMap &edges() const { return edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool has_node(const std::string &name) const { return nodes_.count(name) > 0; }
  bool has_edge(const EdgeKey &key) const { return edges_.count(key) > 0; }

  const NodeRecord &node(const std::string &name) const;
  const EdgeRecord &edge(const EdgeKey &key) const;

  // Mutators validate their local invariant and throw Error on violation;
  // the graph is untouched on failure.
  void add_node(NodeRecord node);
  void add_edge(EdgeRecord edge);
  // Removes the node and every incident edge; returns the incident edge count.
  std::size_t remove_node(const std::string &name);
  void remove_edge(const EdgeKey &key);

  NodeRecord &node_mut(const std::string &name);
  EdgeRecord &edge_mut(const EdgeKey &key);
  void set_edge_weight(const EdgeKey &key, double weight);

  // Edges between an unordered node pair, any rel_type, both directions not
  // implied: selection is on exact (source, target) orientation.
  std::vector<EdgeKey> edges_between(const std::string &source, const std::string &target) const;

  std::vector<std::string> node_names() const;

  // in+out degree per node; self-loops count twice.
  std::size_t degree(const std::string &name) const;
  std::size_t max_degree() const;

  // Full invariant scan; returns violation descriptions (empty == valid).
  std::vector<std::string> validate() const;

  // Snapshot document: {"nodes":[...],"edges":[...]}, order-insensitive load.
  json to_snapshot() const;
  static PropertyGraph from_snapshot(const json &doc);

  bool operator==(const PropertyGraph &other) const = default;

 private:
  NodeMap nodes_;
  EdgeMap edges_;
};

// Exact induced-subgraph law: result nodes = keep, result edges = edges of g
// with both endpoints in keep. Unknown names in keep are an error.
PropertyGraph induced_subgraph(const PropertyGraph &g, const std::set<std::string> &keep);

}  // namespace graphsim

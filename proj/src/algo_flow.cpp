#include <deque>
#include <limits>

#include "graphsim/algo.hpp"

namespace graphsim::algo {

json FlowResult::to_json() const {
  json flows = json::array();
  for (const auto &[key, flow] : edge_flows) {
    json doc = key.to_json();
    doc["flow"] = flow;
    flows.push_back(doc);
  }
  return json{{"max_flow_value", max_flow_value}, {"edge_flows", flows}};
}

namespace {

struct Arc {
  int from;
  int to;
  double capacity;
  double flow = 0.0;
  EdgeKey key;       // original edge; unset for residual reverses
  bool forward = false;
};

}  // namespace

FlowResult max_flow(const PropertyGraph &g, const std::string &source, const std::string &sink) {
  if (!g.has_node(source)) {
    throw Error(ErrorCode::kNotFound, "source node '" + source + "' does not exist");
  }
  if (!g.has_node(sink)) {
    throw Error(ErrorCode::kNotFound, "sink node '" + sink + "' does not exist");
  }
  if (source == sink) {
    throw Error(ErrorCode::kInvalidArgument, "source and sink must differ");
  }

  // Forward reachability from the source decides which edges can carry flow;
  // those edges must all be weighted.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (key.source != key.target) adj[key.source].push_back(key.target);
  }
  std::set<std::string> reachable{source};
  std::deque<std::string> queue{source};
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    for (const auto &v : adj[u]) {
      if (reachable.insert(v).second) queue.push_back(v);
    }
  }

  std::map<std::string, int> index;
  for (const auto &[name, node] : g.nodes()) {
    (void)node;
    index.emplace(name, static_cast<int>(index.size()));
  }

  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(index.size());
  for (const auto &[key, edge] : g.edges()) {
    if (key.source == key.target) continue;  // self-loops never carry flow
    if (!reachable.count(key.source)) continue;
    if (!edge.weight) {
      throw Error(ErrorCode::kInvalidArgument,
                  "flow computation requires a weight on edge (" + key.source + " -> " +
                      key.target + ", " + key.rel_type + ")");
    }
    int u = index[key.source];
    int v = index[key.target];
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back(Arc{u, v, *edge.weight, 0.0, key, true});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back(Arc{v, u, 0.0, 0.0, EdgeKey{}, false});
  }

  int s = index[source];
  int t = index[sink];
  double total = 0.0;

  // Breadth-first augmenting paths over arcs in canonical edge order.
  while (true) {
    std::vector<int> parent_arc(index.size(), -1);
    std::deque<int> bfs{s};
    std::vector<bool> seen(index.size(), false);
    seen[s] = true;
    while (!bfs.empty() && !seen[t]) {
      int u = bfs.front();
      bfs.pop_front();
      for (int arc_id : out[u]) {
        const Arc &arc = arcs[arc_id];
        double residual = arc.capacity - arc.flow;
        if (residual > 0.0 && !seen[arc.to]) {
          seen[arc.to] = true;
          parent_arc[arc.to] = arc_id;
          bfs.push_back(arc.to);
        }
      }
    }
    if (!seen[t]) break;

    double bottleneck = std::numeric_limits<double>::infinity();
    for (int v = t; v != s;) {
      const Arc &arc = arcs[parent_arc[v]];
      bottleneck = std::min(bottleneck, arc.capacity - arc.flow);
      v = arc.from;
    }
    for (int v = t; v != s;) {
      int arc_id = parent_arc[v];
      arcs[arc_id].flow += bottleneck;
      arcs[arc_id ^ 1].flow -= bottleneck;
      v = arcs[arc_id].from;
    }
    total += bottleneck;
  }

  FlowResult result;
  result.max_flow_value = total;
  for (const Arc &arc : arcs) {
    if (arc.forward && arc.flow > 0.0) result.edge_flows[arc.key] = arc.flow;
  }
  return result;
}

}  // namespace graphsim::algo

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

#include "graphsim/algo.hpp"

namespace graphsim::algo {

json PathResult::to_json() const {
  json out{{"found", found}, {"path", path}};
  if (found) out["cost"] = cost;
  if (annotation) out["annotation"] = *annotation;
  return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-pair minimum weight over parallel edges; missing weights surface as an
// invalid-argument naming the first offending edge in canonical order.
std::map<std::string, std::map<std::string, double>> weighted_adjacency(const PropertyGraph &g,
                                                                        bool reversed) {
  std::map<std::string, std::map<std::string, double>> adj;
  for (const auto &[key, edge] : g.edges()) {
    if (!edge.weight) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weighted path query requires a weight on edge (" + key.source + " -> " +
                      key.target + ", " + key.rel_type + ")");
    }
    const std::string &from = reversed ? key.target : key.source;
    const std::string &to = reversed ? key.source : key.target;
    auto [it, inserted] = adj[from].emplace(to, *edge.weight);
    if (!inserted) it->second = std::min(it->second, *edge.weight);
  }
  return adj;
}

std::map<std::string, std::set<std::string>> unweighted_adjacency(const PropertyGraph &g,
                                                                  bool reversed) {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (reversed) {
      adj[key.target].insert(key.source);
    } else {
      adj[key.source].insert(key.target);
    }
  }
  return adj;
}

std::map<std::string, double> bfs_distances(const PropertyGraph &g, const std::string &start,
                                            bool reversed) {
  auto adj = unweighted_adjacency(g, reversed);
  std::map<std::string, double> dist;
  dist[start] = 0.0;
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    auto it = adj.find(u);
    if (it == adj.end()) continue;
    for (const auto &v : it->second) {
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1.0;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::map<std::string, double> dijkstra_distances(
    const std::map<std::string, std::map<std::string, double>> &adj, const std::string &start) {
  std::map<std::string, double> dist;
  using Item = std::pair<double, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[start] = 0.0;
  heap.push({0.0, start});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    auto known = dist.find(u);
    if (known != dist.end() && d > known->second) continue;
    auto it = adj.find(u);
    if (it == adj.end()) continue;
    for (const auto &[v, w] : it->second) {
      double candidate = d + w;
      auto existing = dist.find(v);
      if (existing == dist.end() || candidate < existing->second) {
        dist[v] = candidate;
        heap.push({candidate, v});
      }
    }
  }
  return dist;
}

}  // namespace

PathResult shortest_path(const PropertyGraph &g, const std::string &source,
                         const std::string &target, std::optional<bool> weighted) {
  if (!g.has_node(source)) {
    throw Error(ErrorCode::kNotFound, "source node '" + source + "' does not exist");
  }
  if (!g.has_node(target)) {
    throw Error(ErrorCode::kNotFound, "target node '" + target + "' does not exist");
  }

  bool use_weights;
  if (weighted.has_value()) {
    use_weights = *weighted;
  } else {
    use_weights = !g.edges().empty() &&
                  std::all_of(g.edges().begin(), g.edges().end(),
                              [](const auto &kv) { return kv.second.weight.has_value(); });
  }

  PathResult result;
  if (source == target) {
    result.found = true;
    result.path = {source};
    result.cost = 0.0;
    return result;
  }

  // Distances to the target via the reversed graph, then a forward greedy
  // walk picking the smallest-named neighbor that stays on a shortest path:
  // yields the lexicographically smallest minimum-cost node sequence.
  if (use_weights) {
    auto reverse_adj = weighted_adjacency(g, /*reversed=*/true);
    auto dist = dijkstra_distances(reverse_adj, target);
    if (!dist.count(source)) {
      result.annotation = kNoPathAnnotation;
      return result;
    }
    auto forward_adj = weighted_adjacency(g, /*reversed=*/false);
    result.found = true;
    result.cost = dist[source];
    std::string u = source;
    result.path.push_back(u);
    while (u != target) {
      const auto &neighbors = forward_adj[u];
      bool advanced = false;
      for (const auto &[v, w] : neighbors) {  // ascending name order
        auto it = dist.find(v);
        if (it != dist.end() && w + it->second == dist[u]) {
          result.path.push_back(v);
          u = v;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        throw Error(ErrorCode::kValidation, "shortest-path reconstruction lost the route");
      }
    }
    return result;
  }

  auto dist = bfs_distances(g, target, /*reversed=*/true);
  if (!dist.count(source)) {
    result.annotation = kNoPathAnnotation;
    return result;
  }
  auto forward_adj = unweighted_adjacency(g, /*reversed=*/false);
  result.found = true;
  result.cost = dist[source];
  std::string u = source;
  result.path.push_back(u);
  while (u != target) {
    bool advanced = false;
    for (const auto &v : forward_adj[u]) {
      auto it = dist.find(v);
      if (it != dist.end() && it->second == dist[u] - 1.0) {
        result.path.push_back(v);
        u = v;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw Error(ErrorCode::kValidation, "shortest-path reconstruction lost the route");
    }
  }
  return result;
}

bool reachable(const PropertyGraph &g, const std::string &source, const std::string &target) {
  if (!g.has_node(source) || !g.has_node(target)) return false;
  auto dist = bfs_distances(g, source, /*reversed=*/false);
  return dist.count(target) > 0;
}

bool weakly_connected(const PropertyGraph &g) {
  if (g.nodes().empty()) return false;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    adj[key.source].insert(key.target);
    adj[key.target].insert(key.source);
  }
  std::set<std::string> seen;
  std::deque<std::string> queue{g.nodes().begin()->first};
  seen.insert(g.nodes().begin()->first);
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    for (const auto &v : adj[u]) {
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen.size() == g.node_count();
}

}  // namespace graphsim::algo

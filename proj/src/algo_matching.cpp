#include "graphsim/algo.hpp"

namespace graphsim::algo {

json MatchingResult::to_json() const {
  json out_pairs = json::array();
  for (const auto &[left, right] : pairs) out_pairs.push_back(json::array({left, right}));
  return json{{"size", size}, {"pairs", out_pairs}};
}

namespace {

bool try_augment(const std::string &left,
                 const std::map<std::string, std::set<std::string>> &adj,
                 std::map<std::string, std::string> &match_right,
                 std::set<std::string> &visited) {
  auto it = adj.find(left);
  if (it == adj.end()) return false;
  for (const auto &right : it->second) {
    if (!visited.insert(right).second) continue;
    auto owner = match_right.find(right);
    if (owner == match_right.end() || try_augment(owner->second, adj, match_right, visited)) {
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

MatchingResult max_matching(const PropertyGraph &g, const std::string &left_label,
                            const std::string &right_label) {
  if (left_label == right_label) {
    throw Error(ErrorCode::kInvalidArgument, "bipartition labels must differ");
  }

  // Cross-class edges form the bipartite graph; same-class edges and
  // self-loops are ignored; an endpoint bearing neither label is an error.
  std::map<std::string, std::set<std::string>> adj;  // left -> rights
  for (const auto &[key, edge] : g.edges()) {
    (void)edge;
    if (key.source == key.target) continue;
    const std::string &source_label = g.node(key.source).label;
    const std::string &target_label = g.node(key.target).label;
    for (const auto &[name, label] : {std::pair{key.source, source_label},
                                      std::pair{key.target, target_label}}) {
      if (label != left_label && label != right_label) {
        throw Error(ErrorCode::kInvalidArgument,
                    "node '" + name + "' carries neither bipartition label");
      }
    }
    if (source_label == target_label) continue;
    const std::string &left = source_label == left_label ? key.source : key.target;
    const std::string &right = source_label == left_label ? key.target : key.source;
    adj[left].insert(right);
  }

  std::map<std::string, std::string> match_right;  // right -> left
  for (const auto &[left, rights] : adj) {         // ascending left-name order
    (void)rights;
    std::set<std::string> visited;
    try_augment(left, adj, match_right, visited);
  }

  MatchingResult result;
  std::map<std::string, std::string> match_left;  // left -> right, sorted
  for (const auto &[right, left] : match_right) match_left[left] = right;
  for (const auto &[left, right] : match_left) result.pairs.emplace_back(left, right);
  result.size = result.pairs.size();
  return result;
}

}  // namespace graphsim::algo

#include <cstdio>

#include "graphsim/benchgen.hpp"

namespace graphsim::benchgen {

namespace {

std::string node_name(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "Node_%02u", static_cast<unsigned>(i + 1));
  return buf;
}

std::size_t weighted_pick(Rng &rng, const std::vector<double> &weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double roll = rng.unit() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    roll -= weights[i];
    if (roll < 0.0) return i;
  }
  return weights.size() - 1;
}

}  // namespace

PropertyGraph sample_subgraph(const SamplerConfig &cfg) {
  if (cfg.node_range.lo == 0 || cfg.node_range.lo > cfg.node_range.hi ||
      cfg.edge_range.lo > cfg.edge_range.hi) {
    throw Error(ErrorCode::kInvalidArgument, "sampler ranges must be non-empty and ordered");
  }
  Rng rng(cfg.seed);
  std::size_t n = rng.uniform(cfg.node_range.lo, cfg.node_range.hi);
  if (cfg.edge_range.hi < n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge range [" + std::to_string(cfg.edge_range.lo) + "," +
                    std::to_string(cfg.edge_range.hi) + "] cannot connect " + std::to_string(n) +
                    " nodes");
  }
  std::size_t m = rng.uniform(std::max(cfg.edge_range.lo, n - 1), cfg.edge_range.hi);

  PropertyGraph g;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    NodeRecord node;
    node.name = node_name(i);
    node.label = cfg.label_vocabulary.empty() ? "" : cfg.label_vocabulary[rng.uniform(
                                                         0, cfg.label_vocabulary.size() - 1)];
    for (const auto &field : cfg.categorical_fields) {
      node.properties.emplace(field.name,
                              PropertyValue(field.values[weighted_pick(rng, field.weights)]));
    }
    if (!cfg.numeric_field.empty()) {
      node.properties.emplace(
          cfg.numeric_field,
          PropertyValue(static_cast<double>(rng.uniform(cfg.numeric_range.lo, cfg.numeric_range.hi))));
    }
    names.push_back(node.name);
    g.add_node(std::move(node));
  }

  auto maybe_weight = [&](EdgeRecord &edge) {
    if (cfg.with_weights) {
      edge.weight = static_cast<double>(rng.uniform(cfg.weight_range.lo, cfg.weight_range.hi));
    }
  };

  // Random spanning tree for weak connectivity, random orientation per edge.
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t parent = rng.uniform(0, i - 1);
    EdgeRecord edge;
    bool forward = rng.chance(0.5);
    edge.key = EdgeKey{forward ? names[parent] : names[i], forward ? names[i] : names[parent],
                       cfg.rel_type};
    maybe_weight(edge);
    g.add_edge(std::move(edge));
  }

  while (g.edge_count() < m) {
    std::size_t a = rng.uniform(0, n - 1);
    std::size_t b = rng.uniform(0, n - 1);
    if (a == b) continue;
    EdgeKey key{names[a], names[b], cfg.rel_type};
    if (g.has_edge(key)) continue;
    EdgeRecord edge;
    edge.key = key;
    maybe_weight(edge);
    g.add_edge(std::move(edge));
  }
  return g;
}

}  // namespace graphsim::benchgen

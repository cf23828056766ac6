#pragma once

#include <string>

#include "graphsim/graph.hpp"

namespace graphsim {

// SHA-256 digest of the canonical serialization, rendered as lowercase hex.
// Equal graphs hash equal regardless of construction order.
struct StateHash {
  std::string digest;

  bool operator==(const StateHash &) const = default;
};

// Canonical form: nodes sorted by name (properties sorted by key), edges
// sorted by (source, target, rel_type), numbers in shortest round-trip form.
std::string canonical_serialization(const PropertyGraph &g);

StateHash state_hash(const PropertyGraph &g);

std::string sha256_hex(const std::string &data);

}  // namespace graphsim

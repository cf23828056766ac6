#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphsim/graph.hpp"

namespace graphsim {

enum class PredicateOp { kEq, kNe, kGt, kGe, kLt, kLe, kIn, kExists };

PredicateOp predicate_op_from_string(const std::string &name);
const char *to_string(PredicateOp op);

// One condition on a node's label or a property. Wire form:
// {"op":"ne","value":"1"} keyed by the field name. The reserved field name
// "label" addresses the node label.
struct Predicate {
  std::string field;
  PredicateOp op = PredicateOp::kEq;
  PropertyValue value;                        // eq/ne/gt/ge/lt/le
  std::vector<PropertyValue> value_list;      // in
  bool exists_value = true;                   // exists

  // Throws Error(kInvalidArgument) on malformed input (non-numeric value for
  // an ordering op, empty list for `in`, ...).
  static Predicate from_json(const std::string &field, const json &doc);
  json to_json() const;
};

inline constexpr const char *kLabelField = "label";

// Truth of p against the node. A missing property is false for every op
// except `exists` with value false. A numeric comparison against a
// non-numeric stored value evaluates false and appends a note to
// `diagnostics` when provided.
bool eval_predicate(const NodeRecord &node, const Predicate &p,
                    std::vector<std::string> *diagnostics = nullptr);

// Same semantics against an edge's property map (no label field).
bool eval_predicate_on_properties(const PropertyMap &properties, const Predicate &p,
                                  const std::string &subject,
                                  std::vector<std::string> *diagnostics = nullptr);

// Conjunctive match specification: optional label equality plus one predicate
// per property name. Empty spec matches everything.
struct MatchSpec {
  std::optional<std::string> label;
  std::vector<Predicate> predicates;

  static MatchSpec from_json(const json &args);
  bool matches(const NodeRecord &node, std::vector<std::string> *diagnostics = nullptr) const;
};

}  // namespace graphsim

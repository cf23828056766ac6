#include "graphsim/predicate.hpp"

namespace graphsim {

PredicateOp predicate_op_from_string(const std::string &name) {
  if (name == "eq") return PredicateOp::kEq;
  if (name == "ne") return PredicateOp::kNe;
  if (name == "gt") return PredicateOp::kGt;
  if (name == "ge") return PredicateOp::kGe;
  if (name == "lt") return PredicateOp::kLt;
  if (name == "le") return PredicateOp::kLe;
  if (name == "in") return PredicateOp::kIn;
  if (name == "exists") return PredicateOp::kExists;
  throw Error(ErrorCode::kInvalidArgument, "unknown predicate op '" + name + "'");
}

const char *to_string(PredicateOp op) {
  switch (op) {
    case PredicateOp::kEq:
      return "eq";
    case PredicateOp::kNe:
      return "ne";
    case PredicateOp::kGt:
      return "gt";
    case PredicateOp::kGe:
      return "ge";
    case PredicateOp::kLt:
      return "lt";
    case PredicateOp::kLe:
      return "le";
    case PredicateOp::kIn:
      return "in";
    case PredicateOp::kExists:
      return "exists";
  }
  return "?";
}

Predicate Predicate::from_json(const std::string &field, const json &doc) {
  if (field.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "predicate field name must be non-empty");
  }
  if (!doc.is_object() || !doc.contains("op") || !doc["op"].is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                "predicate for '" + field + "' must be {\"op\":...,\"value\":...}");
  }
  Predicate p;
  p.field = field;
  p.op = predicate_op_from_string(doc["op"].get<std::string>());
  if (!doc.contains("value")) {
    throw Error(ErrorCode::kInvalidArgument, "predicate for '" + field + "' is missing value");
  }
  const json &value = doc["value"];
  switch (p.op) {
    case PredicateOp::kIn:
      if (!value.is_array() || value.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "'in' requires a non-empty value list");
      }
      for (const auto &item : value) p.value_list.push_back(PropertyValue::from_json(item));
      break;
    case PredicateOp::kExists:
      if (!value.is_boolean()) {
        throw Error(ErrorCode::kInvalidArgument, "'exists' requires a boolean value");
      }
      p.exists_value = value.get<bool>();
      break;
    case PredicateOp::kGt:
    case PredicateOp::kGe:
    case PredicateOp::kLt:
    case PredicateOp::kLe:
      if (!value.is_number()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "'" + std::string(to_string(p.op)) + "' requires a numeric value");
      }
      p.value = PropertyValue::from_json(value);
      break;
    default:
      p.value = PropertyValue::from_json(value);
      break;
  }
  return p;
}

json Predicate::to_json() const {
  json out{{"op", to_string(op)}};
  switch (op) {
    case PredicateOp::kIn: {
      json list = json::array();
      for (const auto &item : value_list) list.push_back(item.to_json());
      out["value"] = list;
      break;
    }
    case PredicateOp::kExists:
      out["value"] = exists_value;
      break;
    default:
      out["value"] = value.to_json();
      break;
  }
  return out;
}

namespace {

// Ordering comparisons apply only when the stored value is numeric; anything
// else is a type mismatch that evaluates false.
bool compare_numeric(PredicateOp op, double stored, double wanted) {
  switch (op) {
    case PredicateOp::kGt:
      return stored > wanted;
    case PredicateOp::kGe:
      return stored >= wanted;
    case PredicateOp::kLt:
      return stored < wanted;
    case PredicateOp::kLe:
      return stored <= wanted;
    default:
      return false;
  }
}

bool eval_against_value(const PropertyValue &stored, const Predicate &p,
                        const std::string &subject, std::vector<std::string> *diagnostics) {
  switch (p.op) {
    case PredicateOp::kEq:
      return stored == p.value;
    case PredicateOp::kNe:
      return stored != p.value;
    case PredicateOp::kIn:
      for (const auto &candidate : p.value_list) {
        if (stored == candidate) return true;
      }
      return false;
    case PredicateOp::kExists:
      return p.exists_value;
    case PredicateOp::kGt:
    case PredicateOp::kGe:
    case PredicateOp::kLt:
    case PredicateOp::kLe:
      if (!stored.is_number()) {
        if (diagnostics) {
          diagnostics->push_back("type mismatch: numeric op '" + std::string(to_string(p.op)) +
                                 "' on non-numeric field '" + p.field + "' of " + subject);
        }
        return false;
      }
      return compare_numeric(p.op, stored.number(), p.value.number());
  }
  return false;
}

}  // namespace

bool eval_predicate_on_properties(const PropertyMap &properties, const Predicate &p,
                                  const std::string &subject,
                                  std::vector<std::string> *diagnostics) {
  auto it = properties.find(p.field);
  if (it == properties.end()) {
    return p.op == PredicateOp::kExists && !p.exists_value;
  }
  return eval_against_value(it->second, p, subject, diagnostics);
}

bool eval_predicate(const NodeRecord &node, const Predicate &p,
                    std::vector<std::string> *diagnostics) {
  if (p.field == kLabelField) {
    if (p.op == PredicateOp::kExists) return p.exists_value == !node.label.empty();
    return eval_against_value(PropertyValue(node.label), p, "node '" + node.name + "'",
                              diagnostics);
  }
  return eval_predicate_on_properties(node.properties, p, "node '" + node.name + "'", diagnostics);
}

MatchSpec MatchSpec::from_json(const json &args) {
  MatchSpec spec;
  if (args.contains("label")) {
    if (!args["label"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "label filter must be a string");
    }
    spec.label = args["label"].get<std::string>();
  }
  if (args.contains("properties")) {
    if (!args["properties"].is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "properties filter must be an object");
    }
    for (const auto &[field, doc] : args["properties"].items()) {
      spec.predicates.push_back(Predicate::from_json(field, doc));
    }
  }
  return spec;
}

bool MatchSpec::matches(const NodeRecord &node, std::vector<std::string> *diagnostics) const {
  if (label && node.label != *label) return false;
  for (const auto &p : predicates) {
    if (!eval_predicate(node, p, diagnostics)) return false;
  }
  return true;
}

}  // namespace graphsim

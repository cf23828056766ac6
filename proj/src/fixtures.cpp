#include "graphsim/fixtures.hpp"

#include <cstdio>

namespace graphsim::fixtures {

namespace {

NodeRecord approval_node(const std::string &name, const std::string &label,
                         const std::string &ijudgemethod) {
  NodeRecord node;
  node.name = name;
  node.label = label;
  node.properties.emplace("ijudgemethod", PropertyValue(ijudgemethod));
  return node;
}

EdgeRecord routes(const std::string &source, const std::string &target) {
  EdgeRecord edge;
  edge.key = EdgeKey{source, target, "ROUTES_TO"};
  return edge;
}

EdgeRecord conflict(const std::string &source, const std::string &target) {
  EdgeRecord edge;
  edge.key = EdgeKey{source, target, "CONFLICT"};
  return edge;
}

std::string role_name(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "Role_A%02d", i);
  return buf;
}

const std::vector<std::pair<std::string, std::string>> kNewConflicts = {
    {"ClosingRuleSubtable", "AuditRule"},
    {"RegionalAuditDesk", "VP_Ops"},
    {"BusinessUnitAgent", "AuditRule"},
    {"BusinessUnitAgent", "ClosingRuleSubtable"},
    {"ComplianceCell", "RegionalAuditDesk"},
    {"TreasuryLiaison", "VP_Ops"},
    {"ProcurementBoard", "ComplianceCell"},
    {"DataGovernanceDesk", "Role_A16"},
    {"InternalControlsHub", "Role_A17"},
    {"BusinessUnitAgent", "RegionalAuditDesk"},
    {"TreasuryLiaison", "ProcurementBoard"},
};

const std::vector<std::string> kNewUnits = {
    "BusinessUnitAgent", "ClosingRuleSubtable", "RegionalAuditDesk",  "ComplianceCell",
    "TreasuryLiaison",   "ProcurementBoard",    "DataGovernanceDesk", "InternalControlsHub",
};

}  // namespace

PropertyGraph approval_routing_snapshot() {
  PropertyGraph g;
  g.add_node(approval_node("Dept_Finance", "Department", "1"));
  g.add_node(approval_node("VP_Ops", "Officer", "1"));
  g.add_node(approval_node("CFO_Node", "Officer", "1"));
  // Node_B, Node_C, Node_F fall outside the active approval scope.
  for (const auto &[name, value] :
       std::vector<std::pair<std::string, std::string>>{{"Node_A", "1"},
                                                        {"Node_B", "0"},
                                                        {"Node_C", "2"},
                                                        {"Node_D", "1"},
                                                        {"Node_E", "1"},
                                                        {"Node_F", "0"},
                                                        {"Node_G", "1"},
                                                        {"Node_H", "1"},
                                                        {"Node_I", "1"},
                                                        {"Node_J", "1"},
                                                        {"Node_K", "1"},
                                                        {"Node_L", "1"},
                                                        {"Node_M", "1"},
                                                        {"Node_N", "1"}}) {
    g.add_node(approval_node(name, "ApprovalNode", value));
  }

  // 19 edges among the compliant nodes.
  g.add_edge(routes("Dept_Finance", "VP_Ops"));
  g.add_edge(routes("VP_Ops", "CFO_Node"));
  g.add_edge(routes("Dept_Finance", "Node_A"));
  g.add_edge(routes("Node_A", "Node_D"));
  g.add_edge(routes("Node_D", "Node_E"));
  g.add_edge(routes("Node_E", "Node_G"));
  g.add_edge(routes("Node_G", "Node_H"));
  g.add_edge(routes("Node_H", "Node_I"));
  g.add_edge(routes("Node_I", "Node_J"));
  g.add_edge(routes("Node_J", "Node_K"));
  g.add_edge(routes("Node_K", "Node_L"));
  g.add_edge(routes("Node_L", "Node_M"));
  g.add_edge(routes("Node_M", "Node_N"));
  g.add_edge(routes("Node_N", "CFO_Node"));
  g.add_edge(routes("Node_D", "VP_Ops"));
  g.add_edge(routes("Node_H", "VP_Ops"));
  g.add_edge(routes("CFO_Node", "Node_M"));
  g.add_edge(routes("Node_E", "Node_I"));
  g.add_edge(routes("Node_J", "Node_N"));
  // 7 edges incident to the excluded nodes.
  g.add_edge(routes("Dept_Finance", "Node_B"));
  g.add_edge(routes("Node_B", "CFO_Node"));
  g.add_edge(routes("Node_A", "Node_C"));
  g.add_edge(routes("Node_C", "Node_D"));
  g.add_edge(routes("Node_E", "Node_F"));
  g.add_edge(routes("Node_F", "Node_G"));
  g.add_edge(routes("Node_B", "Node_C"));
  return g;
}

engine::BusinessEvent approval_routing_event() {
  engine::BusinessEvent event;
  event.event_id = "007";
  event.payload = json{{"source_node", "Dept_Finance"},
                       {"approval_type", "expense"},
                       {"amount", 42000},
                       {"currency", "CNY"},
                       {"timestamp", "2025-06-01T09:14:22Z"}};
  event.trigger_field = "approval_type";
  return event;
}

engine::ScenarioProgram approval_routing_program() {
  engine::ScenarioProgram program;
  program.rule_id = "R_access_scope";
  program.cls = engine::ScenarioClass::kConstraint;
  program.trigger = engine::TriggerSpec{"approval_type", "expense"};
  program.steps.push_back(engine::ProgramStep{
      "match_nodes",
      json{{"properties", json{{"ijudgemethod", json{{"op", "ne"}, {"value", "1"}}}}}}});
  program.steps.push_back(engine::ProgramStep{
      "delete_nodes", json{{"node_names", json::array({"Node_B", "Node_C", "Node_F"})}}});
  program.decision_step = engine::ProgramStep{
      "shortest_path", json{{"source", "Dept_Finance"}, {"target", "CFO_Node"}}};
  return program;
}

PropertyGraph audit_conflict_base() {
  PropertyGraph g;
  auto role = [](const std::string &name) {
    NodeRecord node;
    node.name = name;
    node.label = "AuditorRole";
    return node;
  };
  g.add_node(role("AuditRule"));
  g.add_node(role("VP_Ops"));
  for (int i = 1; i <= 35; ++i) g.add_node(role(role_name(i)));

  // AuditRule starts at degree 12; the restructure raises it to 14.
  for (int i = 1; i <= 6; ++i) g.add_edge(conflict("AuditRule", role_name(i)));
  for (int i = 7; i <= 12; ++i) g.add_edge(conflict(role_name(i), "AuditRule"));
  g.add_edge(conflict("VP_Ops", role_name(13)));
  g.add_edge(conflict(role_name(14), "VP_Ops"));
  g.add_edge(conflict("VP_Ops", role_name(15)));
  g.add_edge(conflict(role_name(1), role_name(14)));
  for (int i = 15; i <= 34; ++i) g.add_edge(conflict(role_name(i), role_name(i + 1)));
  g.add_edge(conflict(role_name(16), role_name(20)));
  g.add_edge(conflict(role_name(18), role_name(25)));
  g.add_edge(conflict(role_name(22), role_name(30)));
  g.add_edge(conflict(role_name(26), role_name(33)));
  g.add_edge(conflict(role_name(28), role_name(35)));
  g.add_edge(conflict(role_name(17), role_name(29)));
  g.add_edge(conflict(role_name(21), role_name(31)));
  return g;
}

engine::BusinessEvent audit_restructure_event() {
  json conflicts = json::array();
  for (const auto &[u, v] : kNewConflicts) conflicts.push_back(json{{"u", u}, {"v", v}});
  engine::BusinessEvent event;
  event.event_id = "031";
  event.payload = json{{"event_type", "org_restructure"},
                       {"new_units", kNewUnits},
                       {"new_conflicts", conflicts},
                       {"timestamp", "2025-06-01T10:03:45Z"}};
  event.trigger_field = "event_type";
  return event;
}

engine::ScenarioProgram audit_restructure_program() {
  json nodes = json::array();
  for (const auto &unit : kNewUnits) {
    nodes.push_back(json{{"name", unit}, {"label", "AuditorRole"}});
  }
  json edges = json::array();
  for (const auto &[u, v] : kNewConflicts) {
    edges.push_back(json{{"source", u}, {"target", v}, {"rel_type", "CONFLICT"}});
  }

  engine::ScenarioProgram program;
  program.rule_id = "R_expand";
  program.cls = engine::ScenarioClass::kAugmentation;
  program.trigger = engine::TriggerSpec{"event_type", "org_restructure"};
  program.steps.push_back(engine::ProgramStep{"create_nodes", json{{"nodes", nodes}}});
  program.steps.push_back(engine::ProgramStep{"create_edges", json{{"edges", edges}}});
  program.steps.push_back(engine::ProgramStep{"get_graph_info", json::object()});
  program.decision_step = engine::ProgramStep{"greedy_coloring", json::object()};
  return program;
}

}  // namespace graphsim::fixtures

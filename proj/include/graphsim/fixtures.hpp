#pragma once

#include "graphsim/scenario.hpp"

namespace graphsim::fixtures {

// Expense-approval routing demo: 17 nodes / 26 edges, three nodes carrying
// ijudgemethod != "1" whose removal drops 7 incident edges, leaving a 2-hop
// route Dept_Finance -> VP_Ops -> CFO_Node.
PropertyGraph approval_routing_snapshot();
engine::BusinessEvent approval_routing_event();
engine::ScenarioProgram approval_routing_program();

// Audit-slot assignment demo: 37-node / 43-edge conflict graph; the
// restructure program adds 8 roles and 11 conflict edges, raising the maximum
// degree to 14 (coloring budget 15).
PropertyGraph audit_conflict_base();
engine::BusinessEvent audit_restructure_event();
engine::ScenarioProgram audit_restructure_program();

}  // namespace graphsim::fixtures

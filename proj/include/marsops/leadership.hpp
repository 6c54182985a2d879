#pragma once

#include <string>

#include "marsops/roster.hpp"

namespace marsops {

enum class LeadershipMode { Single, Functional };
enum class ScenarioPhase { DailyOps, Emergency, Science, Other };

std::string to_string(LeadershipMode m);
LeadershipMode leadership_mode_from_string(const std::string& s);
std::string to_string(ScenarioPhase p);

struct ScenarioScript;  // scenarios.hpp

// Run leader. Single mode: the commander, always. Functional mode: head of
// the scenario's leader-order list resolved to the lowest-numbered member of
// that group; an asset group resolves to the asset's primary owner. Scenarios
// without a leader order fall back to the phase map (DailyOps -> OPS_01,
// Emergency -> CMD_01, Science -> GEO_01, otherwise CMD_01).
AgentId select_leader(const ScenarioScript& scenario, LeadershipMode mode, const Roster& roster);

}  // namespace marsops

#include "marsops/leadership.hpp"

#include <stdexcept>

#include "marsops/scenarios.hpp"

namespace marsops {

std::string to_string(LeadershipMode m) {
    return m == LeadershipMode::Single ? "single" : "functional";
}

LeadershipMode leadership_mode_from_string(const std::string& s) {
    if (s == "single") return LeadershipMode::Single;
    if (s == "functional") return LeadershipMode::Functional;
    throw std::invalid_argument("bad leadership mode: " + s);
}

std::string to_string(ScenarioPhase p) {
    switch (p) {
        case ScenarioPhase::DailyOps: return "DailyOps";
        case ScenarioPhase::Emergency: return "Emergency";
        case ScenarioPhase::Science: return "Science";
        case ScenarioPhase::Other: return "Other";
    }
    return "?";
}

namespace {

// A leader must be a decision-capable human. Asset groups (e.g. ATC) resolve
// to the primary owner of the group's lowest-numbered asset.
AgentId resolve_group_head(const std::string& group, const Roster& roster) {
    AgentId head = roster.group_leader(group);
    if (roster.agent(head).kind == AgentKind::Asset)
        return roster.ownership_of(head).primary;
    return head;
}

}  // namespace

AgentId select_leader(const ScenarioScript& scenario, LeadershipMode mode, const Roster& roster) {
    if (mode == LeadershipMode::Single) return "CMD_01";
    if (!scenario.leader_order.empty())
        return resolve_group_head(scenario.leader_order.front(), roster);
    switch (scenario.phase) {
        case ScenarioPhase::DailyOps: return "OPS_01";
        case ScenarioPhase::Emergency: return "CMD_01";
        case ScenarioPhase::Science: return "GEO_01";
        case ScenarioPhase::Other: return "CMD_01";
    }
    return "CMD_01";
}

}  // namespace marsops

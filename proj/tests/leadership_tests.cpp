#include "doctest.h"
#include "marsops/leadership.hpp"
#include "marsops/scenarios.hpp"

using namespace marsops;

namespace {
const Roster& roster() {
    static const Roster r = build_default_roster();
    return r;
}
}  // namespace

TEST_CASE("single mode always selects the commander") {
    for (const std::string& id : scenario_ids())
        CHECK(select_leader(load_scenario(id), LeadershipMode::Single, roster()) == "CMD_01");
}

TEST_CASE("functional mode resolves the head of the leader order") {
    CHECK(select_leader(load_scenario("ScienceExploration"), LeadershipMode::Functional, roster()) ==
          "GEO_01");
    CHECK(select_leader(load_scenario("HAB_LeakReconfig"), LeadershipMode::Functional, roster()) ==
          "LSS_01");
    CHECK(select_leader(load_scenario("EmergencyResponse"), LeadershipMode::Functional, roster()) ==
          "CMD_01");
    CHECK(select_leader(load_scenario("MedicalOutbreakDrill"), LeadershipMode::Functional,
                        roster()) == "MED_01");
    CHECK(select_leader(load_scenario("DailyOperations"), LeadershipMode::Functional, roster()) ==
          "OPS_01");
}

TEST_CASE("an asset group at the head resolves to its primary owner") {
    // ATC is an asset group; the landing-zone controller's owner leads.
    CHECK(select_leader(load_scenario("ATC_ResupplyWindow"), LeadershipMode::Functional,
                        roster()) == "OPS_01");
}

TEST_CASE("functional leader belongs to the first group of the leader order") {
    for (const std::string& id : scenario_ids()) {
        const ScenarioScript& s = load_scenario(id);
        REQUIRE_FALSE(s.leader_order.empty());
        AgentId leader = select_leader(s, LeadershipMode::Functional, roster());
        std::string head = s.leader_order.front();
        if (roster().agent(roster().group_leader(head)).kind == AgentKind::Asset) {
            CHECK(leader == roster().ownership_of(roster().group_leader(head)).primary);
        } else {
            CHECK(roster().agent(leader).group == head);
        }
    }
}

TEST_CASE("scenarios without a leader order fall back to the phase map") {
    ScenarioScript s;
    s.id = "custom";
    s.phase = ScenarioPhase::DailyOps;
    CHECK(select_leader(s, LeadershipMode::Functional, roster()) == "OPS_01");
    s.phase = ScenarioPhase::Emergency;
    CHECK(select_leader(s, LeadershipMode::Functional, roster()) == "CMD_01");
    s.phase = ScenarioPhase::Science;
    CHECK(select_leader(s, LeadershipMode::Functional, roster()) == "GEO_01");
    s.phase = ScenarioPhase::Other;
    CHECK(select_leader(s, LeadershipMode::Functional, roster()) == "CMD_01");
}

TEST_CASE("selection is a pure function of scenario and mode") {
    for (int i = 0; i < 5; ++i)
        CHECK(select_leader(load_scenario("CyberAnomaly"), LeadershipMode::Functional, roster()) ==
              "COM_01");
}

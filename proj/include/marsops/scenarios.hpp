#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "marsops/failures.hpp"
#include "marsops/leadership.hpp"
#include "marsops/roster.hpp"

namespace marsops {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DeliverableSpec {
    int index = 0;            // 1-based position in the scenario prompt
    std::string section_tag;  // required section in the final report
    std::vector<std::string> required_fields;
};

// Scripted agent actions, executed in tick order (roster order within a
// tick). "LEADER" as actor or target resolves to the run leader; Command
// steps are executed by whichever controller holds the asset this run.
enum class StepKind { Say, Command, Section, Consensus, Breach };

struct PlaybookStep {
    int tick = 0;
    StepKind kind = StepKind::Say;
    AgentId actor;
    AgentId target;
    std::string text;
    std::map<std::string, std::string> fields;  // Section payload
    bool misread_risk = false;  // cross-dialect message that can be misread
    std::string breach_rule;    // Breach: rule id to violate (fault injection)
};

struct ConsensusHook {
    std::vector<std::string> voter_groups;  // heads resolved via the roster
    std::vector<std::pair<std::string, std::string>> proposals;  // id, text
};

struct ScenarioScript {
    std::string id;
    ScenarioPhase phase = ScenarioPhase::Other;
    std::string seed_prompt;
    std::vector<std::string> leader_order;  // group preference, head leads
    std::vector<std::string> participants;  // functional groups involved
    std::vector<AgentId> assets;
    std::vector<DeliverableSpec> deliverables;
    std::vector<ConstraintRule> constraints;
    std::optional<ConsensusHook> consensus_hook;
    std::string misread_rule;  // constraint a misread directive breaches
    std::vector<PlaybookStep> playbook;
};

// Tagged sections of the final run report, in emission order.
struct FinalReport {
    std::vector<std::pair<std::string, std::map<std::string, std::string>>> sections;

    const std::map<std::string, std::string>* find(const std::string& tag) const {
        for (const auto& [t, fields] : sections)
            if (t == tag) return &fields;
        return nullptr;
    }
};

const std::vector<std::string>& scenario_ids();  // the 13 benchmark scripts

// Throws ScenarioError for an unknown id.
const ScenarioScript& load_scenario(const std::string& id);

// Custom scenario from a JSON file with the same schema as the catalog.
ScenarioScript load_scenario_file(const std::string& path);

// Flag j is true iff deliverable j's section exists with every required
// field non-empty.
std::vector<bool> check_deliverables(const FinalReport& report, const ScenarioScript& scenario);

}  // namespace marsops

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace marsops {

using AgentId = std::string;

enum class AgentKind { Human, Asset };

enum class Layer {
    StrategyGovernance,
    MissionOperations,
    CivicsWellbeing,
    InfrastructureISRU,
    ScienceExploration,
    DataAIDigitalTwin,
    Assets,
};

enum class AlarmLevel { A, B, C };

struct AgentSpec {
    AgentId id;
    AgentKind kind = AgentKind::Human;
    Layer layer = Layer::StrategyGovernance;
    std::string group;  // functional group tag, e.g. GEO, COM, HAB
    std::string title;
};

struct OwnershipRecord {
    AgentId asset;
    AgentId primary;                 // human controller
    std::vector<AgentId> backups;    // ordered failover chain
    AlarmLevel alarm = AlarmLevel::B;
    std::string function;
};

class RosterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The base organization: fixed set of agents plus the asset ownership table.
// Immutable after construction; safe to share across concurrent runs.
class Roster {
public:
    Roster(std::vector<AgentSpec> agents, std::vector<OwnershipRecord> ownership);

    const std::vector<AgentSpec>& agents() const { return agents_; }
    const std::vector<OwnershipRecord>& ownership_table() const { return ownership_; }

    bool contains(const AgentId& id) const { return by_id_.count(id) != 0; }
    const AgentSpec& agent(const AgentId& id) const;

    // Throws RosterError if the id is unknown or not an asset.
    const OwnershipRecord& ownership_of(const AgentId& asset) const;

    std::vector<AgentId> members_of_group(const std::string& group) const;
    // Lowest-numbered member of a group (ids sort lexicographically).
    AgentId group_leader(const std::string& group) const;

    std::size_t human_count() const { return humans_; }
    std::size_t asset_count() const { return assets_; }

private:
    std::vector<AgentSpec> agents_;
    std::vector<OwnershipRecord> ownership_;
    std::map<AgentId, std::size_t> by_id_;
    std::map<AgentId, std::size_t> ownership_by_asset_;
    std::size_t humans_ = 0;
    std::size_t assets_ = 0;
};

// The built-in organization transcribed from the default base layout:
// 93 agents (71 human, 22 asset controllers) across 7 layers.
Roster build_default_roster();

// Loads a replacement roster from a JSON file with the same schema
// (experiment override; the compiled-in roster is the default).
Roster load_roster_override(const std::string& path);

std::string to_string(Layer layer);
std::string to_string(AgentKind kind);
std::string to_string(AlarmLevel a);
AlarmLevel alarm_from_string(const std::string& s);
Layer layer_from_string(const std::string& s);

}  // namespace marsops

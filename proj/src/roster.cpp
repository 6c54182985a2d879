#include "marsops/roster.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace marsops {

Roster::Roster(std::vector<AgentSpec> agents, std::vector<OwnershipRecord> ownership)
    : agents_(std::move(agents)), ownership_(std::move(ownership)) {
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        const AgentSpec& a = agents_[i];
        if (a.id.empty()) throw RosterError("agent with empty id");
        if (!by_id_.emplace(a.id, i).second) throw RosterError("duplicate agent id: " + a.id);
        if ((a.kind == AgentKind::Asset) != (a.layer == Layer::Assets))
            throw RosterError("kind/layer mismatch for " + a.id);
        if (a.kind == AgentKind::Human) ++humans_; else ++assets_;
    }
    std::set<AgentId> seen_assets;
    for (std::size_t i = 0; i < ownership_.size(); ++i) {
        const OwnershipRecord& rec = ownership_[i];
        if (!seen_assets.insert(rec.asset).second)
            throw RosterError("duplicate ownership record for " + rec.asset);
        if (agent(rec.asset).kind != AgentKind::Asset)
            throw RosterError("ownership record for non-asset " + rec.asset);
        if (agent(rec.primary).kind != AgentKind::Human)
            throw RosterError("primary controller is not human: " + rec.primary);
        for (const AgentId& b : rec.backups) {
            if (b == rec.primary) throw RosterError("backup equals primary for " + rec.asset);
            if (agent(b).kind != AgentKind::Human)
                throw RosterError("backup controller is not human: " + b);
        }
        ownership_by_asset_.emplace(rec.asset, i);
    }
    for (const AgentSpec& a : agents_) {
        if (a.kind == AgentKind::Asset && !ownership_by_asset_.count(a.id))
            throw RosterError("asset without ownership record: " + a.id);
    }
}

const AgentSpec& Roster::agent(const AgentId& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw RosterError("unknown agent id: " + id);
    return agents_[it->second];
}

const OwnershipRecord& Roster::ownership_of(const AgentId& asset) const {
    auto it = ownership_by_asset_.find(asset);
    if (it == ownership_by_asset_.end())
        throw RosterError("unknown asset (no ownership record): " + asset);
    return ownership_[it->second];
}

std::vector<AgentId> Roster::members_of_group(const std::string& group) const {
    std::vector<AgentId> out;
    for (const AgentSpec& a : agents_)
        if (a.group == group) out.push_back(a.id);
    std::sort(out.begin(), out.end());
    return out;
}

AgentId Roster::group_leader(const std::string& group) const {
    auto members = members_of_group(group);
    if (members.empty()) throw RosterError("unknown group: " + group);
    return members.front();
}

std::string to_string(Layer layer) {
    switch (layer) {
        case Layer::StrategyGovernance: return "StrategyGovernance";
        case Layer::MissionOperations: return "MissionOperations";
        case Layer::CivicsWellbeing: return "CivicsWellbeing";
        case Layer::InfrastructureISRU: return "InfrastructureISRU";
        case Layer::ScienceExploration: return "ScienceExploration";
        case Layer::DataAIDigitalTwin: return "DataAIDigitalTwin";
        case Layer::Assets: return "Assets";
    }
    return "?";
}

std::string to_string(AgentKind kind) {
    return kind == AgentKind::Human ? "Human" : "Asset";
}

std::string to_string(AlarmLevel a) {
    switch (a) {
        case AlarmLevel::A: return "A";
        case AlarmLevel::B: return "B";
        case AlarmLevel::C: return "C";
    }
    return "?";
}

AlarmLevel alarm_from_string(const std::string& s) {
    if (s == "A") return AlarmLevel::A;
    if (s == "B") return AlarmLevel::B;
    if (s == "C") return AlarmLevel::C;
    throw RosterError("bad alarm level: " + s);
}

Layer layer_from_string(const std::string& s) {
    for (Layer l : {Layer::StrategyGovernance, Layer::MissionOperations, Layer::CivicsWellbeing,
                    Layer::InfrastructureISRU, Layer::ScienceExploration, Layer::DataAIDigitalTwin,
                    Layer::Assets})
        if (to_string(l) == s) return l;
    throw RosterError("bad layer: " + s);
}

Roster load_roster_override(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RosterError("cannot open roster file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    std::vector<AgentSpec> agents;
    for (const auto& j : doc.at("agents")) {
        AgentSpec a;
        a.id = j.at("id").get<std::string>();
        a.kind = j.at("kind").get<std::string>() == "Asset" ? AgentKind::Asset : AgentKind::Human;
        a.layer = layer_from_string(j.at("layer").get<std::string>());
        a.group = j.at("group").get<std::string>();
        a.title = j.value("title", "");
        agents.push_back(std::move(a));
    }
    std::vector<OwnershipRecord> ownership;
    for (const auto& j : doc.at("ownership")) {
        OwnershipRecord rec;
        rec.asset = j.at("asset").get<std::string>();
        rec.primary = j.at("primary").get<std::string>();
        rec.backups = j.at("backups").get<std::vector<std::string>>();
        rec.alarm = alarm_from_string(j.at("alarm").get<std::string>());
        rec.function = j.value("function", "");
        ownership.push_back(std::move(rec));
    }
    return Roster(std::move(agents), std::move(ownership));
}

}  // namespace marsops

#include "marsops/routing.hpp"

#include <fstream>
#include <sstream>

namespace marsops {

std::string to_string(RoutingPolicy p) {
    return p == RoutingPolicy::Strict ? "strict" : "crosslayer";
}

RoutingPolicy routing_policy_from_string(const std::string& s) {
    if (s == "strict" || s == "STRICT") return RoutingPolicy::Strict;
    if (s == "crosslayer" || s == "CROSSLAYER") return RoutingPolicy::CrossLayer;
    throw RoutingError("bad routing policy: " + s);
}

Whitelist::Whitelist(std::set<std::pair<std::string, std::string>> pairs)
    : pairs_(std::move(pairs)) {
    for (const auto& [src, dst] : pairs_)
        if (src == dst) throw RoutingError("whitelist pair with identical groups: " + src);
}

bool Whitelist::allows(const std::string& src_group, const std::string& dst_group) const {
    return pairs_.count({src_group, dst_group}) != 0;
}

void Whitelist::add(const std::string& src_group, const std::string& dst_group) {
    if (src_group == dst_group)
        throw RoutingError("whitelist pair with identical groups: " + src_group);
    pairs_.insert({src_group, dst_group});
}

Whitelist default_whitelist() {
    Whitelist wl;
    wl.add("GEO", "AI");
    wl.add("GEO", "COM");
    wl.add("GEO", "LAB");
    wl.add("BIO", "AI");
    wl.add("LAB", "AI");
    wl.add("COM", "AI");
    wl.add("LSS", "AI");
    wl.add("PWR", "AI");
    wl.add("ISRU", "AI");
    wl.add("AGRI", "AI");
    wl.add("MNT", "AI");
    return wl;
}

Whitelist load_whitelist_override(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RoutingError("cannot open whitelist file: " + path);
    Whitelist wl;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            std::istringstream probe(line);
            std::string token;
            if (probe >> token) throw RoutingError("bad whitelist line: " + line);
            continue;  // blank
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string src = trim(line.substr(0, arrow));
        std::string dst = trim(line.substr(arrow + 2));
        if (src.empty() || dst.empty()) throw RoutingError("bad whitelist line: " + line);
        wl.add(src, dst);
    }
    return wl;
}

HierarchyGraph build_hierarchy(const Roster& roster) {
    HierarchyGraph g;
    g.add_edge_pair("CMD_01", "OPS_01");
    g.add_edge_pair("CMD_01", "SEO_01");
    g.add_edge_pair("CMD_01", "EARTH_01");

    // Functional groups: every human group outside the governance singletons.
    std::set<std::string> governance = {"CMD", "OPS", "SEO", "EARTH"};
    std::set<std::string> groups;
    for (const AgentSpec& a : roster.agents())
        if (a.kind == AgentKind::Human && !governance.count(a.group)) groups.insert(a.group);

    for (const std::string& group : groups) {
        AgentId leader = roster.group_leader(group);
        g.add_edge_pair("OPS_01", leader);
        for (const AgentId& member : roster.members_of_group(group))
            if (member != leader) g.add_edge_pair(leader, member);
    }

    for (const OwnershipRecord& rec : roster.ownership_table()) {
        g.add_edge_pair(rec.primary, rec.asset);
        for (const AgentId& b : rec.backups) g.add_edge_pair(b, rec.asset);
    }
    return g;
}

Path route(const HierarchyGraph& graph, const Whitelist& wl, RoutingPolicy policy,
           const Roster& roster, const AgentId& sender, const AgentId& recipient,
           const RouteOptions& opts) {
    if (sender == recipient)
        throw RoutingError("identity route: " + sender);
    const AgentSpec& s = roster.agent(sender);
    const AgentSpec& r = roster.agent(recipient);

    Path p;
    if (graph.has_edge(sender, recipient)) {
        p.kind = PathKind::Direct;
        p.hops = {{sender, recipient}};
        return p;
    }
    if (policy == RoutingPolicy::CrossLayer && s.group != r.group && wl.allows(s.group, r.group)) {
        p.kind = PathKind::Direct;
        p.hops = {{sender, recipient}};
        p.is_cross_layer = true;
        return p;
    }

    AgentId hub = opts.preferred_hub;
    if (hub == sender || hub == recipient)
        hub = (hub == "OPS_01") ? "CMD_01" : "OPS_01";
    p.kind = PathKind::HubForwarded;
    p.hub = hub;
    p.hops = {{sender, hub}, {hub, recipient}};
    return p;
}

void deliver(TrafficCounters& counters, const MessageEnvelope& env) {
    counters.n_msg += env.path.hop_count();
    counters.n_envelopes += 1;
    if (env.is_cross_layer) counters.n_cross += 1;
}

double cross_layer_ratio(const TrafficCounters& counters) {
    if (counters.n_msg == 0) return 0.0;
    return static_cast<double>(counters.n_cross) / static_cast<double>(counters.n_msg);
}

}  // namespace marsops

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "marsops/roster.hpp"

namespace marsops {

enum class RoutingPolicy { Strict, CrossLayer };

std::string to_string(RoutingPolicy p);
RoutingPolicy routing_policy_from_string(const std::string& s);

// Group-level shortcut whitelist. Pairs are directional: (src, dst) allows
// src-group agents to message dst-group agents directly, not the reverse.
class Whitelist {
public:
    Whitelist() = default;
    explicit Whitelist(std::set<std::pair<std::string, std::string>> pairs);

    bool allows(const std::string& src_group, const std::string& dst_group) const;
    void add(const std::string& src_group, const std::string& dst_group);
    const std::set<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

private:
    std::set<std::pair<std::string, std::string>> pairs_;
};

// Built-in shortcut whitelist: GEO -> {AI, COM, LAB} and
// {BIO, LAB, COM, LSS, PWR, ISRU, AGRI, MNT} -> AI.
Whitelist default_whitelist();

// Parses a whitelist override file: one "SRC -> DST" pair per line,
// '#' comments and blank lines ignored.
Whitelist load_whitelist_override(const std::string& path);

// Directed command-chain edge set. Construction:
//   (i)   CMD_01 <-> {OPS_01, SEO_01, EARTH_01}
//   (ii)  OPS_01 <-> each functional-group leader (lowest-numbered member)
//   (iii) group leader <-> each other member of its group
//   (iv)  owner <-> asset and each backup <-> asset, per the ownership table
class HierarchyGraph {
public:
    bool has_edge(const AgentId& from, const AgentId& to) const {
        return edges_.count({from, to}) != 0;
    }
    void add_edge_pair(const AgentId& a, const AgentId& b) {
        edges_.insert({a, b});
        edges_.insert({b, a});
    }
    const std::set<std::pair<AgentId, AgentId>>& edges() const { return edges_; }

private:
    std::set<std::pair<AgentId, AgentId>> edges_;
};

HierarchyGraph build_hierarchy(const Roster& roster);

enum class PathKind { Direct, HubForwarded };

struct Path {
    PathKind kind = PathKind::Direct;
    std::vector<std::pair<AgentId, AgentId>> hops;  // 1 hop direct, 2 via hub
    std::optional<AgentId> hub;
    bool is_cross_layer = false;  // direct hop over a whitelist shortcut under CrossLayer

    std::size_t hop_count() const { return hops.size(); }
};

struct MessageEnvelope {
    std::uint64_t seq = 0;
    AgentId sender;
    AgentId recipient;
    Path path;
    std::string payload;
    bool is_cross_layer = false;
    int tick = 0;
};

struct TrafficCounters {
    std::uint64_t n_msg = 0;        // delivered hops
    std::uint64_t n_cross = 0;      // hops over whitelist shortcut edges
    std::uint64_t n_envelopes = 0;  // routed exchanges (each may cost 1 or 2 hops)
};

class RoutingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relay hub used when a direct hop is not legal under the active policy.
// OPS_01 by default; CMD_01 when OPS_01 is an endpoint or the run is in an
// emergency phase (and vice versa when CMD_01 is an endpoint).
struct RouteOptions {
    AgentId preferred_hub = "OPS_01";
};

// Path function: direct iff the edge is hierarchical, or whitelisted under
// CrossLayer; otherwise an audited two-hop relay via the hub.
// Throws RoutingError when sender == recipient.
Path route(const HierarchyGraph& graph, const Whitelist& wl, RoutingPolicy policy,
           const Roster& roster, const AgentId& sender, const AgentId& recipient,
           const RouteOptions& opts = {});

// Accounting: hub-forwarding costs 2 hops, a direct hop costs 1; exactly the
// cross-layer hops increment n_cross.
void deliver(TrafficCounters& counters, const MessageEnvelope& env);

// n_cross / n_msg, defined as 0 for an empty run.
double cross_layer_ratio(const TrafficCounters& counters);

}  // namespace marsops

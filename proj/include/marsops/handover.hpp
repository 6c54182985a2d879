#pragma once

#include <map>
#include <optional>

#include "marsops/rng.hpp"
#include "marsops/roster.hpp"

namespace marsops {

// Per-run availability of every human controller referenced by the
// ownership table. Sampled once per run; an offline person is offline for
// all assets they control.
struct AvailabilityMap {
    std::map<AgentId, bool> online;
    double outage_rate_p = 0.0;

    bool is_online(const AgentId& id) const {
        auto it = online.find(id);
        return it == online.end() ? true : it->second;
    }
};

struct ControlResolution {
    AgentId asset;
    std::optional<AgentId> controller;  // empty: primary and all backups offline
    bool was_switch = false;            // control handed to a backup
};

// Each referenced controller is independently offline with probability p.
// Sampling order follows the ownership table (primaries first, then backups,
// deduplicated), so the draw sequence is a pure function of (seed, roster).
AvailabilityMap sample_availability(const Roster& roster, double p, Substream& rng);

// Control function: primary if online; else first online backup in list
// order (a role switch) when switching is enabled; else nobody.
ControlResolution resolve_controller(const OwnershipRecord& rec, const AvailabilityMap& avail,
                                     bool switching_enabled);

// Closed form for mean role-switch count: n_assets * p_o * (1 - p_b).
double expected_switches(std::size_t n_assets, double p_o, double p_b);

// P(asset serviceable) = 1 - p_o * p_b, assuming independent outages.
double serviceability(double p_o, double p_b);

}  // namespace marsops

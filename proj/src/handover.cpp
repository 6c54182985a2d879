#include "marsops/handover.hpp"

#include <stdexcept>
#include <vector>

namespace marsops {

AvailabilityMap sample_availability(const Roster& roster, double p, Substream& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("outage rate outside [0,1]");
    AvailabilityMap out;
    out.outage_rate_p = p;

    std::vector<AgentId> order;
    for (const OwnershipRecord& rec : roster.ownership_table()) {
        order.push_back(rec.primary);
        for (const AgentId& b : rec.backups) order.push_back(b);
    }
    for (const AgentId& id : order) {
        if (out.online.count(id)) continue;  // one draw per person
        out.online[id] = !rng.bernoulli(p);
    }
    return out;
}

ControlResolution resolve_controller(const OwnershipRecord& rec, const AvailabilityMap& avail,
                                     bool switching_enabled) {
    ControlResolution res;
    res.asset = rec.asset;
    if (avail.is_online(rec.primary)) {
        res.controller = rec.primary;
        return res;
    }
    if (switching_enabled) {
        for (const AgentId& b : rec.backups) {
            if (avail.is_online(b)) {
                res.controller = b;
                res.was_switch = true;
                return res;
            }
        }
    }
    return res;  // uncontrollable
}

double expected_switches(std::size_t n_assets, double p_o, double p_b) {
    if (p_o < 0.0 || p_o > 1.0 || p_b < 0.0 || p_b > 1.0)
        throw std::invalid_argument("probability outside [0,1]");
    return static_cast<double>(n_assets) * p_o * (1.0 - p_b);
}

double serviceability(double p_o, double p_b) {
    if (p_o < 0.0 || p_o > 1.0 || p_b < 0.0 || p_b > 1.0)
        throw std::invalid_argument("probability outside [0,1]");
    return 1.0 - p_o * p_b;
}

}  // namespace marsops

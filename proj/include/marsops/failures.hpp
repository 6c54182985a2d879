#pragma once

#include <string>
#include <vector>

#include "marsops/handover.hpp"
#include "marsops/roster.hpp"

namespace marsops {

enum class ConstraintKind { Redline, InterlockBypass, SeoRejection };

std::string to_string(ConstraintKind k);

// Declarative rule evaluated over the action event stream; the matching
// action kind at runtime produces a violation event.
struct ConstraintRule {
    std::string rule_id;
    std::string scenario;
    ConstraintKind kind = ConstraintKind::Redline;
    std::string description;
};

struct ViolationEvent {
    int tick = 0;
    AgentId actor;
    std::string rule_id;
    std::string description;
};

// Per-run failure accounting. Type A: assets left without any controller
// (each asset at most once). Type B: logged constraint violations (distinct
// events count separately). Type C: missing deliverables.
struct FailureBreakdown {
    std::size_t n_asset = 0;
    std::size_t n_viol = 0;
    std::size_t n_miss = 0;
    std::size_t f_total = 0;
};

FailureBreakdown count_failures(const std::vector<ViolationEvent>& violations,
                                const std::vector<ControlResolution>& resolutions,
                                const std::vector<bool>& deliverable_flags);

}  // namespace marsops

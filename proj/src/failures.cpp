#include "marsops/failures.hpp"

namespace marsops {

std::string to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::Redline: return "redline";
        case ConstraintKind::InterlockBypass: return "interlock_bypass";
        case ConstraintKind::SeoRejection: return "seo_rejection";
    }
    return "?";
}

FailureBreakdown count_failures(const std::vector<ViolationEvent>& violations,
                                const std::vector<ControlResolution>& resolutions,
                                const std::vector<bool>& deliverable_flags) {
    FailureBreakdown out;
    for (const ControlResolution& r : resolutions)
        if (!r.controller) ++out.n_asset;
    out.n_viol = violations.size();
    for (bool flag : deliverable_flags)
        if (!flag) ++out.n_miss;
    out.f_total = out.n_asset + out.n_viol + out.n_miss;
    return out;
}

}  // namespace marsops

#include "marsops/metrics.hpp"

#include <stdexcept>

namespace marsops {

double squash(double x, double k) {
    if (k <= 0.0) throw std::invalid_argument("squash constant must be positive");
    if (x < 0.0) throw std::invalid_argument("squash input must be non-negative");
    return x / (x + k);
}

double compute_ampi(const RunMetrics& m, const AmpiConfig& cfg) {
    double score = cfg.w_time * (1.0 - squash(m.time_steps, cfg.k_time)) +
                   cfg.w_msgs * (1.0 - squash(m.msgs, cfg.k_msgs)) +
                   cfg.w_fail * (1.0 - squash(m.failures, cfg.k_fail)) +
                   cfg.w_switch * (1.0 - squash(m.switches, cfg.k_switch));
    if (cfg.include_crosslayer) score += cfg.w_cross * (1.0 - m.cross_ratio);
    return score;
}

}  // namespace marsops

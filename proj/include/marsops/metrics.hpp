#pragma once

#include <string>

#include "marsops/failures.hpp"

namespace marsops {

// Per-run outcome counters. time_steps is the surrogate effort measure (the
// count of agent decision steps); wall-clock is recorded for reference but
// never scored, since it depends on host latency.
struct RunMetrics {
    double time_steps = 0.0;
    double msgs = 0.0;        // delivered hops (hub-forwarding costs 2)
    double cross_ratio = 0.0; // in [0,1]
    double failures = 0.0;    // aggregate F (means may be fractional)
    double switches = 0.0;
    FailureBreakdown breakdown;
    double wall_seconds = 0.0;
};

// Composite-score configuration. The cross-layer penalty term is excluded
// unless include_crosslayer is set (the --ampi_include_crosslayer flag), in
// which case w_cross is honored.
struct AmpiConfig {
    double w_time = 0.40;
    double w_msgs = 0.20;
    double w_cross = 0.00;
    double w_fail = 0.25;
    double w_switch = 0.15;
    double k_time = 20.0;
    double k_msgs = 50.0;
    double k_fail = 3.0;
    double k_switch = 5.0;
    bool include_crosslayer = false;
};

// Monotone squashing x -> x/(x+K), mapping [0,inf) into [0,1).
// Throws std::invalid_argument on K <= 0 or x < 0.
double squash(double x, double k);

// AMPI = sum_i w_i * (1 - x~_i) over squashed time/messages/failures/switches,
// plus the raw cross-layer ratio term when enabled.
double compute_ampi(const RunMetrics& m, const AmpiConfig& cfg);

}  // namespace marsops

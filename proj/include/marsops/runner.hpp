#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "marsops/engine.hpp"

namespace marsops {

class RunnerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One-factor sweep: every level reuses the same derived seed list
// (seed_base + run index), so factor comparisons are seed-paired.
struct SweepSpec {
    RunConfig base;
    std::string factor;               // empty: run the base config only
    std::vector<std::string> levels;  // parsed per factor
    int repetitions = 20;
    std::uint64_t seed_base = 0;
    int jobs = 1;           // >1 executes runs in parallel (OpenMP)
    std::string out_dir;    // when set: summary.csv, runs/<id>.log, runs/<id>.report.txt
};

struct AggregateRow {
    std::string scenario;
    std::string routing;
    std::string leadership;
    std::string switching;
    std::string memory;
    std::string consensus;
    std::string protocols;
    double time = 0.0;
    double msgs = 0.0;
    double failures = 0.0;
    double n_asset = 0.0;
    double n_viol = 0.0;
    double n_miss = 0.0;
    double crosslayer = 0.0;
    double rolesw = 0.0;
    double ampi = 0.0;
};

// The six sweepable factors and their levels.
const std::vector<std::string>& factor_names();
std::vector<std::string> factor_levels(const std::string& factor);
RunConfig apply_factor_level(RunConfig cfg, const std::string& factor, const std::string& level);

// Executes levels x repetitions runs and aggregates per level. Output order
// is (level, run index) regardless of execution order; rerunning the same
// spec reproduces identical artifacts byte for byte.
std::vector<AggregateRow> run_batch(const SweepSpec& spec, const Roster& roster,
                                    const EngineHooks& hooks = {});

// Fixed 2-decimal CSV with one row per aggregate. Throws on empty input.
void export_csv(const std::vector<AggregateRow>& rows, std::ostream& out);
void export_csv_file(const std::vector<AggregateRow>& rows, const std::string& path);
std::string csv_string(const std::vector<AggregateRow>& rows);

std::vector<AggregateRow> parse_csv(std::istream& in);

// Key/value config file sharing the CLI flag vocabulary.
RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace marsops

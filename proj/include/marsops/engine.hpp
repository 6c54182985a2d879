#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "marsops/consensus.hpp"
#include "marsops/leadership.hpp"
#include "marsops/memory.hpp"
#include "marsops/metrics.hpp"
#include "marsops/protocols.hpp"
#include "marsops/roster.hpp"
#include "marsops/routing.hpp"
#include "marsops/scenarios.hpp"
#include "marsops/textgen.hpp"

namespace marsops {

class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One run's factor levels. Defaults follow the benchmark's default setting:
// strict routing, functional leadership, switching on, shared memory,
// consensus off, protocols off.
struct RunConfig {
    std::string scenario;
    RoutingPolicy routing = RoutingPolicy::Strict;
    LeadershipMode leadership = LeadershipMode::Functional;
    bool role_switching = true;
    MemoryMode memory = MemoryMode::Shared;
    ConsensusConfig consensus;
    ProtocolMode protocols = ProtocolMode::Off;
    double outage_rate = 0.0;
    std::uint64_t seed = 0;
    AmpiConfig ampi;
    std::size_t memory_window = 8;    // short-term turns kept per agent
    std::size_t memory_budget = 512;  // summary character budget
    // Staged faults (scripted breaches, misreadable directives); off for the
    // benchmark suite.
    bool fault_injection = false;
    // Disallow whitelist shortcuts while the scenario phase is Emergency.
    bool gate_shortcuts_in_emergency = false;
    // Debug: dump the final memory state to this JSON file.
    std::string memory_snapshot_path;
};

// Ordered structured records; one JSON object per line when serialized.
struct EventLog {
    std::vector<nlohmann::json> records;

    void push(nlohmann::json j) { records.push_back(std::move(j)); }
    std::string to_jsonl() const;
    std::uint64_t digest() const;
};

struct RunResult {
    RunConfig config;
    AgentId leader;
    RunMetrics metrics;
    FailureBreakdown breakdown;
    std::vector<bool> deliverable_flags;
    FinalReport report;
    EventLog log;
};

// Optional seams. The scripted playbook behaviour is the reference
// implementation; a text generator, when present, rewrites message payloads
// (never used by the benchmark suite).
struct EngineHooks {
    TextGenerator* text_generator = nullptr;
    const LexiconSet* lexicons = nullptr;   // defaults to the built-in set
    const Whitelist* whitelist = nullptr;   // defaults to the built-in set
    // Prebuilt command-chain graph for the roster; the batch runner shares
    // one across its runs instead of rebuilding per run.
    const HierarchyGraph* hierarchy = nullptr;
    // Script to run instead of the catalog entry named by the config
    // (custom scenarios loaded from file).
    const ScenarioScript* scenario_override = nullptr;
};

// Executes one scenario run: leader selection, availability sampling, the
// scripted tick loop with routing/memory/consensus/translation, deliverable
// checking, failure accounting, and metric assembly. Pure given (cfg,
// roster): identical inputs produce a byte-identical event log.
RunResult run_scenario(const RunConfig& cfg, const Roster& roster, const EngineHooks& hooks = {});

// Recomputes every counter from the event log alone and checks it against
// the reported metrics; throws EngineError on any inconsistency.
RunMetrics recount(const RunResult& result);

std::string render_report(const FinalReport& report);

nlohmann::json config_to_json(const RunConfig& cfg);

}  // namespace marsops

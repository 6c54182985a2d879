// Command-line front end: single runs, one-factor sweeps, the full default
// benchmark suite, and catalog listing.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "marsops/runner.hpp"

namespace {

using namespace marsops;

struct CliOptions {
    std::string scenario;
    std::string routing = "strict";
    std::string leadership = "functional";
    std::string role_switching = "on";
    std::string memory = "shared";
    std::string consensus = "off";
    int consensus_rounds = 2;
    double consensus_quorum = 0.6;
    std::string protocols = "off";
    double outage_rate = 0.0;
    std::size_t memory_window = 8;
    std::size_t memory_budget = 512;
    std::string memory_snapshot;
    std::uint64_t seed = 0;
    int runs = 20;
    int jobs = 1;
    bool ampi_include_crosslayer = false;
    bool fault_injection = false;
    std::string out_dir;
    std::string config_file;
    std::string whitelist_file;
    std::string lexicon_file;
    std::string roster_file;
    std::string scenario_file;
};

void add_factor_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--scenario", opt.scenario, "Scenario id (see `marsops list`)");
    cmd->add_option("--routing", opt.routing, "strict|crosslayer")
        ->check(CLI::IsMember({"strict", "crosslayer"}));
    cmd->add_option("--leadership", opt.leadership, "single|functional")
        ->check(CLI::IsMember({"single", "functional"}));
    cmd->add_option("--role_switching", opt.role_switching, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--memory", opt.memory, "off|basic|shared")
        ->check(CLI::IsMember({"off", "basic", "shared"}));
    cmd->add_option("--consensus", opt.consensus, "off|on")
        ->check(CLI::IsMember({"off", "on"}));
    cmd->add_option("--consensus_rounds", opt.consensus_rounds, "Vote rounds (default 2)");
    cmd->add_option("--consensus_quorum", opt.consensus_quorum, "Quorum threshold (default 0.6)");
    cmd->add_option("--protocols", opt.protocols, "off|hetero")
        ->check(CLI::IsMember({"off", "hetero"}));
    cmd->add_option("--outage_rate", opt.outage_rate, "Controller outage probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--memory_window", opt.memory_window, "Short-term turns kept per agent");
    cmd->add_option("--memory_budget", opt.memory_budget, "Summary character budget");
    cmd->add_option("--memory_snapshot", opt.memory_snapshot,
                    "Dump the final memory state to this JSON file (debug)");
    cmd->add_option("--seed", opt.seed, "Base seed (run i uses seed+i)");
    cmd->add_option("--runs", opt.runs, "Repetitions per configuration (default 20)");
    cmd->add_option("--jobs", opt.jobs, "Parallel run execution (default 1 = serial)");
    cmd->add_flag("--ampi_include_crosslayer", opt.ampi_include_crosslayer,
                  "Honor the cross-layer weight in the composite score");
    cmd->add_flag("--fault_injection", opt.fault_injection,
                  "Enable staged constraint breaches and misread directives");
    cmd->add_option("--out", opt.out_dir, "Output directory (summary.csv, runs/)");
    cmd->add_option("--config", opt.config_file, "JSON config file with the same keys");
    cmd->add_option("--whitelist", opt.whitelist_file, "Shortcut whitelist override file");
    cmd->add_option("--lexicons", opt.lexicon_file, "Lexicon override file (concept,group,term)");
    cmd->add_option("--roster", opt.roster_file, "Roster override file (JSON)");
    cmd->add_option("--scenario_file", opt.scenario_file,
                    "Custom scenario script (JSON, same schema as the catalog)");
}

RunConfig build_config(const CliOptions& opt) {
    RunConfig cfg;
    cfg.scenario = opt.scenario;
    cfg.routing = routing_policy_from_string(opt.routing);
    cfg.leadership = leadership_mode_from_string(opt.leadership);
    cfg.role_switching = opt.role_switching == "on";
    cfg.memory = memory_mode_from_string(opt.memory);
    cfg.consensus.enabled = opt.consensus == "on";
    cfg.consensus.rounds = opt.consensus_rounds;
    cfg.consensus.quorum = opt.consensus_quorum;
    cfg.protocols = protocol_mode_from_string(opt.protocols);
    cfg.outage_rate = opt.outage_rate;
    cfg.memory_window = opt.memory_window;
    cfg.memory_budget = opt.memory_budget;
    cfg.memory_snapshot_path = opt.memory_snapshot;
    cfg.seed = opt.seed;
    cfg.ampi.include_crosslayer = opt.ampi_include_crosslayer;
    cfg.fault_injection = opt.fault_injection;
    if (!opt.config_file.empty()) cfg = load_config_file(opt.config_file, cfg);
    return cfg;
}

int list_scenarios() {
    const Roster roster = build_default_roster();
    std::printf("%-24s %-10s %-22s %s\n", "id", "phase", "leader order", "deliverables/assets");
    for (const std::string& id : scenario_ids()) {
        const ScenarioScript& s = load_scenario(id);
        std::string order;
        for (const std::string& g : s.leader_order) order += (order.empty() ? "" : " > ") + g;
        std::printf("%-24s %-10s %-22s J=%zu, %zu assets\n", s.id.c_str(),
                    to_string(s.phase).c_str(), order.c_str(), s.deliverables.size(),
                    s.assets.size());
    }
    std::printf("\n%zu scenarios, roster: %zu agents (%zu human, %zu assets)\n",
                scenario_ids().size(), roster.agents().size(), roster.human_count(),
                roster.asset_count());
    return 0;
}

int run_spec(const SweepSpec& spec, const Roster& roster, const EngineHooks& hooks) {
    auto rows = run_batch(spec, roster, hooks);
    if (rows.empty()) {
        std::fprintf(stderr, "no level completed\n");
        return 1;
    }
    export_csv(rows, std::cout);
    if (!spec.out_dir.empty())
        std::fprintf(stderr, "artifacts written to %s\n", spec.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"marsops: deterministic settlement-operations coordination benchmark"};
    app.require_subcommand(1);

    CliOptions opt;
    auto* list_cmd = app.add_subcommand("list", "List the scenario catalog");
    auto* run_cmd = app.add_subcommand("run", "Run one configuration N times");
    add_factor_flags(run_cmd, opt);
    auto* sweep_cmd = app.add_subcommand("sweep", "Vary one factor over its levels");
    std::string factor;
    sweep_cmd->add_option("--factor", factor, "routing|leadership|role_switching|memory|consensus|protocols")
        ->required();
    add_factor_flags(sweep_cmd, opt);
    auto* suite_cmd = app.add_subcommand("suite", "Run all scenarios at the default setting");
    add_factor_flags(suite_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) return list_scenarios();

        const Roster roster =
            opt.roster_file.empty() ? build_default_roster() : load_roster_override(opt.roster_file);
        std::optional<Whitelist> wl;
        if (!opt.whitelist_file.empty()) wl = load_whitelist_override(opt.whitelist_file);
        std::optional<LexiconSet> lex;
        if (!opt.lexicon_file.empty()) lex = load_lexicon_override(opt.lexicon_file);
        std::optional<ScenarioScript> custom;
        if (!opt.scenario_file.empty()) custom = load_scenario_file(opt.scenario_file);
        EngineHooks hooks;
        if (wl) hooks.whitelist = &*wl;
        if (lex) hooks.lexicons = &*lex;
        if (custom) hooks.scenario_override = &*custom;

        SweepSpec spec;
        spec.base = build_config(opt);
        if (custom) spec.base.scenario = custom->id;
        spec.repetitions = opt.runs;
        spec.seed_base = opt.seed;
        spec.jobs = opt.jobs;
        spec.out_dir = opt.out_dir;

        if (run_cmd->parsed()) {
            if (spec.base.scenario.empty()) throw RunnerError("--scenario is required");
            return run_spec(spec, roster, hooks);
        }
        if (sweep_cmd->parsed()) {
            if (spec.base.scenario.empty()) throw RunnerError("--scenario is required");
            spec.factor = factor;
            spec.levels = factor_levels(factor);
            return run_spec(spec, roster, hooks);
        }
        if (suite_cmd->parsed()) {
            std::vector<AggregateRow> all;
            for (const std::string& id : scenario_ids()) {
                SweepSpec s = spec;
                s.base.scenario = id;
                auto rows = run_batch(s, roster, hooks);
                all.insert(all.end(), rows.begin(), rows.end());
            }
            export_csv(all, std::cout);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#include "marsops/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "marsops/handover.hpp"
#include "marsops/rng.hpp"

namespace marsops {

std::string EventLog::to_jsonl() const {
    std::string out;
    for (const auto& rec : records) {
        out += rec.dump();
        out += '\n';
    }
    return out;
}

std::uint64_t EventLog::digest() const { return fnv1a64(to_jsonl()); }

nlohmann::json config_to_json(const RunConfig& cfg) {
    return {
        {"scenario", cfg.scenario},
        {"routing", to_string(cfg.routing)},
        {"leadership", to_string(cfg.leadership)},
        {"role_switching", cfg.role_switching},
        {"memory", to_string(cfg.memory)},
        {"consensus", cfg.consensus.enabled},
        {"consensus_rounds", cfg.consensus.rounds},
        {"consensus_quorum", cfg.consensus.quorum},
        {"protocols", to_string(cfg.protocols)},
        {"outage_rate", cfg.outage_rate},
        {"seed", cfg.seed},
        {"fault_injection", cfg.fault_injection},
    };
}

std::string render_report(const FinalReport& report) {
    std::string out;
    for (const auto& [tag, fields] : report.sections) {
        out += "# " + tag + "\n";
        for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
        out += "\n";
    }
    return out;
}

namespace {

struct ResolvedStep {
    const PlaybookStep* step = nullptr;
    AgentId actor;       // resolved acting agent; empty when a command is dropped
    AgentId drop_asset;  // set when a command has no serviceable controller
    double jitter = -1.0;
};

std::string format_jitter(double u) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", u);
    return std::string(buf);
}

// Per-run execution state bundled for the helpers below.
struct RunState {
    const RunConfig& cfg;
    const Roster& roster;
    const ScenarioScript& scenario;
    const HierarchyGraph& graph;
    const Whitelist& wl;
    const LexiconSet& lexicons;
    TextGenerator* textgen;

    AgentId leader = {};
    RouteOptions route_opts = {};
    RoutingPolicy effective_policy = RoutingPolicy::Strict;

    EventLog log = {};
    TrafficCounters counters = {};
    std::uint64_t steps = 0;
    std::uint64_t seq = 0;
    std::vector<ViolationEvent> violations = {};
    std::vector<ControlResolution> resolutions = {};
    MemoryState memory = {};
    FinalReport report = {};
    std::map<AgentId, std::size_t> roster_index = {};
    std::uint64_t vote_key = 0;
};

void log_step(RunState& rs, int tick, const AgentId& agent, std::size_t ctx,
              const char* duty = nullptr) {
    ++rs.steps;
    nlohmann::json rec{{"ev", "step"}, {"tick", tick}, {"agent", agent}, {"ctx", ctx}};
    if (duty) rec["duty"] = duty;
    rs.log.push(std::move(rec));
}

void deliver_envelope(RunState& rs, int tick, const AgentId& sender, const AgentId& recipient,
                      const std::string& payload, bool ballot) {
    Path path = route(rs.graph, rs.wl, rs.effective_policy, rs.roster, sender, recipient,
                      rs.route_opts);
    MessageEnvelope env;
    env.seq = rs.seq++;
    env.sender = sender;
    env.recipient = recipient;
    env.path = path;
    env.payload = payload;
    env.is_cross_layer = path.is_cross_layer;
    env.tick = tick;
    deliver(rs.counters, env);

    rs.log.push({{"ev", "msg"},
                 {"seq", env.seq},
                 {"tick", tick},
                 {"sender", sender},
                 {"recipient", recipient},
                 {"kind", path.kind == PathKind::Direct ? "direct" : "hub"},
                 {"hub", path.hub ? nlohmann::json(*path.hub) : nlohmann::json()},
                 {"is_cross_layer", env.is_cross_layer},
                 {"ballot", ballot},
                 {"text", payload}});

    // Relaying through the hub is itself a decision step for the hub agent.
    if (path.kind == PathKind::HubForwarded) log_step(rs, tick, *path.hub, 0, "relay");

    if (!ballot) {
        TurnRecord turn{tick, sender, payload, rs.scenario.id};
        MemoryMode mode = rs.cfg.memory;
        if (mode == MemoryMode::Shared && rs.roster.agent(sender).kind == AgentKind::Asset)
            mode = MemoryMode::Basic;  // the shared pool holds human turns
        append_turn(rs.memory, mode, turn);
    }
}

// Content message with optional translator mediation. Under hetero
// protocols, a message between two dialect groups relays through COM_06,
// which rewrites it into the recipient's dialect (one extra message).
void send_content(RunState& rs, int tick, const AgentId& sender, const AgentId& recipient,
                  const std::string& payload, bool misread_risk) {
    const std::string& src_group = rs.roster.agent(sender).group;
    const std::string& dst_group = rs.roster.agent(recipient).group;
    const bool translatable = src_group != dst_group && rs.lexicons.has_group(src_group) &&
                              rs.lexicons.has_group(dst_group) && sender != "COM_06" &&
                              recipient != "COM_06";

    if (rs.cfg.protocols == ProtocolMode::Hetero && translatable) {
        deliver_envelope(rs, tick, sender, "COM_06", payload, false);
        auto [translated, rec] =
            translate(payload, rs.lexicons.lexicon(src_group), rs.lexicons.lexicon(dst_group),
                      rs.lexicons);
        log_step(rs, tick, "COM_06", 0, "translate");
        rs.log.push({{"ev", "translation"},
                     {"tick", tick},
                     {"src", rec.source_group},
                     {"dst", rec.target_group},
                     {"translator", rec.translator},
                     {"original", rec.original},
                     {"translated", rec.translated},
                     {"mapped", rec.mapped_terms.size()},
                     {"unmapped", rec.unmapped.size()}});
        deliver_envelope(rs, tick, "COM_06", recipient, translated, false);
        return;  // mediation neutralizes the misread risk
    }

    deliver_envelope(rs, tick, sender, recipient, payload, false);
    if (misread_risk && rs.cfg.fault_injection && rs.cfg.protocols == ProtocolMode::Off) {
        ViolationEvent v{tick, recipient, rs.scenario.misread_rule,
                         "cross-dialect directive misread"};
        rs.violations.push_back(v);
        rs.log.push({{"ev", "violation"},
                     {"tick", tick},
                     {"actor", v.actor},
                     {"rule", v.rule_id},
                     {"desc", v.description}});
    }
}

std::vector<AgentId> resolve_hook_voters(const RunState& rs, const ConsensusHook& hook) {
    std::vector<AgentId> voters;
    for (const std::string& group : hook.voter_groups) {
        AgentId head = rs.roster.group_leader(group);
        if (rs.roster.agent(head).kind == AgentKind::Asset)
            head = rs.roster.ownership_of(head).primary;
        if (std::find(voters.begin(), voters.end(), head) == voters.end())
            voters.push_back(head);
    }
    return voters;
}

void run_consensus_session(RunState& rs, int tick) {
    if (!rs.cfg.consensus.enabled || !rs.scenario.consensus_hook) return;
    const ConsensusHook& hook = *rs.scenario.consensus_hook;
    std::vector<AgentId> voters = resolve_hook_voters(rs, hook);

    std::vector<Proposal> proposals;
    for (std::size_t i = 0; i < hook.proposals.size(); ++i)
        proposals.push_back(
            {hook.proposals[i].first, voters[i % voters.size()], hook.proposals[i].second});

    // Proposal broadcasts to the leader.
    for (const Proposal& p : proposals) {
        log_step(rs, tick, p.proposer, build_context(rs.memory, rs.cfg.memory, p.proposer, tick).size(),
                 "propose");
        if (p.proposer != rs.leader)
            deliver_envelope(rs, tick, p.proposer, rs.leader, "proposal " + p.id + ": " + p.text,
                             true);
    }

    ConsensusOutcome outcome =
        run_consensus(rs.cfg.consensus, proposals, voters, VoteModel{rs.vote_key, {}});

    for (const RoundTally& tally : outcome.tallies) {
        for (const AgentId& voter : voters) {
            log_step(rs, tick, voter, 0, "vote");
            if (voter != rs.leader)
                deliver_envelope(rs, tick, voter, rs.leader,
                                 "vote round " + std::to_string(tally.round), true);
        }
        nlohmann::json shares = nlohmann::json::object();
        for (const auto& [id, share] : tally.shares) shares[id] = share;
        rs.log.push({{"ev", "consensus_round"},
                     {"round", tally.round},
                     {"shares", shares},
                     {"entropy", tally.entropy},
                     {"margin", tally.margin}});
    }
    rs.log.push({{"ev", "consensus_outcome"},
                 {"r_star", outcome.decided_round},
                 {"winner", outcome.winner ? nlohmann::json(outcome.winner->id) : nlohmann::json()}});

    if (!outcome.winner) {
        // Undecided sessions resolve by leader fiat, at the cost of one
        // directive message.
        log_step(rs, tick, rs.leader, 0, "fiat");
        for (const Proposal& p : proposals) {
            if (p.proposer != rs.leader) {
                deliver_envelope(rs, tick, rs.leader, p.proposer,
                                 "leader decision: " + proposals.front().id, true);
                break;
            }
        }
    }
}

}  // namespace

RunResult run_scenario(const RunConfig& cfg, const Roster& roster, const EngineHooks& hooks) {
    const auto wall_start = std::chrono::steady_clock::now();
    const ScenarioScript& scenario =
        hooks.scenario_override ? *hooks.scenario_override : load_scenario(cfg.scenario);
    const Whitelist default_wl = default_whitelist();
    const HierarchyGraph local_graph =
        hooks.hierarchy ? HierarchyGraph{} : build_hierarchy(roster);

    RunState rs{cfg,
                roster,
                scenario,
                hooks.hierarchy ? *hooks.hierarchy : local_graph,
                hooks.whitelist ? *hooks.whitelist : default_wl,
                hooks.lexicons ? *hooks.lexicons : default_lexicons(),
                hooks.text_generator};

    rs.leader = select_leader(scenario, cfg.leadership, roster);
    rs.memory.window_k = cfg.memory_window;
    rs.memory.summary_budget = cfg.memory_budget;
    rs.route_opts.preferred_hub =
        scenario.phase == ScenarioPhase::Emergency ? "CMD_01" : "OPS_01";
    rs.effective_policy = cfg.routing;
    if (cfg.gate_shortcuts_in_emergency && scenario.phase == ScenarioPhase::Emergency)
        rs.effective_policy = RoutingPolicy::Strict;
    for (std::size_t i = 0; i < roster.agents().size(); ++i)
        rs.roster_index[roster.agents()[i].id] = i;

    rs.log.push({{"ev", "run_header"},
                 {"scenario", scenario.id},
                 {"phase", to_string(scenario.phase)},
                 {"leader", rs.leader},
                 {"config", config_to_json(cfg)}});

    // Availability first, from its own substream: factor toggles elsewhere
    // cannot shift these draws.
    Substream avail_rng = substream(cfg.seed, "availability");
    AvailabilityMap avail = sample_availability(roster, cfg.outage_rate, avail_rng);
    {
        std::vector<AgentId> offline;
        std::set<AgentId> seen;
        for (const OwnershipRecord& rec : roster.ownership_table()) {
            std::vector<AgentId> ids{rec.primary};
            ids.insert(ids.end(), rec.backups.begin(), rec.backups.end());
            for (const AgentId& id : ids)
                if (seen.insert(id).second && !avail.is_online(id)) offline.push_back(id);
        }
        rs.log.push({{"ev", "availability"}, {"p", cfg.outage_rate}, {"offline", offline}});
    }

    Substream vote_rng = substream(cfg.seed, "voting");
    rs.vote_key = vote_rng.next_u64();
    Substream jitter_rng = substream(cfg.seed, "playbook");

    // Control resolution for every scenario asset, before any command runs.
    for (const AgentId& asset : scenario.assets) {
        const OwnershipRecord& rec = roster.ownership_of(asset);
        ControlResolution res = resolve_controller(rec, avail, cfg.role_switching);
        rs.resolutions.push_back(res);
        if (res.was_switch) {
            rs.log.push({{"ev", "role_switch"},
                         {"asset", asset},
                         {"from", rec.primary},
                         {"to", *res.controller},
                         {"tick", 0}});
        } else if (!res.controller) {
            rs.log.push({{"ev", "unserviceable"},
                         {"asset", asset},
                         {"from", rec.primary},
                         {"to", nullptr},
                         {"tick", 0}});
        }
    }
    std::map<AgentId, const ControlResolution*> control;
    for (const ControlResolution& res : rs.resolutions) control[res.asset] = &res;

    // Jitter is pre-drawn in authored playbook order so that the value bound
    // to a step never depends on factor levels.
    std::vector<ResolvedStep> steps;
    steps.reserve(scenario.playbook.size());
    for (const PlaybookStep& step : scenario.playbook) {
        ResolvedStep r;
        r.step = &step;
        if (step.kind == StepKind::Say || step.kind == StepKind::Command ||
            step.kind == StepKind::Section)
            r.jitter = jitter_rng.next_unit();
        switch (step.kind) {
            case StepKind::Say:
            case StepKind::Section:
            case StepKind::Breach:
                r.actor = step.actor == "LEADER" ? rs.leader : step.actor;
                break;
            case StepKind::Consensus:
                r.actor = rs.leader;
                break;
            case StepKind::Command: {
                auto it = control.find(step.target);
                if (it == control.end())
                    throw EngineError("command to asset outside scenario: " + step.target);
                if (it->second->controller) {
                    r.actor = *it->second->controller;
                } else {
                    r.actor = roster.ownership_of(step.target).primary;  // ordering only
                    r.drop_asset = step.target;
                }
                break;
            }
        }
        steps.push_back(std::move(r));
    }

    // Tick loop: agents act in roster order within a tick.
    std::stable_sort(steps.begin(), steps.end(), [&](const ResolvedStep& a, const ResolvedStep& b) {
        if (a.step->tick != b.step->tick) return a.step->tick < b.step->tick;
        return rs.roster_index.at(a.actor) < rs.roster_index.at(b.actor);
    });

    // One behaviour invocation covers an actor's consecutive actions within
    // a tick; relays, consensus duties, and drops break the chain.
    int open_tick = -1;
    AgentId open_actor;
    auto close_invocation = [&] { open_tick = -1; open_actor.clear(); };

    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ResolvedStep& r = steps[i];
        const PlaybookStep& step = *r.step;
        const int tick = step.tick;

        if (step.kind == StepKind::Breach) {
            close_invocation();
            if (!cfg.fault_injection) continue;
            log_step(rs, tick, r.actor, 0, "breach");
            ViolationEvent v{tick, r.actor, step.breach_rule, "staged constraint breach"};
            rs.violations.push_back(v);
            rs.log.push({{"ev", "violation"},
                         {"tick", tick},
                         {"actor", v.actor},
                         {"rule", v.rule_id},
                         {"desc", v.description}});
            continue;
        }
        if (step.kind == StepKind::Consensus) {
            close_invocation();
            run_consensus_session(rs, tick);
            continue;
        }
        if (!r.drop_asset.empty()) {
            close_invocation();
            rs.log.push({{"ev", "drop"},
                         {"tick", tick},
                         {"asset", r.drop_asset},
                         {"reason", "unserviceable"}});
            continue;
        }

        if (open_tick != tick || open_actor != r.actor) {
            log_step(rs, tick, r.actor,
                     build_context(rs.memory, cfg.memory, r.actor, tick).size());
            open_tick = tick;
            open_actor = r.actor;
        }

        if (step.kind == StepKind::Say) {
            AgentId to = step.target == "LEADER" ? rs.leader : step.target;
            if (to == r.actor) continue;  // leader-directed note to self, no envelope
            std::string payload = step.text;
            if (rs.textgen) {
                TextGenRequest req;
                req.system_role = roster.agent(r.actor).title;
                req.context = build_context(rs.memory, cfg.memory, r.actor, tick);
                req.prompt_fragment = scenario.seed_prompt.substr(0, 160) + " | cue: " + step.text;
                req.seed = cfg.seed;
                payload = rs.textgen->generate(req).text;
            }
            send_content(rs, tick, r.actor, to, payload, step.misread_risk);
        } else if (step.kind == StepKind::Command) {
            std::string payload = step.text + " [u=" + format_jitter(r.jitter) + "]";
            send_content(rs, tick, r.actor, step.target, payload, false);
        } else if (step.kind == StepKind::Section) {
            rs.report.sections.emplace_back(step.text, step.fields);
            rs.log.push({{"ev", "section"}, {"tick", tick}, {"tag", step.text}, {"by", r.actor}});
        }
    }

    RunResult result;
    result.config = cfg;
    result.leader = rs.leader;
    result.report = std::move(rs.report);
    {
        // Report sections read in deliverable order, not acting order.
        std::map<std::string, int> rank;
        for (const DeliverableSpec& d : scenario.deliverables) rank[d.section_tag] = d.index;
        std::stable_sort(result.report.sections.begin(), result.report.sections.end(),
                         [&](const auto& a, const auto& b) {
                             auto ra = rank.count(a.first) ? rank[a.first] : 1000;
                             auto rb = rank.count(b.first) ? rank[b.first] : 1000;
                             return ra < rb;
                         });
    }
    result.deliverable_flags = check_deliverables(result.report, scenario);
    {
        nlohmann::json flags = nlohmann::json::array();
        for (bool f : result.deliverable_flags) flags.push_back(f);
        rs.log.push({{"ev", "deliverables"}, {"flags", flags}});
    }
    result.breakdown = count_failures(rs.violations, rs.resolutions, result.deliverable_flags);

    std::uint64_t switches = 0;
    for (const ControlResolution& res : rs.resolutions)
        if (res.was_switch) ++switches;

    RunMetrics m;
    m.time_steps = static_cast<double>(rs.steps);
    m.msgs = static_cast<double>(rs.counters.n_msg);
    m.cross_ratio = cross_layer_ratio(rs.counters);
    m.failures = static_cast<double>(result.breakdown.f_total);
    m.switches = static_cast<double>(switches);
    m.breakdown = result.breakdown;
    result.metrics = m;

    rs.log.push({{"ev", "metrics"},
                 {"steps", rs.steps},
                 {"hops", rs.counters.n_msg},
                 {"envelopes", rs.counters.n_envelopes},
                 {"cross_hops", rs.counters.n_cross},
                 {"cross_ratio", m.cross_ratio},
                 {"n_asset", result.breakdown.n_asset},
                 {"n_viol", result.breakdown.n_viol},
                 {"n_miss", result.breakdown.n_miss},
                 {"failures", result.breakdown.f_total},
                 {"switches", switches},
                 {"ampi", compute_ampi(m, cfg.ampi)}});
    result.log = std::move(rs.log);
    if (!cfg.memory_snapshot_path.empty())
        dump_memory_snapshot(rs.memory, cfg.memory_snapshot_path);

    result.metrics.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    return result;
}

RunMetrics recount(const RunResult& result) {
    std::uint64_t steps = 0, hops = 0, envelopes = 0, cross = 0, switches = 0;
    std::uint64_t n_asset = 0, n_viol = 0;
    std::uint64_t expected_seq = 0;
    bool saw_header = false, saw_availability = false, saw_metrics = false;
    std::vector<bool> flags;

    for (const auto& rec : result.log.records) {
        const std::string ev = rec.at("ev").get<std::string>();
        if (ev == "run_header") saw_header = true;
        else if (ev == "availability") saw_availability = true;
        else if (ev == "step") ++steps;
        else if (ev == "msg") {
            if (rec.at("seq").get<std::uint64_t>() != expected_seq++)
                throw EngineError("recount: envelope sequence gap");
            ++envelopes;
            hops += rec.at("kind").get<std::string>() == "hub" ? 2 : 1;
            if (rec.at("is_cross_layer").get<bool>()) ++cross;
        } else if (ev == "role_switch") ++switches;
        else if (ev == "unserviceable") ++n_asset;
        else if (ev == "violation") ++n_viol;
        else if (ev == "deliverables") flags = rec.at("flags").get<std::vector<bool>>();
        else if (ev == "metrics") saw_metrics = true;
    }
    if (!saw_header || !saw_availability || !saw_metrics)
        throw EngineError("recount: log is missing a required record");

    RunMetrics m;
    m.time_steps = static_cast<double>(steps);
    m.msgs = static_cast<double>(hops);
    m.cross_ratio = hops == 0 ? 0.0 : static_cast<double>(cross) / static_cast<double>(hops);
    m.breakdown.n_asset = n_asset;
    m.breakdown.n_viol = n_viol;
    for (bool f : flags)
        if (!f) ++m.breakdown.n_miss;
    m.breakdown.f_total = m.breakdown.n_asset + m.breakdown.n_viol + m.breakdown.n_miss;
    m.failures = static_cast<double>(m.breakdown.f_total);
    m.switches = static_cast<double>(switches);

    const RunMetrics& r = result.metrics;
    if (m.time_steps != r.time_steps || m.msgs != r.msgs || m.cross_ratio != r.cross_ratio ||
        m.failures != r.failures || m.switches != r.switches ||
        m.breakdown.n_asset != r.breakdown.n_asset || m.breakdown.n_viol != r.breakdown.n_viol ||
        m.breakdown.n_miss != r.breakdown.n_miss)
        throw EngineError("recount: metrics disagree with the event log");
    return m;
}

}  // namespace marsops

// Benchmark scenario catalog: 13 scripted operational exercises with fixed
// seed prompts, leader orders, deliverable checkers, constraint rules, and
// deterministic playbooks.

#include "marsops/scenarios.hpp"

#include <fstream>
#include <map>

#include "json.hpp"

namespace marsops {

namespace {

using Fields = std::map<std::string, std::string>;

PlaybookStep say(int tick, AgentId from, AgentId to, std::string text, bool misread = false) {
    PlaybookStep s;
    s.tick = tick;
    s.kind = StepKind::Say;
    s.actor = std::move(from);
    s.target = std::move(to);
    s.text = std::move(text);
    s.misread_risk = misread;
    return s;
}

PlaybookStep command(int tick, AgentId asset, std::string text) {
    PlaybookStep s;
    s.tick = tick;
    s.kind = StepKind::Command;
    s.target = std::move(asset);
    s.text = std::move(text);
    return s;
}

PlaybookStep section(int tick, AgentId actor, std::string tag, Fields fields) {
    PlaybookStep s;
    s.tick = tick;
    s.kind = StepKind::Section;
    s.actor = std::move(actor);
    s.text = std::move(tag);
    s.fields = std::move(fields);
    return s;
}

PlaybookStep consensus_at(int tick) {
    PlaybookStep s;
    s.tick = tick;
    s.kind = StepKind::Consensus;
    return s;
}

PlaybookStep breach(int tick, AgentId actor, std::string rule_id) {
    PlaybookStep s;
    s.tick = tick;
    s.kind = StepKind::Breach;
    s.actor = std::move(actor);
    s.breach_rule = std::move(rule_id);
    return s;
}

DeliverableSpec want(int index, std::string tag, std::vector<std::string> fields) {
    return DeliverableSpec{index, std::move(tag), std::move(fields)};
}

ConstraintRule rule(std::string id, std::string scenario, ConstraintKind kind, std::string desc) {
    return ConstraintRule{std::move(id), std::move(scenario), kind, std::move(desc)};
}

ScenarioScript make_daily_operations() {
    ScenarioScript s;
    s.id = "DailyOperations";
    s.phase = ScenarioPhase::DailyOps;
    s.seed_prompt =
        "You are running the Daily Operations script for the next 8 h on Mars. Trigger: "
        "start-of-sol stand-up. Tasks: roll up overnight telemetry, set priorities, allocate "
        "power/water/crew time, schedule EVA/ROV/ISRU jobs, confirm asset heartbeats (HAB, "
        "SOL_CTRL, NUKE_CTRL, ISRU_PLANT, GH_CTRL, ROV_SCI/INSP/CARGO, UAV_MAP/UAV_COM, "
        "PRT_CTRL, ARM_CTRL). Constraints: intermittent comms to Earth; limited battery "
        "reserve; obey safety interlocks. Deliverables: (1) 8-h agenda with owners and time "
        "tags; (2) resource allocation summary; (3) risks & abort thresholds; (4) end-of-run "
        "status note.";
    s.leader_order = {"OPS", "CMD"};
    s.participants = {"OPS", "MED", "NUR", "LSS", "PWR", "ISRU", "AGRI", "GEO",
                      "EVA", "COM", "LOGT", "MNT", "DKM", "PSY", "AI"};
    s.assets = {"HAB_01", "HAB_02", "HAB_03", "SOL_CTRL_01", "NUKE_CTRL_01",
                "ISRU_PLANT_01", "GH_CTRL_01", "GH_CTRL_02", "ROV_SCI_01", "ROV_INSP_01",
                "ROV_CARGO_01", "UAV_MAP_01", "UAV_COM_01", "PRT_CTRL_01", "ARM_CTRL_01"};
    s.deliverables = {
        want(1, "agenda", {"owner", "time_tag"}),
        want(2, "resource_allocation", {"power_budget", "water_budget", "crew_hours"}),
        want(3, "risks_abort_thresholds", {"risk", "abort_threshold"}),
        want(4, "status_note", {"status"}),
    };
    s.constraints = {rule("DAILY_INTERLOCK", s.id, ConstraintKind::InterlockBypass,
                          "safety interlocks stay engaged while scheduling jobs")};
    s.misread_rule = "DAILY_INTERLOCK";
    s.consensus_hook = ConsensusHook{
        {"OPS", "PWR", "LOGT", "EVA"},
        {{"POWER_FIRST", "prioritize ISRU power peaks, defer printing"},
         {"SCIENCE_FIRST", "protect the science traverse window, cap ISRU draw"}}};

    const char* leads[] = {"MED_01", "NUR_01", "LSS_01", "PWR_01", "ISRU_01", "AGRI_01",
                           "GEO_01", "EVA_01", "COM_01", "LOGT_01", "MNT_01", "DKM_01",
                           "PSY_01"};
    for (const char* lead : leads)
        s.playbook.push_back(say(0, "LEADER", lead, "stand-up: report overnight status and constraints"));
    for (const char* lead : leads)
        s.playbook.push_back(say(1, lead, "LEADER", "overnight nominal; constraints noted"));
    s.playbook.push_back(say(2, "GEO_01", "AI_02",
                             "traverse corridor planning over hydrated silicates targets", true));
    const char* heartbeats[] = {"HAB_01", "HAB_02", "HAB_03", "SOL_CTRL_01", "NUKE_CTRL_01",
                                "ISRU_PLANT_01", "GH_CTRL_01", "GH_CTRL_02", "ROV_SCI_01",
                                "ROV_INSP_01", "ROV_CARGO_01", "UAV_MAP_01", "UAV_COM_01",
                                "PRT_CTRL_01", "ARM_CTRL_01"};
    for (const char* asset : heartbeats) s.playbook.push_back(command(3, asset, "heartbeat check"));
    s.playbook.push_back(consensus_at(4));
    s.playbook.push_back(section(5, "LEADER", "agenda",
                                 {{"owner", "OPS_01"}, {"time_tag", "T+00:00..T+08:00"}}));
    s.playbook.push_back(section(5, "LOGT_01", "resource_allocation",
                                 {{"power_budget", "41 kWh"},
                                  {"water_budget", "120 L"},
                                  {"crew_hours", "54 h"}}));
    s.playbook.push_back(section(5, "LEADER", "risks_abort_thresholds",
                                 {{"risk", "battery reserve dip during ISRU peak"},
                                  {"abort_threshold", "reserve < 18%"}}));
    s.playbook.push_back(section(5, "LEADER", "status_note", {{"status", "plan published, all heartbeats green"}}));
    return s;
}

ScenarioScript make_emergency_response() {
    ScenarioScript s;
    s.id = "EmergencyResponse";
    s.phase = ScenarioPhase::Emergency;
    s.seed_prompt =
        "You are running the Emergency Response script after a compound alert. Trigger: "
        "microgrid voltage sag, elevated LSS CO2 scrubber load, and a transient suit sensor "
        "glitch reported by SUIT_CTRL. Tasks: stabilize power, verify life support margins, "
        "rule out suit hardware fault, replan near-term ops. Constraints: treat any redline "
        "as authority-to-stop; Earth unavailable. Deliverables: (1) 30-min stabilization "
        "plan; (2) incident command structure (who leads what); (3) prioritized task list "
        "with timers; (4) return-to-nominal criteria & handoff.";
    s.leader_order = {"CMD", "OPS"};
    s.participants = {"CMD", "OPS", "LSS", "PWR", "ISRU", "MNT", "MED", "NUR", "LOGT", "GEO", "DKM", "EVA"};
    s.assets = {"HAB_01", "HAB_02", "HAB_03", "SOL_CTRL_01", "NUKE_CTRL_01",
                "ISRU_PLANT_01", "GH_CTRL_01", "GH_CTRL_02", "SUIT_CTRL_01"};
    s.deliverables = {
        want(1, "stabilization_plan", {"actions", "horizon_min"}),
        want(2, "incident_command", {"incident_lead", "deputies"}),
        want(3, "task_list", {"task", "timer"}),
        want(4, "return_to_nominal", {"criteria", "handoff_to"}),
    };
    s.constraints = {
        rule("EMER_REDLINE", s.id, ConstraintKind::Redline, "any redline is authority-to-stop"),
        rule("EMER_SEO", s.id, ConstraintKind::SeoRejection,
             "no execution of a step rejected by the safety officer"),
    };
    s.misread_rule = "EMER_REDLINE";
    s.consensus_hook = ConsensusHook{
        {"LSS", "PWR", "OPS", "MED"},
        {{"SHED_ISRU", "shed the ISRU train first, keep habitat margins"},
         {"BATTERY_BRIDGE", "bridge on storage, keep ISRU warm"}}};

    s.playbook.push_back(say(0, "SUIT_CTRL_01", "EVA_02", "suit sensor glitch: PLSS telemetry dropout 3 s"));
    s.playbook.push_back(say(0, "SOL_CTRL_01", "PWR_01", "voltage sag event on feeder 2"));
    s.playbook.push_back(say(0, "HAB_01", "LSS_05", "scrubber load spike in cabin loop"));
    s.playbook.push_back(say(1, "EVA_02", "LEADER", "suit fault triage inconclusive, self-test queued"));
    s.playbook.push_back(say(1, "PWR_01", "LEADER", "microgrid state estimate degraded on feeder 2"));
    s.playbook.push_back(say(1, "LSS_05", "LEADER", "oxygen buffer margin holding"));
    s.playbook.push_back(say(2, "LEADER", "OPS_01", "activate incident command"));
    s.playbook.push_back(say(3, "OPS_01", "PWR_01", "stabilize feeder 2, apply load-shed precedence"));
    s.playbook.push_back(say(3, "OPS_01", "LSS_01", "verify habitability margins"));
    s.playbook.push_back(say(3, "OPS_01", "EVA_01", "rule out suit hardware fault"));
    s.playbook.push_back(say(4, "PWR_01", "ISRU_03",
                             "reduce electrolysis power quota during the sag window", true));
    s.playbook.push_back(say(4, "MED_01", "NUR_01", "stage the triage ward as a precaution"));
    s.playbook.push_back(command(5, "HAB_01", "safe-mode circulation"));
    s.playbook.push_back(command(5, "HAB_02", "hold cabin pressure setpoint"));
    s.playbook.push_back(command(5, "HAB_03", "alarm audit"));
    s.playbook.push_back(command(5, "SOL_CTRL_01", "curtail feeder 2"));
    s.playbook.push_back(command(5, "NUKE_CTRL_01", "baseload uprate"));
    s.playbook.push_back(command(5, "ISRU_PLANT_01", "pause electrolysis train"));
    s.playbook.push_back(command(5, "GH_CTRL_01", "reduce lighting load"));
    s.playbook.push_back(command(5, "GH_CTRL_02", "hold nutrient dosing"));
    s.playbook.push_back(command(5, "SUIT_CTRL_01", "run suit self-test"));
    s.playbook.push_back(breach(5, "PWR_02", "EMER_REDLINE"));
    s.playbook.push_back(consensus_at(6));
    s.playbook.push_back(say(7, "PWR_01", "LEADER", "feeder 2 stable, sag cleared"));
    s.playbook.push_back(say(7, "LSS_01", "LEADER", "margins verified, scrubber load easing"));
    s.playbook.push_back(say(7, "EVA_01", "LEADER", "suit sensor glitch transient, hardware cleared"));
    s.playbook.push_back(section(8, "LEADER", "stabilization_plan",
                                 {{"actions", "curtail feeder 2; uprate baseload; pause ISRU"},
                                  {"horizon_min", "30"}}));
    s.playbook.push_back(section(8, "OPS_01", "incident_command",
                                 {{"incident_lead", "CMD_01"},
                                  {"deputies", "OPS_01 power, LSS_01 habitat, EVA_01 suits"}}));
    s.playbook.push_back(section(8, "OPS_01", "task_list",
                                 {{"task", "feeder stabilization, margin verify, suit self-test"},
                                  {"timer", "10/20/30 min"}}));
    s.playbook.push_back(section(8, "LEADER", "return_to_nominal",
                                 {{"criteria", "bus voltage nominal 15 min, scrubber load < 0.7"},
                                  {"handoff_to", "OPS_01"}}));
    return s;
}

ScenarioScript make_science_exploration() {
    ScenarioScript s;
    s.id = "ScienceExploration";
    s.phase = ScenarioPhase::Science;
    s.seed_prompt =
        "You are running the Science Exploration script for a 3-hour traverse. Trigger: GEO "
        "requests sampling along the Aeolis rim. Tasks: propose traverse, sample targets and "
        "chain-of-custody, COM link windows, AI/SLAM checks; prep ROV_SCI, UAV_MAP. "
        "Constraints: sunlight/thermal limits; sparse relay from COMSAT_CTRL. Deliverables: "
        "(1) route with waypoints & hazards; (2) sample list with rationale & custody steps; "
        "(3) comms plan; (4) go/no-go with aborts and a contingency route.";
    s.leader_order = {"GEO", "BIO", "OPS"};
    s.participants = {"GEO", "BIO", "OPS", "AI", "COM"};
    s.assets = {"ROV_SCI_01", "UAV_MAP_01"};
    s.deliverables = {
        want(1, "route_plan", {"waypoints", "hazards"}),
        want(2, "sample_list", {"samples", "custody"}),
        want(3, "comms_plan", {"windows", "relay"}),
        want(4, "go_no_go", {"decision", "abort_conditions", "contingency_route"}),
    };
    s.constraints = {rule("SCI_THERMAL", s.id, ConstraintKind::Redline,
                          "sunlight/thermal limits bound the traverse")};
    s.misread_rule = "SCI_THERMAL";
    s.consensus_hook = ConsensusHook{
        {"GEO", "BIO", "OPS"},
        {{"NORTH_RIM", "north rim traverse, two sampling stops"},
         {"CRATER_FLOOR", "crater floor transect, single long stop"}}};

    s.playbook.push_back(say(0, "OPS_01", "LEADER", "traverse window approved: 3 h"));
    s.playbook.push_back(say(1, "LEADER", "GEO_05",
                             "sampling tasking: hydrated silicates along the rim, keep the core specimen lot custody chain"));
    s.playbook.push_back(say(2, "GEO_01", "AI_02",
                             "survey hydrated silicates ridge, need a waypoint check", true));
    s.playbook.push_back(say(3, "GEO_01", "COM_01",
                             "relay visibility pass needed over the traverse corridor"));
    s.playbook.push_back(command(4, "ROV_SCI_01", "pre-check: drilling and sampling cache"));
    s.playbook.push_back(command(4, "UAV_MAP_01", "photogrammetry prep"));
    s.playbook.push_back(consensus_at(5));
    s.playbook.push_back(section(6, "LEADER", "route_plan",
                                 {{"waypoints", "WP1 rim saddle, WP2 layered outcrop, WP3 return"},
                                  {"hazards", "scarp edge, loose fines"}}));
    s.playbook.push_back(section(6, "GEO_05", "sample_list",
                                 {{"samples", "S1 laminated mudstone, S2 vein fill"},
                                  {"custody", "bag, tag, cache manifest"}}));
    s.playbook.push_back(section(6, "COM_01", "comms_plan",
                                 {{"windows", "T+020 and T+140"}, {"relay", "COMSAT pass, UAV backup"}}));
    s.playbook.push_back(section(6, "OPS_01", "go_no_go",
                                 {{"decision", "go"},
                                  {"abort_conditions", "cell temp over redline, comms loss > 25 min"},
                                  {"contingency_route", "WP1 direct return"}}));
    return s;
}

ScenarioScript make_gh_bio_outbreak() {
    ScenarioScript s;
    s.id = "GH_BioOutbreak";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the Greenhouse Bio Anomaly script. Trigger: GH_CTRL flags leaf "
        "spotting and elevated spore counts in Zone 2. Tasks: BIO diagnosis, AGRI ops "
        "changes, LSS circulation implications, quarantine intensity debate if needed. "
        "Constraints: protect crew & food supply; avoid cross-contamination. Deliverables: "
        "(1) quarantine plan (zones, PPE, duration); (2) sampling & lab tests using "
        "LAB_INSTR; (3) greenhouse setpoint changes; (4) success/clear criteria and "
        "monitoring cadence.";
    s.leader_order = {"AGRI", "BIO", "OPS"};
    s.participants = {"AGRI", "BIO", "OPS", "LSS", "PSY", "LAB"};
    s.assets = {"GH_CTRL_01", "GH_CTRL_02", "LAB_INSTR_01"};
    s.deliverables = {
        want(1, "quarantine_plan", {"zones", "ppe", "duration"}),
        want(2, "lab_tests", {"samples", "instrument"}),
        want(3, "setpoint_changes", {"zone", "parameter"}),
        want(4, "clear_criteria", {"criteria", "monitoring_cadence"}),
    };
    s.constraints = {rule("GH_XCONTAM", s.id, ConstraintKind::Redline,
                          "no cross-contamination between zones")};
    s.misread_rule = "GH_XCONTAM";
    s.consensus_hook = ConsensusHook{
        {"AGRI", "BIO", "OPS", "PSY"},
        {{"FULL_QUARANTINE", "seal zone 2, full PPE, 10 sols"},
         {"SOFT_ISOLATION", "airflow isolation only, monitor 3 sols"}}};

    s.playbook.push_back(say(0, "GH_CTRL_01", "AGRI_01", "leaf spotting event, spore counts rising in zone 2"));
    s.playbook.push_back(say(1, "AGRI_01", "BIO_01", "diagnosis request for the leaf spotting event"));
    s.playbook.push_back(say(2, "BIO_01", "AI_02", "run a microbiome census against the phenotype record set"));
    s.playbook.push_back(say(3, "BIO_01", "LAB_01", "culture plate series for the spore assay"));
    s.playbook.push_back(say(4, "LSS_01", "AGRI_01",
                             "duct rerouting scheme may spread spores, check the biofilm fouling hazard", true));
    s.playbook.push_back(say(5, "OPS_01", "AGRI_01", "ops approval for zone isolation"));
    s.playbook.push_back(command(6, "GH_CTRL_01", "isolate zone 2 airflow"));
    s.playbook.push_back(command(6, "GH_CTRL_02", "nutrient line flush"));
    s.playbook.push_back(command(6, "LAB_INSTR_01", "GC/MS run on spore samples"));
    s.playbook.push_back(consensus_at(7));
    s.playbook.push_back(section(8, "LEADER", "quarantine_plan",
                                 {{"zones", "zone 2 sealed"}, {"ppe", "N95 + gloves"}, {"duration", "5 sols"}}));
    s.playbook.push_back(section(8, "LAB_01", "lab_tests",
                                 {{"samples", "leaf punch x6, filter swab x2"}, {"instrument", "LAB_INSTR_01"}}));
    s.playbook.push_back(section(8, "AGRI_01", "setpoint_changes",
                                 {{"zone", "2"}, {"parameter", "RH 55%, airflow isolated"}}));
    s.playbook.push_back(section(8, "BIO_01", "clear_criteria",
                                 {{"criteria", "two clean assays 48 h apart"},
                                  {"monitoring_cadence", "every 12 h"}}));
    return s;
}

ScenarioScript make_comms_blackout_eva() {
    ScenarioScript s;
    s.id = "CommsBlackoutEVA";
    s.phase = ScenarioPhase::DailyOps;
    s.seed_prompt =
        "You are running the EVA in Comms Blackout script. Trigger: planned EVA route "
        "crosses a 20-minute RF shadow. Tasks: COM link-budget and relay plan (UAV_COM "
        "loiter), store-and-forward procedures, timed callouts, hazard review with GEO. "
        "Constraints: hard comms blackout segment; suit consumables. Deliverables: (1) EVA "
        "timeline; (2) comms plan (waypoints, altitudes, timing); (3) emergency actions for "
        "loss of relay; (4) go/no-go with abort thresholds.";
    s.leader_order = {"OPS", "COM", "GEO"};
    s.participants = {"OPS", "COM", "GEO", "AI", "EVA"};
    s.assets = {"UAV_COM_01"};
    s.deliverables = {
        want(1, "eva_timeline", {"segments", "blackout_window"}),
        want(2, "comms_plan", {"waypoints", "altitudes", "timing"}),
        want(3, "loss_of_relay_actions", {"actions"}),
        want(4, "go_no_go", {"decision", "abort_thresholds"}),
    };
    s.constraints = {
        rule("EVA_BLACKOUT", s.id, ConstraintKind::Redline,
             "blackout segment procedures are mandatory"),
        rule("EVA_CONSUMABLES", s.id, ConstraintKind::Redline, "suit consumable floor"),
    };
    s.misread_rule = "EVA_BLACKOUT";
    s.consensus_hook = ConsensusHook{
        {"COM", "OPS", "AI"},
        {{"RELAY_PRIORITY", "EVA voice gets the relay, SLAM data store-and-forward"},
         {"SPLIT_BANDWIDTH", "50/50 split between voice and telemetry"}}};

    s.playbook.push_back(say(0, "LEADER", "EVA_01", "EVA window brief: RF shadow 20 min on segment B"));
    s.playbook.push_back(say(1, "EVA_01", "GEO_01", "hazard review request for the planned route"));
    s.playbook.push_back(say(2, "GEO_01", "EVA_01", "terrain hazard appraisal: scarp edge and loose fines"));
    s.playbook.push_back(say(3, "COM_01", "AI_02",
                             "downlink packet stream cadence in the shadow, confirm keyframe intervals", true));
    s.playbook.push_back(say(4, "COM_01", "OPS_01", "contact window plan with UAV loiter relay"));
    s.playbook.push_back(command(5, "UAV_COM_01", "loiter station for relay coverage"));
    s.playbook.push_back(say(6, "UAV_COM_01", "COM_02", "relay link telemetry nominal"));
    s.playbook.push_back(say(7, "EVA_01", "OPS_01", "go/no-go inputs with abort thresholds"));
    s.playbook.push_back(consensus_at(8));
    s.playbook.push_back(section(9, "EVA_01", "eva_timeline",
                                 {{"segments", "egress, transit, shadow section, return"},
                                  {"blackout_window", "T+045..T+065"}}));
    s.playbook.push_back(section(9, "COM_01", "comms_plan",
                                 {{"waypoints", "WP2, WP4 callouts"},
                                  {"altitudes", "UAV loiter 120 m"},
                                  {"timing", "callouts every 10 min"}}));
    s.playbook.push_back(section(9, "COM_02", "loss_of_relay_actions",
                                 {{"actions", "hold position, store-and-forward, return at T+075"}}));
    s.playbook.push_back(section(9, "LEADER", "go_no_go",
                                 {{"decision", "go"},
                                  {"abort_thresholds", "consumables < 35%, no contact at T+075"}}));
    return s;
}

ScenarioScript make_isru_off_nominal() {
    ScenarioScript s;
    s.id = "ISRU_OffNominal";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the ISRU Off-Nominal Throughput script. Trigger: oxygen output "
        "fell from 24 kg/day to 16 kg/day; cell temperature oscillation observed at "
        "ISRU_PLANT. Tasks: triage (sensor vs. process), hypothesize catalyst fouling or "
        "feedstock moisture, coordinate PWR peaks, plan derate. Constraints: do not exceed "
        "thermal redlines; maintain base O2 buffer. Deliverables: (1) root-cause hypotheses "
        "and quick tests; (2) safe derate schedule; (3) spares/assay requests to LAB_INSTR; "
        "(4) return-to-service checklist.";
    s.leader_order = {"ISRU", "PWR", "OPS"};
    s.participants = {"ISRU", "PWR", "OPS", "LAB", "AI"};
    s.assets = {"ISRU_PLANT_01", "LAB_INSTR_01"};
    s.deliverables = {
        want(1, "root_cause", {"hypotheses", "quick_tests"}),
        want(2, "derate_schedule", {"steps", "floor_kg_day"}),
        want(3, "assay_requests", {"items", "instrument"}),
        want(4, "return_to_service", {"checks"}),
    };
    s.constraints = {
        rule("ISRU_THERMAL", s.id, ConstraintKind::Redline,
             "cell thermal redline must not be exceeded"),
        rule("ISRU_O2_BUFFER", s.id, ConstraintKind::Redline, "base O2 buffer floor"),
    };
    s.misread_rule = "ISRU_THERMAL";

    s.playbook.push_back(say(0, "ISRU_PLANT_01", "ISRU_03",
                             "yield shortfall: O2 24 to 16 kg/day, cell temperature redline approaching"));
    s.playbook.push_back(say(1, "ISRU_03", "ISRU_01",
                             "root causes: catalyst fouling hazard vs feedstock moisture"));
    s.playbook.push_back(say(2, "ISRU_01", "AI_03",
                             "co-simulate the process train shutdown options", true));
    s.playbook.push_back(command(3, "ISRU_PLANT_01", "derate to safe floor, hold 16 kg/day"));
    s.playbook.push_back(command(3, "LAB_INSTR_01", "queue XRF assay for the catalyst"));
    s.playbook.push_back(section(4, "ISRU_03", "root_cause",
                                 {{"hypotheses", "catalyst fouling, feedstock moisture"},
                                  {"quick_tests", "assay catalyst, dry-run feed line"}}));
    s.playbook.push_back(section(4, "LEADER", "derate_schedule",
                                 {{"steps", "hold 16, step to 20 after assay"}, {"floor_kg_day", "16"}}));
    s.playbook.push_back(section(4, "ISRU_05", "assay_requests",
                                 {{"items", "catalyst sample, feed moisture probe"},
                                  {"instrument", "LAB_INSTR_01"}}));
    s.playbook.push_back(section(4, "LEADER", "return_to_service",
                                 {{"checks", "thermal steady 6 h, assay clean, buffer > 80%"}}));
    return s;
}

ScenarioScript make_cyber_anomaly() {
    ScenarioScript s;
    s.id = "CyberAnomaly";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the Cyber Anomaly & Segmentation script. Trigger: NET_SEC_CTRL "
        "reports unusual outbound traffic from HAB_02 at 02:17. Tasks: triage (malware vs. "
        "misconfig), apply least-privilege segmentation, update allowlist, preserve logs for "
        "forensics. Constraints: keep life-critical systems online; audit every action. "
        "Deliverables: (1) incident timeline; (2) containment/segmentation actions; (3) "
        "impact assessment; (4) recovery plan & monitoring.";
    s.leader_order = {"COM", "OPS", "DKM"};
    s.participants = {"COM", "OPS", "DKM", "AI", "SEO", "LSS"};
    s.assets = {"NET_SEC_CTRL_01", "HAB_02"};
    s.deliverables = {
        want(1, "incident_timeline", {"events"}),
        want(2, "containment_actions", {"actions", "segments"}),
        want(3, "impact_assessment", {"systems_affected", "severity"}),
        want(4, "recovery_plan", {"steps", "monitoring"}),
    };
    s.constraints = {
        rule("CYBER_LIFECRIT", s.id, ConstraintKind::Redline, "life-critical systems stay online"),
        rule("CYBER_AUDIT", s.id, ConstraintKind::SeoRejection, "every action is audited"),
    };
    s.misread_rule = "CYBER_LIFECRIT";
    s.consensus_hook = ConsensusHook{
        {"COM", "OPS", "AI", "DKM"},
        {{"HARD_SEGMENT", "full east-west segmentation, accept ops friction"},
         {"TARGETED_BLOCK", "block the offending flows only, watch for spread"}}};

    s.playbook.push_back(say(0, "NET_SEC_CTRL_01", "COM_04",
                             "signal intrusion hazard: unusual outbound from HAB_02 at 02:17"));
    s.playbook.push_back(say(1, "COM_04", "COM_01", "triage: malware vs misconfig, propose segmentation"));
    s.playbook.push_back(say(2, "COM_01", "DKM_01", "threat hypotheses review with platform logs"));
    s.playbook.push_back(say(3, "COM_01", "AI_02", "autonomy health probe across compute nodes", true));
    s.playbook.push_back(say(4, "DKM_01", "LEADER", "data plane exposure summary attached"));
    s.playbook.push_back(command(5, "NET_SEC_CTRL_01", "apply least-privilege segmentation, rotate keys"));
    s.playbook.push_back(command(5, "HAB_02", "isolate data interface, keep life support loops"));
    s.playbook.push_back(breach(5, "COM_04", "CYBER_AUDIT"));
    s.playbook.push_back(say(6, "LEADER", "OPS_01", "impact brief and monitoring plan"));
    s.playbook.push_back(say(7, "SEO_01", "LEADER", "audit trail acknowledged"));
    s.playbook.push_back(consensus_at(8));
    s.playbook.push_back(section(9, "COM_04", "incident_timeline",
                                 {{"events", "02:17 detect, 02:25 triage, 02:40 contain"}}));
    s.playbook.push_back(section(9, "LEADER", "containment_actions",
                                 {{"actions", "segmentation + key rotation"},
                                  {"segments", "HAB_02 data plane"}}));
    s.playbook.push_back(section(9, "DKM_01", "impact_assessment",
                                 {{"systems_affected", "HAB_02 telemetry uplink"},
                                  {"severity", "contained, low"}}));
    s.playbook.push_back(section(9, "OPS_01", "recovery_plan",
                                 {{"steps", "forensic image, staged re-enable"},
                                  {"monitoring", "48 h enhanced flow logging"}}));
    return s;
}

ScenarioScript make_dust_storm_curtail() {
    ScenarioScript s;
    s.id = "DustStormCurtail";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the Dust-Storm Curtailment script. Trigger: WX_STATION forecasts "
        "storm in 18 h; optical depth rising 1.2 to 2.8. Tasks: curtail non-critical loads, "
        "set cleaning & stow policies for SOL_CTRL/UAV_MAP, reserve battery for LSS and "
        "comms, staffing plan. Constraints: limited storage; reduced solar input. "
        "Deliverables: (1) curtailment schedule & priorities; (2) energy budget; (3) crew "
        "plan; (4) restart criteria post-storm.";
    s.leader_order = {"PWR", "OPS"};
    s.participants = {"PWR", "OPS", "DKM", "ENV", "AI"};
    s.assets = {"SOL_CTRL_01", "NUKE_CTRL_01", "WX_STATION_01"};
    s.deliverables = {
        want(1, "curtailment_schedule", {"loads", "priorities"}),
        want(2, "energy_budget", {"battery_reserve_kwh", "solar_derate"}),
        want(3, "crew_plan", {"staffing"}),
        want(4, "restart_criteria", {"criteria"}),
    };
    s.constraints = {rule("DUST_RESERVE", s.id, ConstraintKind::Redline,
                          "battery reserve floor for LSS and comms")};
    s.misread_rule = "DUST_RESERVE";

    s.playbook.push_back(say(0, "WX_STATION_01", "ENV_02", "storm forecast 18 h, optical depth 1.2 to 2.8"));
    s.playbook.push_back(say(1, "ENV_02", "LEADER", "storm alert relay: stow recommended before tau 2.0"));
    s.playbook.push_back(say(2, "LEADER", "OPS_01", "curtailment plan draft, staffing ask attached"));
    s.playbook.push_back(say(3, "PWR_01", "AI_03",
                             "microgrid state estimate against the reserve capacity margin floor", true));
    s.playbook.push_back(say(4, "DKM_01", "OPS_01", "forecast confidence notes from the archive"));
    s.playbook.push_back(command(5, "SOL_CTRL_01", "stow arrays, schedule cleaning post-storm"));
    s.playbook.push_back(command(5, "NUKE_CTRL_01", "baseload uprate for the storm window"));
    s.playbook.push_back(section(6, "LEADER", "curtailment_schedule",
                                 {{"loads", "printing, non-critical lab, greenhouse dimming"},
                                  {"priorities", "LSS, comms, thermal"}}));
    s.playbook.push_back(section(6, "PWR_04", "energy_budget",
                                 {{"battery_reserve_kwh", "64"}, {"solar_derate", "70%"}}));
    s.playbook.push_back(section(6, "OPS_01", "crew_plan", {{"staffing", "two-shift watch, EVA frozen"}}));
    s.playbook.push_back(section(6, "LEADER", "restart_criteria",
                                 {{"criteria", "tau < 1.5 for 6 h, panels cleaned"}}));
    return s;
}

ScenarioScript make_hab_leak_reconfig() {
    ScenarioScript s;
    s.id = "HAB_LeakReconfig";
    s.phase = ScenarioPhase::Emergency;
    s.seed_prompt =
        "You are running the HAB Leak & LSS Reconfiguration script. Trigger: pressure drop "
        "0.2 kPa/min in HAB_01 Ring B. Tasks: localize leak (with ROV_INSP or crew), "
        "isolate segment, reconfigure LSS loops, prep patch. Constraints: preserve "
        "habitable zones; AIRLOCK_CTRL interlocks. Deliverables: (1) isolation plan and "
        "commands; (2) leak-locate procedure; (3) patch & verification steps; (4) dwell "
        "time limits and all-clear criteria.";
    s.leader_order = {"LSS", "OPS", "MNT"};
    s.participants = {"LSS", "OPS", "MNT", "EVA"};
    s.assets = {"HAB_01", "ROV_INSP_01", "AIRLOCK_CTRL_01"};
    s.deliverables = {
        want(1, "isolation_plan", {"segments", "commands"}),
        want(2, "leak_locate", {"method", "assets"}),
        want(3, "patch_plan", {"steps", "verification"}),
        want(4, "all_clear", {"dwell_limit_min", "criteria"}),
    };
    s.constraints = {rule("HAB_INTERLOCK", s.id, ConstraintKind::InterlockBypass,
                          "airlock interlocks must not be bypassed")};
    s.misread_rule = "HAB_INTERLOCK";

    s.playbook.push_back(say(0, "HAB_01", "LSS_05", "cabin dP -0.2 kPa/min in ring B"));
    s.playbook.push_back(say(1, "LSS_05", "LSS_01", "loop isolation sequence needed, sensor map attached"));
    s.playbook.push_back(say(2, "LSS_01", "MNT_01",
                             "leak localization request for ring B, check seal failure modes", true));
    s.playbook.push_back(command(3, "ROV_INSP_01", "IR scan of ring B exterior"));
    s.playbook.push_back(command(3, "HAB_01", "isolate segment B, hold habitable zones"));
    s.playbook.push_back(breach(3, "EVA_01", "HAB_INTERLOCK"));
    s.playbook.push_back(say(4, "MNT_01", "LSS_01", "candidate breach at frame 14, patch kit staged"));
    s.playbook.push_back(section(5, "LEADER", "isolation_plan",
                                 {{"segments", "ring B section 3"},
                                  {"commands", "close V12/V13, spin down fan 2"}}));
    s.playbook.push_back(section(5, "MNT_01", "leak_locate",
                                 {{"method", "IR differential + ultrasonic sweep"},
                                  {"assets", "ROV_INSP_01"}}));
    s.playbook.push_back(section(5, "MNT_04", "patch_plan",
                                 {{"steps", "surface prep, patch, cure 40 min"},
                                  {"verification", "dP hold 0.00 kPa/min for 60 min"}}));
    s.playbook.push_back(section(5, "LEADER", "all_clear",
                                 {{"dwell_limit_min", "90"},
                                  {"criteria", "pressure stable, airlock interlocks intact"}}));
    return s;
}

ScenarioScript make_medical_outbreak_drill() {
    ScenarioScript s;
    s.id = "MedicalOutbreakDrill";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the Medical Outbreak Drill (infectious disease). Trigger: two crew "
        "with fever/cough and one GI case after shared meal. Tasks: triage, isolation, "
        "contact tracing, ward workflow (MED/NUR), PSY crew support, logistics for PPE and "
        "meds. Constraints: avoid clinic overload; maintain critical ops. Deliverables: (1) "
        "case definition and cohorting; (2) ward/PPE plan; (3) treatment & testing "
        "algorithm; (4) clearance & return-to-work rules; (5) comms to base.";
    s.leader_order = {"MED", "OPS", "NUR"};
    s.participants = {"MED", "OPS", "NUR", "PSY", "LOGT"};
    s.assets = {};
    s.deliverables = {
        want(1, "case_definition", {"definition", "cohorts"}),
        want(2, "ward_plan", {"ward_layout", "ppe"}),
        want(3, "treatment_algorithm", {"steps", "tests"}),
        want(4, "clearance_rules", {"criteria"}),
        want(5, "base_comms", {"message", "audience"}),
    };
    s.constraints = {rule("MED_OVERLOAD", s.id, ConstraintKind::Redline, "clinic load ceiling")};
    s.misread_rule = "MED_OVERLOAD";

    s.playbook.push_back(say(0, "MED_02", "MED_01", "atypical presentation x3: two febrile, one GI"));
    s.playbook.push_back(say(1, "MED_01", "NUR_01",
                             "triage escalation order: cohort the febrile cases, run a pharmacy stock margin check", true));
    s.playbook.push_back(section(2, "MED_01", "case_definition",
                                 {{"definition", "fever > 38C or GI onset < 24 h"},
                                  {"cohorts", "respiratory A, GI B"}}));
    s.playbook.push_back(section(2, "NUR_01", "ward_plan",
                                 {{"ward_layout", "bay 1 respiratory, bay 2 GI"},
                                  {"ppe", "droplet + contact sets"}}));
    s.playbook.push_back(section(2, "MED_02", "treatment_algorithm",
                                 {{"steps", "symptomatic care, hydration, isolation"},
                                  {"tests", "PCR panel, stool culture"}}));
    s.playbook.push_back(section(2, "MED_01", "clearance_rules",
                                 {{"criteria", "48 h symptom free + negative test"}}));
    s.playbook.push_back(section(2, "LEADER", "base_comms",
                                 {{"message", "drill status, no ops impact"},
                                  {"audience", "all crew"}}));
    return s;
}

ScenarioScript make_rover_stuck_recovery() {
    ScenarioScript s;
    s.id = "RoverStuckRecovery";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the Rover Stuck Recovery script. Trigger: ROV_SCI reports slip "
        "ratio 0.8 on fine regolith, slope 8 deg, battery 44%. Tasks: assess terrain with "
        "GEO/AI, egress options (backdrive, anchor, traction aids), UAV_MAP overflight if "
        "useful, protect battery SOC. Constraints: avoid wheel trenching; time-boxed "
        "attempts. Deliverables: (1) recovery plan with stepwise commands; (2) abort/assist "
        "criteria; (3) comms windows; (4) post-recovery inspection checklist.";
    s.leader_order = {"OPS", "GEO", "MNT"};
    s.participants = {"OPS", "GEO", "MNT", "AI"};
    s.assets = {"ROV_SCI_01", "ROV_INSP_01"};
    s.deliverables = {
        want(1, "recovery_plan", {"steps", "commands"}),
        want(2, "abort_criteria", {"criteria"}),
        want(3, "comms_windows", {"windows"}),
        want(4, "inspection_checklist", {"checks"}),
    };
    s.constraints = {
        rule("ROV_TRENCH", s.id, ConstraintKind::Redline, "no wheel trenching"),
        rule("ROV_TIMEBOX", s.id, ConstraintKind::Redline, "time-boxed recovery attempts"),
    };
    s.misread_rule = "ROV_TRENCH";

    s.playbook.push_back(say(0, "ROV_SCI_01", "GEO_05", "slip ratio 0.8, slope 8 deg, battery 44%"));
    s.playbook.push_back(say(1, "GEO_05", "GEO_01", "terrain risk assessment for egress options"));
    s.playbook.push_back(say(2, "GEO_01", "AI_02",
                             "terrain hazard appraisal: simulate backdrive vs anchor egress", true));
    s.playbook.push_back(say(3, "GEO_01", "LEADER", "recommendation: backdrive with traction aids"));
    s.playbook.push_back(say(4, "LEADER", "MNT_01", "stage traction aids and the anchor kit"));
    s.playbook.push_back(command(5, "ROV_SCI_01", "halt wheels, conserve SOC"));
    s.playbook.push_back(command(5, "ROV_INSP_01", "move to overlook position"));
    s.playbook.push_back(section(6, "LEADER", "recovery_plan",
                                 {{"steps", "unload cache, mats under wheels, backdrive 0.5 m"},
                                  {"commands", "halt, deploy mats, reverse slow"}}));
    s.playbook.push_back(section(6, "GEO_01", "abort_criteria",
                                 {{"criteria", "slip > 0.9 after two attempts, SOC < 35%"}}));
    s.playbook.push_back(section(6, "LEADER", "comms_windows",
                                 {{"windows", "relay pass T+010, T+090"}}));
    s.playbook.push_back(section(6, "MNT_01", "inspection_checklist",
                                 {{"checks", "wheel hubs, cache latch, undercarriage imaging"}}));
    return s;
}

ScenarioScript make_printer_feedstock_short() {
    ScenarioScript s;
    s.id = "PrinterFeedstockShort";
    s.phase = ScenarioPhase::Other;
    s.seed_prompt =
        "You are running the 3D-Printer Feedstock Short script. Trigger: PRT_CTRL inventory "
        "shows 0.6 kg engineering filament remaining vs. 1.8 kg needed within 48 h for "
        "valve clamps and a manifold ring. Tasks: evaluate substitutes (recycled HDPE, "
        "basalt-fiber regolith composite, sintered regolith) with LOGT/ISRU/LAB; define "
        "print/process settings and qualification tests. Constraints: mechanical/thermal "
        "spec, outgassing limits, contamination control. Deliverables: (1) candidate "
        "ranking with pros/cons; (2) BOM & print parameters; (3) test protocol (strength, "
        "thermal cycle, off-gassing); (4) production schedule with risk/mitigations.";
    s.leader_order = {"LOGT", "ISRU", "OPS"};
    s.participants = {"LOGT", "ISRU", "OPS", "LAB", "MNT", "AI"};
    s.assets = {"PRT_CTRL_01", "ARM_CTRL_01"};
    s.deliverables = {
        want(1, "candidate_ranking", {"candidates", "rationale"}),
        want(2, "print_parameters", {"bom", "settings"}),
        want(3, "test_protocol", {"strength_test", "thermal_test", "offgas_test"}),
        want(4, "production_schedule", {"timeline", "risks"}),
    };
    s.constraints = {rule("PRT_OUTGAS", s.id, ConstraintKind::Redline,
                          "off-gassing limits for printed parts")};
    s.misread_rule = "PRT_OUTGAS";

    s.playbook.push_back(say(0, "PRT_CTRL_01", "LOGT_02",
                             "filament 0.6 kg remaining vs 1.8 kg needed in 48 h"));
    s.playbook.push_back(say(1, "LOGT_02", "LOGT_01", "stocktake done, rationing options listed"));
    s.playbook.push_back(say(2, "LOGT_01", "ISRU_01",
                             "substitute candidates: sintered regolith, basalt fiber composite"));
    s.playbook.push_back(say(3, "ISRU_01", "LAB_01",
                             "process hazard review for off-gassing, regolith hopper batch sample attached", true));
    s.playbook.push_back(say(4, "LAB_01", "AI_03", "materials database query for the spec match"));
    s.playbook.push_back(command(5, "PRT_CTRL_01", "queue recycled HDPE trial coupons"));
    s.playbook.push_back(command(5, "ARM_CTRL_01", "stage material handling for the trial"));
    s.playbook.push_back(section(6, "LOGT_01", "candidate_ranking",
                                 {{"candidates", "1 recycled HDPE, 2 basalt composite, 3 sintered"},
                                  {"rationale", "HDPE meets spec fastest with known settings"}}));
    s.playbook.push_back(section(6, "LOGT_02", "print_parameters",
                                 {{"bom", "HDPE pellets 2.1 kg"},
                                  {"settings", "nozzle 240C, bed 90C, 40% infill"}}));
    s.playbook.push_back(section(6, "LAB_01", "test_protocol",
                                 {{"strength_test", "tensile coupon x3"},
                                  {"thermal_test", "cycle -60..+40C x10"},
                                  {"offgas_test", "GC/MS headspace"}}));
    s.playbook.push_back(section(6, "LEADER", "production_schedule",
                                 {{"timeline", "trial sol 1, parts sol 2"},
                                  {"risks", "coupon failure forces sintered fallback"}}));
    return s;
}

ScenarioScript make_atc_resupply_window() {
    ScenarioScript s;
    s.id = "ATC_ResupplyWindow";
    s.phase = ScenarioPhase::DailyOps;
    s.seed_prompt =
        "You are running the ATC Resupply Window script. Trigger: two vehicles request "
        "overlapping landing slots; EVA drone ops nearby. Tasks: allocate ATC_LZ windows, "
        "COM air-ground timeslots, ground handling flow with LOGT, no-fly zones for "
        "UAV_COM/UAV_MAP. Constraints: safety first; fixed approach corridor; limited "
        "ground crew. Deliverables: (1) slot schedule & right-of-way; (2) comms plan; (3) "
        "ground handling timeline; (4) reserves/abort windows and notification script.";
    s.leader_order = {"ATC", "OPS", "COM"};
    s.participants = {"OPS", "COM", "LOGT", "AI"};
    s.assets = {"ATC_LZ_01", "UAV_COM_01"};
    s.deliverables = {
        want(1, "slot_schedule", {"slots", "right_of_way"}),
        want(2, "comms_plan", {"timeslots"}),
        want(3, "ground_handling", {"timeline", "crew"}),
        want(4, "abort_windows", {"reserves", "notification"}),
    };
    s.constraints = {
        rule("ATC_CORRIDOR", s.id, ConstraintKind::Redline, "fixed approach corridor"),
        rule("ATC_SEO", s.id, ConstraintKind::SeoRejection,
             "safety officer approval for overlapping operations"),
    };
    s.misread_rule = "ATC_CORRIDOR";
    s.consensus_hook = ConsensusHook{
        {"ATC", "OPS", "COM", "LOGT"},
        {{"SEQUENTIAL_SLOTS", "vehicle A then B with 40 min spacing"},
         {"PARALLEL_OFFSET", "parallel approach with lateral offset corridor"}}};

    s.playbook.push_back(say(0, "ATC_LZ_01", "OPS_01",
                             "overlapping landing slot requests, drone ops active nearby"));
    s.playbook.push_back(say(1, "LEADER", "COM_01", "air-ground timeslot plan request"));
    s.playbook.push_back(say(2, "COM_01", "AI_02",
                             "traffic preemption grant optimization for the contact window", true));
    s.playbook.push_back(say(3, "LEADER", "LOGT_01", "ground handling flow with limited crew"));
    s.playbook.push_back(say(4, "LOGT_04", "LEADER", "transport readiness confirmed"));
    s.playbook.push_back(command(5, "ATC_LZ_01", "publish slot schedule and no-fly zones"));
    s.playbook.push_back(command(5, "UAV_COM_01", "standby corridor relay"));
    s.playbook.push_back(say(6, "COM_01", "LEADER", "timeslots confirmed with reserves"));
    s.playbook.push_back(consensus_at(7));
    s.playbook.push_back(section(8, "LEADER", "slot_schedule",
                                 {{"slots", "A at T+030, B at T+070"},
                                  {"right_of_way", "crewed vehicle first"}}));
    s.playbook.push_back(section(8, "COM_01", "comms_plan", {{"timeslots", "air-ground every 5 min"}}));
    s.playbook.push_back(section(8, "LOGT_04", "ground_handling",
                                 {{"timeline", "offload A 25 min, reset pad 15 min"},
                                  {"crew", "3 handlers, 1 spotter"}}));
    s.playbook.push_back(section(8, "LEADER", "abort_windows",
                                 {{"reserves", "slot C at T+110"},
                                  {"notification", "abort call at corridor entry minus 5"}}));
    return s;
}

const std::map<std::string, ScenarioScript>& catalog() {
    static const std::map<std::string, ScenarioScript> scripts = [] {
        std::map<std::string, ScenarioScript> m;
        for (ScenarioScript s : {make_daily_operations(), make_emergency_response(),
                                 make_science_exploration(), make_gh_bio_outbreak(),
                                 make_comms_blackout_eva(), make_isru_off_nominal(),
                                 make_cyber_anomaly(), make_dust_storm_curtail(),
                                 make_hab_leak_reconfig(), make_medical_outbreak_drill(),
                                 make_rover_stuck_recovery(), make_printer_feedstock_short(),
                                 make_atc_resupply_window()})
            m.emplace(s.id, std::move(s));
        return m;
    }();
    return scripts;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, script] : catalog()) v.push_back(id);
        return v;
    }();
    return ids;
}

const ScenarioScript& load_scenario(const std::string& id) {
    const auto& m = catalog();
    auto it = m.find(id);
    if (it == m.end()) throw ScenarioError("unknown scenario: " + id);
    return it->second;
}

std::vector<bool> check_deliverables(const FinalReport& report, const ScenarioScript& scenario) {
    std::vector<bool> flags;
    flags.reserve(scenario.deliverables.size());
    for (const DeliverableSpec& d : scenario.deliverables) {
        const auto* fields = report.find(d.section_tag);
        bool ok = fields != nullptr;
        if (ok)
            for (const std::string& f : d.required_fields) {
                auto it = fields->find(f);
                if (it == fields->end() || it->second.empty()) {
                    ok = false;
                    break;
                }
            }
        flags.push_back(ok);
    }
    return flags;
}

ScenarioScript load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    ScenarioScript s;
    s.id = doc.at("id").get<std::string>();
    const std::string phase = doc.value("phase", "Other");
    if (phase == "DailyOps") s.phase = ScenarioPhase::DailyOps;
    else if (phase == "Emergency") s.phase = ScenarioPhase::Emergency;
    else if (phase == "Science") s.phase = ScenarioPhase::Science;
    else s.phase = ScenarioPhase::Other;
    s.seed_prompt = doc.value("seed_prompt", "");
    s.leader_order = doc.value("leader_order", std::vector<std::string>{});
    s.participants = doc.value("participants", std::vector<std::string>{});
    s.assets = doc.value("assets", std::vector<std::string>{});
    int index = 1;
    for (const auto& j : doc.value("deliverables", nlohmann::json::array()))
        s.deliverables.push_back(want(index++, j.at("section_tag").get<std::string>(),
                                      j.at("required_fields").get<std::vector<std::string>>()));
    for (const auto& j : doc.value("constraints", nlohmann::json::array())) {
        const std::string kind = j.value("kind", "redline");
        ConstraintKind k = kind == "interlock_bypass" ? ConstraintKind::InterlockBypass
                         : kind == "seo_rejection"    ? ConstraintKind::SeoRejection
                                                      : ConstraintKind::Redline;
        s.constraints.push_back(rule(j.at("rule_id").get<std::string>(), s.id, k,
                                     j.value("description", "")));
    }
    s.misread_rule = doc.value("misread_rule",
                               s.constraints.empty() ? "" : s.constraints.front().rule_id);
    if (doc.contains("consensus_hook")) {
        ConsensusHook hook;
        hook.voter_groups = doc["consensus_hook"].at("voter_groups").get<std::vector<std::string>>();
        for (const auto& p : doc["consensus_hook"].at("proposals"))
            hook.proposals.emplace_back(p.at("id").get<std::string>(), p.value("text", ""));
        s.consensus_hook = std::move(hook);
    }
    for (const auto& j : doc.value("playbook", nlohmann::json::array())) {
        const std::string kind = j.at("kind").get<std::string>();
        PlaybookStep step;
        step.tick = j.value("tick", 0);
        step.actor = j.value("actor", "");
        step.target = j.value("target", "");
        step.text = j.value("text", "");
        step.misread_risk = j.value("misread_risk", false);
        step.breach_rule = j.value("breach_rule", "");
        if (j.contains("fields"))
            step.fields = j["fields"].get<std::map<std::string, std::string>>();
        if (kind == "say") step.kind = StepKind::Say;
        else if (kind == "command") step.kind = StepKind::Command;
        else if (kind == "section") step.kind = StepKind::Section;
        else if (kind == "consensus") step.kind = StepKind::Consensus;
        else if (kind == "breach") step.kind = StepKind::Breach;
        else throw ScenarioError("bad playbook step kind: " + kind);
        s.playbook.push_back(std::move(step));
    }
    return s;
}

}  // namespace marsops

// Built-in group dialects over a shared 22-concept operational vocabulary.
// Surface terms are globally distinct so that jargon from any dialect is
// recognizable during translation audits.

#include "marsops/protocols.hpp"

namespace marsops {
namespace {

const char* kConcepts[] = {
    "WATER_BEARING_MINERAL", "ANOMALY",          "TELEMETRY_FEED",    "SAFE_SHUTDOWN",
    "POWER_BUDGET",          "CONTAMINATION_RISK", "ROUTE_PLAN",      "SAMPLE_BATCH",
    "THERMAL_LIMIT",         "COMM_WINDOW",      "CONSUMABLE_MARGIN", "DIAGNOSTIC_SWEEP",
    "PRIORITY_OVERRIDE",     "EQUIPMENT_FAULT",  "ENVIRONMENT_READING", "CREW_ASSIGNMENT",
    "ABORT_CONDITION",       "DATA_PACKAGE",     "MAINTENANCE_ACTION", "RESOURCE_REQUEST",
    "STATUS_REPORT",         "RISK_ASSESSMENT",
};

struct GroupTerms {
    const char* group;
    const char* terms[22];
};

const GroupTerms kGroupTerms[] = {
    {"GEO",
     {"hydrated silicates", "stratigraphic irregularity", "field survey stream",
      "drilling stand-down", "traverse energy allotment", "sample cross-contact hazard",
      "traverse corridor", "core specimen lot", "regolith heat ceiling",
      "relay visibility pass", "cache reserve slack", "outcrop reconnaissance pass",
      "sampling precedence claim", "drill string defect", "in-situ ground reading",
      "field party roster", "traverse turn-back trigger", "survey data bundle",
      "rig servicing pass", "assay material requisition", "traverse log entry",
      "terrain hazard appraisal"}},
    {"AI",
     {"volatile signature", "model divergence event", "perception topic stream",
      "graceful degradation halt", "compute duty envelope", "training-set taint hazard",
      "waypoint solution", "labeled capture set", "inference thermal cap",
      "uplink scheduling slot", "buffer headroom margin", "autonomy health probe",
      "planner preemption flag", "actuator model fault", "sensor fusion estimate",
      "operator binding table", "policy abort guard", "rosbag archive",
      "model refresh pass", "compute quota request", "runtime state digest",
      "failure mode forecast"}},
    {"BIO",
     {"hydrated substrate", "culture deviation", "bioassay readout stream",
      "incubation hold", "bioreactor energy ration", "microbial spread hazard",
      "sampling transect", "culture plate series", "incubator heat bound",
      "specimen exchange window", "media stock margin", "contamination screen",
      "culture triage priority", "bioreactor malfunction", "microbiome census",
      "lab bench rotation", "culture termination rule", "sequencing batch",
      "sterilization cycle", "reagent draw request", "culture log note",
      "pathogen threat profile"}},
    {"LAB",
     {"aqueous-phase specimen", "calibration drift", "instrument readback stream",
      "instrument safing", "analyzer power ration", "custody breach hazard",
      "analysis queue plan", "aliquot tray", "furnace temperature ceiling",
      "results dispatch window", "standards inventory margin", "instrument self-check",
      "rush assay flag", "detector degradation", "bench environment log",
      "analyst duty sheet", "assay stop criterion", "spectra archive",
      "column maintenance cycle", "consumables order", "assay summary sheet",
      "measurement risk profile"}},
    {"COM",
     {"hydrous radar return", "link margin excursion", "downlink packet stream",
      "transmitter quiesce", "RF power allocation", "signal intrusion hazard",
      "relay handover plan", "frame capture batch", "amplifier thermal derate",
      "contact window", "bandwidth reserve margin", "link integrity sweep",
      "traffic preemption grant", "transceiver fault", "spectrum occupancy scan",
      "operator shift ledger", "loss-of-signal drill", "telemetry archive segment",
      "antenna alignment service", "airtime allotment request", "link status brief",
      "outage likelihood estimate"}},
    {"LSS",
     {"bound-water condensate", "scrubber load spike", "cabin sensor bus",
      "loop isolation sequence", "environmental draw cap", "biofilm fouling hazard",
      "duct rerouting scheme", "filter cartridge lot", "heat exchanger limit",
      "purge scheduling slot", "oxygen buffer margin", "atmosphere audit pass",
      "life-critical override", "pump cavitation fault", "cabin air profile",
      "watch rotation plan", "habitability abort line", "environmental trend archive",
      "filter swap cycle", "makeup water request", "cabin status digest",
      "habitability risk index"}},
    {"PWR",
     {"wet feedstock charge", "voltage sag event", "grid telemetry bus",
      "controlled scram", "load dispatch envelope", "arc flash hazard",
      "feeder switching order", "cell string lot", "inverter thermal ceiling",
      "peak shaving slot", "reserve capacity margin", "insulation test sweep",
      "load-shed precedence", "converter fault", "microgrid state estimate",
      "plant duty roster", "undervoltage trip rule", "load profile archive",
      "breaker service pass", "generation uprate request", "bus status summary",
      "outage risk forecast"}},
    {"ISRU",
     {"bound-water regolith", "yield shortfall", "plant instrumentation feed",
      "process train shutdown", "electrolysis power quota", "catalyst fouling hazard",
      "conveyance path layout", "regolith hopper batch", "cell temperature redline",
      "tanker transfer window", "oxygen stockpile margin", "process audit walk",
      "production surge order", "sinter line fault", "ore grade reading",
      "shift crew matrix", "overpressure stop rule", "process history archive",
      "crusher relining pass", "spare electrode request", "throughput bulletin",
      "process hazard review"}},
    {"AGRI",
     {"moisture-laden media", "leaf spotting event", "canopy sensor feed",
      "growth chamber standdown", "lighting energy ration", "spore drift hazard",
      "planting rotation map", "seedling tray lot", "canopy heat tolerance",
      "harvest handoff window", "nutrient stock margin", "crop health scan",
      "harvest priority call", "dosing pump fault", "root zone reading",
      "grower shift chart", "crop cull criterion", "phenotype record set",
      "drip line flush cycle", "substrate resupply request", "greenhouse status note",
      "crop loss projection"}},
    {"MNT",
     {"moisture intrusion deposit", "vibration signature shift", "equipment health feed",
      "lockout-tagout sequence", "tool bay power budget", "abrasive dust hazard",
      "access route clearance", "spare part kit", "bearing temperature cap",
      "service access window", "spares depth margin", "torque audit round",
      "expedited repair ticket", "seal failure", "structural strain reading",
      "technician dispatch board", "stop-work threshold", "work order archive",
      "lubrication round", "fastener stock request", "maintenance shift log",
      "failure likelihood review"}},
    {"MED",
     {"mineral-hydrate exposure", "atypical presentation", "vitals monitor feed",
      "procedure stand-down", "clinic equipment load plan", "nosocomial spread hazard",
      "care pathway", "specimen draw set", "sterilizer temperature bound",
      "teleconsult slot", "pharmacy stock margin", "differential workup",
      "triage escalation order", "monitor probe fault", "patient vitals trend",
      "ward duty roster", "treatment stop criterion", "case file bundle",
      "instrument reprocessing cycle", "medication resupply order", "rounds summary",
      "prognosis risk profile"}},
    {"NUR",
     {"hydrate exposure note", "irregular observation", "bedside monitor relay",
      "care hold order", "ward power allotment", "cross-infection hazard",
      "cohorting layout", "swab collection kit", "autoclave heat ceiling",
      "handover briefing slot", "PPE reserve margin", "observation sweep",
      "acuity escalation flag", "infusion pump fault", "patient observation chart",
      "shift assignment grid", "care withdrawal threshold", "nursing notes packet",
      "linen decontamination cycle", "supplies requisition", "ward status tally",
      "patient safety audit"}},
};

}  // namespace

const LexiconSet& default_lexicons() {
    static const LexiconSet set = [] {
        std::vector<Lexicon> lexicons;
        for (const GroupTerms& gt : kGroupTerms) {
            Lexicon lex;
            lex.group = gt.group;
            for (std::size_t i = 0; i < 22; ++i) lex.term_for_concept[kConcepts[i]] = gt.terms[i];
            lexicons.push_back(std::move(lex));
        }
        return LexiconSet(std::move(lexicons));
    }();
    return set;
}

}  // namespace marsops

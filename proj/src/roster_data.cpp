// Compiled-in base organization: 71 human role agents and 22 asset
// controllers with their ownership records. Single source of truth for the
// default roster; replaceable at runtime via load_roster_override().

#include "marsops/roster.hpp"

namespace marsops {
namespace {

struct HumanRow {
    const char* id;
    Layer layer;
    const char* group;
    const char* title;
};

const HumanRow kHumans[] = {
    // Strategy & Governance
    {"CMD_01", Layer::StrategyGovernance, "CMD", "Commander"},
    {"EARTH_01", Layer::StrategyGovernance, "EARTH", "Earth Liaison Officer (Advisory/Resource Interface)"},
    {"OPS_01", Layer::StrategyGovernance, "OPS", "Operations Director"},
    {"SEO_01", Layer::StrategyGovernance, "SEO", "Safety & Ethics Officer (Independent Audit Line)"},

    // Mission Operations
    {"COM_01", Layer::MissionOperations, "COM", "RF & Link Budget Engineer"},
    {"COM_02", Layer::MissionOperations, "COM", "Network & Edge Computing Engineer"},
    {"COM_03", Layer::MissionOperations, "COM", "Navigation / Visual Odometry Engineer"},
    {"COM_04", Layer::MissionOperations, "COM", "Cybersecurity / Zero-Trust Engineer"},
    {"COM_05", Layer::MissionOperations, "COM", "Scheduling Interface Engineer (AI-Integrated)"},
    {"COM_06", Layer::MissionOperations, "COM", "Translator / Dialect Normalizer"},
    {"EVA_01", Layer::MissionOperations, "EVA", "EVA Lead / Safety Officer"},
    {"EVA_02", Layer::MissionOperations, "EVA", "Spacesuit Systems Engineer"},
    {"EVA_03", Layer::MissionOperations, "EVA", "UAV/UGV Operator"},
    {"EVA_04", Layer::MissionOperations, "EVA", "Rapid Mechanical Repair Technician"},
    {"EVA_05", Layer::MissionOperations, "EVA", "Geological Sampling Lead"},
    {"LOGT_01", Layer::MissionOperations, "LOGT", "Inventory & Rationing Lead"},
    {"LOGT_02", Layer::MissionOperations, "LOGT", "AM/3D Printing Technician (Spares)"},
    {"LOGT_03", Layer::MissionOperations, "LOGT", "Waste & Recycling Engineer"},
    {"LOGT_04", Layer::MissionOperations, "LOGT", "Transport & Handling Coordinator"},
    {"LOGT_05", Layer::MissionOperations, "LOGT", "Procurement & Resupply Planner"},

    // Civics & Wellbeing
    {"MED_01", Layer::CivicsWellbeing, "MED", "Emergency/Trauma Surgeon"},
    {"MED_02", Layer::CivicsWellbeing, "MED", "Internal Medicine & Infection Control Physician"},
    {"MED_03", Layer::CivicsWellbeing, "MED", "Space Physiology & Rehabilitation Physician"},
    {"MED_04", Layer::CivicsWellbeing, "MED", "Telemedicine & Ultrasound Physician"},
    {"MED_05", Layer::CivicsWellbeing, "MED", "Pharmacology & Biobanking Physician"},
    {"NUR_01", Layer::CivicsWellbeing, "NUR", "ICU Nursing"},
    {"NUR_02", Layer::CivicsWellbeing, "NUR", "Surgical Instruments / Sterile Processing"},
    {"NUR_03", Layer::CivicsWellbeing, "NUR", "EVA Field Nursing"},
    {"NUR_04", Layer::CivicsWellbeing, "NUR", "Mental Health Nursing"},
    {"NUR_05", Layer::CivicsWellbeing, "NUR", "Nutrition & Food Safety"},
    {"PSY_01", Layer::CivicsWellbeing, "PSY", "Psychology/Morale Officer (Conflict Mediation)"},

    // Infrastructure & ISRU
    {"AGRI_01", Layer::InfrastructureISRU, "AGRI", "Greenhouse O&M (Light Recipes)"},
    {"AGRI_02", Layer::InfrastructureISRU, "AGRI", "Hydroponics & Aeroponics Specialist"},
    {"AGRI_03", Layer::InfrastructureISRU, "AGRI", "Plant Pathology / Microbiome Specialist"},
    {"AGRI_04", Layer::InfrastructureISRU, "AGRI", "Nutrition & Formulation Specialist"},
    {"AGRI_05", Layer::InfrastructureISRU, "AGRI", "Algae/Protein Bioreactor Specialist"},
    {"ISRU_01", Layer::InfrastructureISRU, "ISRU", "Excavation & Conveyance Engineer"},
    {"ISRU_02", Layer::InfrastructureISRU, "ISRU", "Sintering/Brick & Structural Materials Engineer"},
    {"ISRU_03", Layer::InfrastructureISRU, "ISRU", "Smelting / Oxygen Electrolysis Engineer"},
    {"ISRU_04", Layer::InfrastructureISRU, "ISRU", "Propellant (Methane/Oxygen) Synthesis Engineer"},
    {"ISRU_05", Layer::InfrastructureISRU, "ISRU", "Quality Inspection & Assay Engineer"},
    {"LSS_01", Layer::InfrastructureISRU, "LSS", "Atmosphere & Filtration Engineer"},
    {"LSS_02", Layer::InfrastructureISRU, "LSS", "Water Recycling & Purification Engineer"},
    {"LSS_03", Layer::InfrastructureISRU, "LSS", "Thermal Control & Dust Mitigation Engineer"},
    {"LSS_04", Layer::InfrastructureISRU, "LSS", "Bioregenerative / Algal Bioreactor Engineer"},
    {"LSS_05", Layer::InfrastructureISRU, "LSS", "Monitoring & Automation (PLC/SCADA)"},
    {"MNT_01", Layer::InfrastructureISRU, "MNT", "Mechanical Maintenance Technician"},
    {"MNT_02", Layer::InfrastructureISRU, "MNT", "Electrical Maintenance Technician"},
    {"MNT_03", Layer::InfrastructureISRU, "MNT", "Controls/Software Maintenance Technician"},
    {"MNT_04", Layer::InfrastructureISRU, "MNT", "Structural/Sealing Maintenance Technician"},
    {"MNT_05", Layer::InfrastructureISRU, "MNT", "Spares/Tooling Administrator"},
    {"PWR_01", Layer::InfrastructureISRU, "PWR", "Solar Farm O&M Engineer"},
    {"PWR_02", Layer::InfrastructureISRU, "PWR", "Reactor/RTG O&M Engineer"},
    {"PWR_03", Layer::InfrastructureISRU, "PWR", "Microgrid & Power Flow Dispatch Engineer"},
    {"PWR_04", Layer::InfrastructureISRU, "PWR", "Energy Storage Systems Engineer"},
    {"PWR_05", Layer::InfrastructureISRU, "PWR", "Power Electronics / Inverter Engineer"},

    // Science & Exploration
    {"BIO_01", Layer::ScienceExploration, "BIO", "Microbiologist / Contamination Control"},
    {"BIO_02", Layer::ScienceExploration, "BIO", "Ecosystem Modeling & Monitoring"},
    {"ENV_01", Layer::ScienceExploration, "ENV", "Environmental Sensing / Air & Water Quality"},
    {"ENV_02", Layer::ScienceExploration, "ENV", "Radiation Monitoring & Protection"},
    {"GEO_01", Layer::ScienceExploration, "GEO", "Sedimentology & Stratigraphy Geologist"},
    {"GEO_02", Layer::ScienceExploration, "GEO", "Mineralogist & Petrologist"},
    {"GEO_03", Layer::ScienceExploration, "GEO", "Geochemist (Volatiles/Hydrated Minerals)"},
    {"GEO_04", Layer::ScienceExploration, "GEO", "Geophysicist (GPR/Magnetics/Seismics)"},
    {"GEO_05", Layer::ScienceExploration, "GEO", "Astrobiologist / Biosignatures"},
    {"LAB_01", Layer::ScienceExploration, "LAB", "Laboratory Manager (Sample Chain)"},

    // Data/AI & Digital Twin
    {"AI_02", Layer::DataAIDigitalTwin, "AI", "Robotic Autonomy / Multi-Agent Swarm Engineer"},
    {"AI_03", Layer::DataAIDigitalTwin, "AI", "Digital Twin / Co-Simulation Engineer (Energy-Water-Thermal-Air)"},
    {"AI_04", Layer::DataAIDigitalTwin, "AI", "Vision/Mapping/SLAM Engineer"},
    {"AI_05", Layer::DataAIDigitalTwin, "AI", "Visualization & Mission Replay Engineer"},
    {"DKM_01", Layer::DataAIDigitalTwin, "DKM", "Data Platform / Governance Lead"},
};

struct AssetRow {
    const char* id;
    const char* group;
    const char* title;
    const char* primary;
    const char* backup;
    AlarmLevel alarm;
    const char* function;
};

const AssetRow kAssets[] = {
    {"HAB_01", "HAB", "Habitat Controller (Air/Water Circulation)", "LSS_05", "LSS_01", AlarmLevel::A,
     "Air/water circulation; cabin pressure; alarms"},
    {"HAB_02", "HAB", "Habitat Controller (Cabin Pressure)", "LSS_05", "LSS_02", AlarmLevel::A,
     "Air/water circulation; cabin pressure; alarms"},
    {"HAB_03", "HAB", "Habitat Controller (Alarms)", "LSS_05", "LSS_03", AlarmLevel::A,
     "Air/water circulation; cabin pressure; alarms"},
    {"AIRLOCK_CTRL_01", "AIRLOCK", "Airlock Controller", "EVA_01", "MNT_04", AlarmLevel::A,
     "Interlocks; depress/repress; contamination control"},
    {"SUIT_CTRL_01", "SUIT", "Spacesuit Controller", "EVA_02", "NUR_03", AlarmLevel::A,
     "PLSS telemetry; consumables/time remaining; leak alarms"},
    {"ROV_SCI_01", "ROV_SCI", "Science Sampling Rover", "GEO_05", "EVA_05", AlarmLevel::B,
     "Drilling; sampling cache; imaging"},
    {"ROV_CARGO_01", "ROV_CARGO", "Cargo Rover", "LOGT_04", "MNT_01", AlarmLevel::B,
     "Payload transport; follow navigation"},
    {"ROV_INSP_01", "ROV_INSP", "Inspection Rover", "MNT_03", "MNT_02", AlarmLevel::B,
     "Structural inspection; IR imaging"},
    {"UAV_MAP_01", "UAV_MAP", "Mapping UAV", "COM_03", "AI_04", AlarmLevel::C,
     "Aerial mapping; photogrammetry"},
    {"UAV_COM_01", "UAV_COM", "Communications Relay UAV", "COM_02", "COM_01", AlarmLevel::B,
     "Relay; ad-hoc network"},
    {"ISRU_PLANT_01", "ISRU_PLANT", "ISRU Plant Controller", "ISRU_03", "ISRU_04", AlarmLevel::A,
     "Mining; electrolysis; methane synthesis"},
    {"SOL_CTRL_01", "SOL_CTRL", "Solar Farm Controller", "PWR_01", "PWR_05", AlarmLevel::B,
     "Sun tracking; panel cleaning; inverter control"},
    {"NUKE_CTRL_01", "NUKE_CTRL", "Reactor Controller", "PWR_02", "PWR_03", AlarmLevel::A,
     "Power dispatch; safe shutdown (SCRAM)"},
    {"GH_CTRL_01", "GH_CTRL", "Greenhouse Zone Controller (Lighting, Irrigation)", "AGRI_01", "AGRI_02",
     AlarmLevel::B, "Lighting; irrigation; nutrient dosing"},
    {"GH_CTRL_02", "GH_CTRL", "Greenhouse Zone Controller (Nutrient Solution)", "AGRI_03", "AGRI_04",
     AlarmLevel::B, "Lighting; irrigation; nutrient dosing"},
    {"PRT_CTRL_01", "PRT_CTRL", "3D Printer Controller", "LOGT_02", "MNT_03", AlarmLevel::C,
     "Additive manufacturing queue; material/nozzle change"},
    {"ARM_CTRL_01", "ARM_CTRL", "Robotic Manipulator", "MNT_01", "MNT_02", AlarmLevel::B,
     "Assembly; maintenance; material handling"},
    {"WX_STATION_01", "WX", "Weather Station", "ENV_02", "COM_01", AlarmLevel::B,
     "Storm alerts; dust concentration; irradiance"},
    {"ATC_LZ_01", "ATC", "Landing Zone Air/Traffic Control", "OPS_01", "COM_05", AlarmLevel::B,
     "Landing-zone traffic control; windows; no-fly zones"},
    {"LAB_INSTR_01", "LAB_INSTR", "Laboratory Instrument Suite", "LAB_01", "MED_05", AlarmLevel::C,
     "GC/MS; XRF; cold-chain management"},
    {"NET_SEC_CTRL_01", "NETSEC", "Network Security Controller", "COM_04", "DKM_01", AlarmLevel::A,
     "Whitelisting; segmentation; key rotation"},
    {"COMSAT_CTRL_01", "COMSAT", "Relay/Orbital Communications Controller", "COM_01", "COM_02",
     AlarmLevel::A, "Bandwidth allocation; link switching"},
};

}  // namespace

Roster build_default_roster() {
    std::vector<AgentSpec> agents;
    agents.reserve(93);
    for (const auto& h : kHumans) {
        agents.push_back({h.id, AgentKind::Human, h.layer, h.group, h.title});
    }
    std::vector<OwnershipRecord> ownership;
    ownership.reserve(22);
    for (const auto& a : kAssets) {
        agents.push_back({a.id, AgentKind::Asset, Layer::Assets, a.group, a.title});
        ownership.push_back({a.id, a.primary, {a.backup}, a.alarm, a.function});
    }
    return Roster(std::move(agents), std::move(ownership));
}

}  // namespace marsops

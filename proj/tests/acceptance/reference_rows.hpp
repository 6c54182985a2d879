#pragma once

// Published reference aggregates: per-configuration means of (time, msgs,
// failures, role switches) together with the composite score each row
// printed. Used to check compute_ampi arithmetic against its source tables.

namespace marsops::reference {

struct Row {
    const char* table;     // source table tag
    const char* scenario;
    double time;
    double msgs;
    double failures;
    double rolesw;
    double printed_ampi;
};

// clang-format off
inline constexpr Row kRows[] = {
    // Core routing x leadership grid (T8): 13 scenarios x 4 configurations.
    {"T8", "DailyOperations",       232.40, 43.0, 0.06, 1.20, 0.50},
    {"T8", "DailyOperations",       220.10, 43.0, 0.05, 1.10, 0.51},
    {"T8", "DailyOperations",       204.30, 42.0, 0.05, 1.00, 0.51},
    {"T8", "DailyOperations",       191.90, 42.0, 0.05, 0.90, 0.52},
    {"T8", "EmergencyResponse",     296.20, 33.0, 0.10, 0.60, 0.52},
    {"T8", "EmergencyResponse",     294.80, 33.0, 0.10, 0.60, 0.52},
    {"T8", "EmergencyResponse",     293.70, 33.0, 0.10, 0.60, 0.52},
    {"T8", "EmergencyResponse",     292.90, 33.0, 0.10, 0.60, 0.52},
    {"T8", "ScienceExploration",     61.20,  7.0, 0.01, 0.10, 0.67},
    {"T8", "ScienceExploration",     56.00,  7.0, 0.01, 0.10, 0.68},
    {"T8", "ScienceExploration",     31.40,  5.0, 0.01, 0.10, 0.74},
    {"T8", "ScienceExploration",     29.80,  5.0, 0.01, 0.10, 0.74},
    {"T8", "GH_BioOutbreak",         54.10, 14.0, 0.02, 0.20, 0.66},
    {"T8", "GH_BioOutbreak",         52.60, 14.0, 0.02, 0.20, 0.66},
    {"T8", "GH_BioOutbreak",         49.10, 14.0, 0.02, 0.20, 0.67},
    {"T8", "GH_BioOutbreak",         50.40, 14.0, 0.02, 0.20, 0.66},
    {"T8", "CommsBlackoutEVA",       58.30, 12.0, 0.01, 0.10, 0.66},
    {"T8", "CommsBlackoutEVA",       52.90, 12.0, 0.01, 0.10, 0.67},
    {"T8", "CommsBlackoutEVA",       45.20, 11.0, 0.01, 0.10, 0.68},
    {"T8", "CommsBlackoutEVA",       41.80, 11.0, 0.01, 0.10, 0.69},
    {"T8", "ISRU_OffNominal",        28.10,  4.0, 0.01, 0.10, 0.75},
    {"T8", "ISRU_OffNominal",        27.40,  4.0, 0.01, 0.10, 0.75},
    {"T8", "ISRU_OffNominal",        29.30,  4.0, 0.01, 0.10, 0.74},
    {"T8", "ISRU_OffNominal",        27.10,  4.0, 0.01, 0.10, 0.75},
    {"T8", "CyberAnomaly",           37.90, 11.0, 0.01, 0.20, 0.70},
    {"T8", "CyberAnomaly",           34.10, 11.0, 0.01, 0.20, 0.71},
    {"T8", "CyberAnomaly",           35.80, 11.0, 0.01, 0.20, 0.70},
    {"T8", "CyberAnomaly",           31.70, 11.0, 0.01, 0.20, 0.71},
    {"T8", "DustStormCurtail",       47.40,  7.0, 0.05, 0.40, 0.68},
    {"T8", "DustStormCurtail",       45.90,  7.0, 0.05, 0.40, 0.68},
    {"T8", "DustStormCurtail",       46.60,  7.0, 0.05, 0.40, 0.68},
    {"T8", "DustStormCurtail",       50.80,  7.0, 0.05, 0.40, 0.67},
    {"T8", "HAB_LeakReconfig",       28.70,  4.0, 0.01, 0.20, 0.74},
    {"T8", "HAB_LeakReconfig",       26.80,  4.0, 0.01, 0.20, 0.75},
    {"T8", "HAB_LeakReconfig",       26.40,  4.0, 0.01, 0.20, 0.75},
    {"T8", "HAB_LeakReconfig",       25.60,  4.0, 0.01, 0.20, 0.75},
    {"T8", "MedicalOutbreakDrill",   23.10,  3.0, 0.01, 0.01, 0.77},
    {"T8", "MedicalOutbreakDrill",   27.90,  3.0, 0.01, 0.01, 0.76},
    {"T8", "MedicalOutbreakDrill",   26.90,  3.0, 0.01, 0.01, 0.76},
    {"T8", "MedicalOutbreakDrill",   24.90,  3.0, 0.01, 0.01, 0.77},
    {"T8", "RoverStuckRecovery",     49.00,  7.0, 0.01, 0.20, 0.69},
    {"T8", "RoverStuckRecovery",     46.20,  7.0, 0.01, 0.20, 0.69},
    {"T8", "RoverStuckRecovery",     47.10,  7.0, 0.01, 0.20, 0.69},
    {"T8", "RoverStuckRecovery",     44.00,  7.0, 0.01, 0.20, 0.70},
    {"T8", "PrinterFeedstockShort",  49.80,  7.0, 0.01, 0.40, 0.68},
    {"T8", "PrinterFeedstockShort",  50.40,  7.0, 0.01, 0.40, 0.68},
    {"T8", "PrinterFeedstockShort",  50.90,  7.0, 0.01, 0.40, 0.68},
    {"T8", "PrinterFeedstockShort",  49.30,  7.0, 0.01, 0.40, 0.68},
    {"T8", "ATC_ResupplyWindow",     33.80, 10.0, 0.01, 0.05, 0.71},
    {"T8", "ATC_ResupplyWindow",     33.40, 10.0, 0.01, 0.05, 0.71},
    {"T8", "ATC_ResupplyWindow",     34.90, 10.0, 0.01, 0.05, 0.71},
    {"T8", "ATC_ResupplyWindow",     32.90, 10.0, 0.01, 0.05, 0.71},

    // Role-switching ablation (T9): on/off per scenario.
    {"T9", "DailyOperations",       188.30, 43.0, 0.12, 0.90, 0.52},
    {"T9", "DailyOperations",       224.80, 42.0, 0.50, 0.00, 0.50},
    {"T9", "EmergencyResponse",     298.60, 34.0, 0.25, 0.55, 0.51},
    {"T9", "EmergencyResponse",     338.10, 33.0, 0.70, 0.00, 0.49},
    {"T9", "ScienceExploration",     34.10,  5.0, 0.05, 0.20, 0.74},
    {"T9", "ScienceExploration",     36.00,  5.0, 0.10, 0.00, 0.73},
    {"T9", "GH_BioOutbreak",         49.10, 14.0, 0.08, 0.25, 0.69},
    {"T9", "GH_BioOutbreak",         54.40, 14.0, 0.20, 0.00, 0.68},
    {"T9", "CommsBlackoutEVA",       44.80, 11.0, 0.05, 0.20, 0.70},
    {"T9", "CommsBlackoutEVA",       47.50, 11.0, 0.10, 0.00, 0.69},
    {"T9", "ISRU_OffNominal",        27.00,  4.0, 0.05, 0.20, 0.76},
    {"T9", "ISRU_OffNominal",        28.80,  4.0, 0.08, 0.00, 0.75},
    {"T9", "CyberAnomaly",           34.30, 11.0, 0.06, 0.20, 0.71},
    {"T9", "CyberAnomaly",           36.50, 11.0, 0.10, 0.00, 0.70},
    {"T9", "DustStormCurtail",       46.10,  7.0, 0.12, 0.15, 0.69},
    {"T9", "DustStormCurtail",       49.50,  7.0, 0.25, 0.00, 0.67},
    {"T9", "HAB_LeakReconfig",       22.40,  4.0, 0.03, 0.20, 0.75},
    {"T9", "HAB_LeakReconfig",       23.90,  4.0, 0.05, 0.00, 0.75},
    {"T9", "MedicalOutbreakDrill",   22.60,  3.0, 0.02, 0.10, 0.77},
    {"T9", "MedicalOutbreakDrill",   23.40,  3.0, 0.03, 0.00, 0.76},
    {"T9", "RoverStuckRecovery",     40.20,  8.0, 0.07, 0.50, 0.71},
    {"T9", "RoverStuckRecovery",     45.80,  7.0, 0.20, 0.00, 0.69},
    {"T9", "PrinterFeedstockShort",  47.20,  7.0, 0.06, 0.25, 0.69},
    {"T9", "PrinterFeedstockShort",  50.20,  7.0, 0.12, 0.00, 0.68},
    {"T9", "ATC_ResupplyWindow",     39.60, 10.0, 0.06, 0.15, 0.71},
    {"T9", "ATC_ResupplyWindow",     41.80, 10.0, 0.10, 0.00, 0.70},

    // Consensus ablation (T11): off/on for six scenarios.
    {"T11", "DailyOperations",      191.90, 42.0, 0.05, 0.90, 0.54},
    {"T11", "DailyOperations",      184.00, 48.0, 0.30, 1.20, 0.50},
    {"T11", "EmergencyResponse",    292.90, 33.0, 0.10, 0.60, 0.52},
    {"T11", "EmergencyResponse",    307.00, 35.0, 0.01, 0.20, 0.54},
    {"T11", "ScienceExploration",    29.80,  5.0, 0.01, 0.10, 0.75},
    {"T11", "ScienceExploration",    35.10,  9.0, 0.20, 0.10, 0.71},
    {"T11", "GH_BioOutbreak",        50.40, 14.0, 0.02, 0.20, 0.66},
    {"T11", "GH_BioOutbreak",        58.80, 18.0, 0.01, 0.10, 0.66},
    {"T11", "CommsBlackoutEVA",      41.80, 11.0, 0.01, 0.10, 0.69},
    {"T11", "CommsBlackoutEVA",      46.40, 15.0, 0.01, 0.20, 0.68},
    {"T11", "ATC_ResupplyWindow",    32.90, 10.0, 0.01, 0.05, 0.71},
    {"T11", "ATC_ResupplyWindow",    32.10, 14.0, 0.01, 0.20, 0.71},

    // Translator-protocol ablation (T12): off/hetero per scenario.
    {"T12", "DailyOperations",      191.90, 42.0, 0.05, 0.90, 0.54},
    {"T12", "DailyOperations",      214.60, 44.0, 0.01, 0.80, 0.52},
    {"T12", "EmergencyResponse",    292.90, 33.0, 0.10, 0.60, 0.52},
    {"T12", "EmergencyResponse",    289.20, 34.0, 0.01, 0.20, 0.54},
    {"T12", "ScienceExploration",    29.80,  5.0, 0.01, 0.10, 0.75},
    {"T12", "ScienceExploration",    33.80,  6.0, 0.01, 0.40, 0.72},
    {"T12", "GH_BioOutbreak",        50.40, 14.0, 0.02, 0.20, 0.66},
    {"T12", "GH_BioOutbreak",        55.10, 15.0, 0.01, 0.20, 0.66},
    {"T12", "CommsBlackoutEVA",      41.80, 11.0, 0.01, 0.10, 0.69},
    {"T12", "CommsBlackoutEVA",      45.20, 13.0, 0.01, 0.20, 0.69},
    {"T12", "ISRU_OffNominal",       27.10,  4.0, 0.01, 0.10, 0.75},
    {"T12", "ISRU_OffNominal",       28.40,  5.0, 0.01, 0.20, 0.75},
    {"T12", "CyberAnomaly",          31.70, 11.0, 0.01, 0.20, 0.71},
    {"T12", "CyberAnomaly",          35.90, 13.0, 0.01, 0.20, 0.70},
    {"T12", "DustStormCurtail",      50.80,  7.0, 0.05, 0.40, 0.67},
    {"T12", "DustStormCurtail",      56.40,  8.0, 0.01, 0.20, 0.68},
    {"T12", "HAB_LeakReconfig",      25.60,  4.0, 0.01, 0.20, 0.75},
    {"T12", "HAB_LeakReconfig",      29.10,  5.0, 0.01, 0.20, 0.75},
    {"T12", "MedicalOutbreakDrill",  24.90,  3.0, 0.01, 0.01, 0.77},
    {"T12", "MedicalOutbreakDrill",  27.80,  4.0, 0.01, 0.10, 0.76},
    {"T12", "RoverStuckRecovery",    44.00,  7.0, 0.01, 0.20, 0.70},
    {"T12", "RoverStuckRecovery",    44.90,  9.0, 0.01, 0.20, 0.70},
    {"T12", "PrinterFeedstockShort", 49.30,  7.0, 0.01, 0.40, 0.68},
    {"T12", "PrinterFeedstockShort", 48.30,  8.0, 0.01, 0.60, 0.68},
    {"T12", "ATC_ResupplyWindow",    32.90, 10.0, 0.01, 0.05, 0.71},
    {"T12", "ATC_ResupplyWindow",    38.80, 12.0, 0.01, 0.20, 0.70},
};
// clang-format on

inline constexpr int kRowCount = static_cast<int>(sizeof(kRows) / sizeof(kRows[0]));

}  // namespace marsops::reference

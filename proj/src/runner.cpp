#include "marsops/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace marsops {

const std::vector<std::string>& factor_names() {
    static const std::vector<std::string> names = {"routing",  "leadership", "role_switching",
                                                   "memory",   "consensus",  "protocols"};
    return names;
}

std::vector<std::string> factor_levels(const std::string& factor) {
    if (factor == "routing") return {"strict", "crosslayer"};
    if (factor == "leadership") return {"single", "functional"};
    if (factor == "role_switching") return {"on", "off"};
    if (factor == "memory") return {"off", "basic", "shared"};
    if (factor == "consensus") return {"off", "on"};
    if (factor == "protocols") return {"off", "hetero"};
    throw RunnerError("unknown factor: " + factor);
}

RunConfig apply_factor_level(RunConfig cfg, const std::string& factor, const std::string& level) {
    if (factor == "routing") cfg.routing = routing_policy_from_string(level);
    else if (factor == "leadership") cfg.leadership = leadership_mode_from_string(level);
    else if (factor == "role_switching") {
        if (level != "on" && level != "off") throw RunnerError("bad switching level: " + level);
        cfg.role_switching = level == "on";
    } else if (factor == "memory") cfg.memory = memory_mode_from_string(level);
    else if (factor == "consensus") {
        if (level != "on" && level != "off") throw RunnerError("bad consensus level: " + level);
        cfg.consensus.enabled = level == "on";
    } else if (factor == "protocols") cfg.protocols = protocol_mode_from_string(level);
    else throw RunnerError("unknown factor: " + factor);
    return cfg;
}

namespace {

std::string level_of(const RunConfig& cfg, const std::string& factor) {
    if (factor == "routing") return to_string(cfg.routing);
    if (factor == "leadership") return to_string(cfg.leadership);
    if (factor == "role_switching") return cfg.role_switching ? "on" : "off";
    if (factor == "memory") return to_string(cfg.memory);
    if (factor == "consensus") return cfg.consensus.enabled ? "on" : "off";
    if (factor == "protocols") return to_string(cfg.protocols);
    throw RunnerError("unknown factor: " + factor);
}

AggregateRow aggregate(const RunConfig& cfg, const std::vector<RunResult>& runs) {
    AggregateRow row;
    row.scenario = cfg.scenario;
    row.routing = to_string(cfg.routing);
    row.leadership = to_string(cfg.leadership);
    row.switching = cfg.role_switching ? "on" : "off";
    row.memory = to_string(cfg.memory);
    row.consensus = cfg.consensus.enabled ? "on" : "off";
    row.protocols = to_string(cfg.protocols);
    const double n = static_cast<double>(runs.size());
    for (const RunResult& r : runs) {
        row.time += r.metrics.time_steps / n;
        row.msgs += r.metrics.msgs / n;
        row.failures += r.metrics.failures / n;
        row.n_asset += static_cast<double>(r.breakdown.n_asset) / n;
        row.n_viol += static_cast<double>(r.breakdown.n_viol) / n;
        row.n_miss += static_cast<double>(r.breakdown.n_miss) / n;
        row.crosslayer += r.metrics.cross_ratio / n;
        row.rolesw += r.metrics.switches / n;
        row.ampi += compute_ampi(r.metrics, cfg.ampi) / n;
    }
    return row;
}

void write_run_artifacts(const std::string& out_dir, const std::string& run_id,
                         const RunResult& result) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(out_dir) / "runs");
    {
        std::ofstream log(fs::path(out_dir) / "runs" / (run_id + ".log"));
        if (!log) throw RunnerError("cannot write run log for " + run_id);
        log << result.log.to_jsonl();
    }
    std::ofstream rep(fs::path(out_dir) / "runs" / (run_id + ".report.txt"));
    if (!rep) throw RunnerError("cannot write run report for " + run_id);
    rep << render_report(result.report);
}

}  // namespace

std::vector<AggregateRow> run_batch(const SweepSpec& spec, const Roster& roster,
                                    const EngineHooks& hooks) {
    if (spec.repetitions < 1) throw RunnerError("repetitions must be >= 1");

    std::vector<RunConfig> level_configs;
    if (spec.factor.empty()) {
        level_configs.push_back(spec.base);
    } else {
        const auto known = factor_levels(spec.factor);
        for (const std::string& level : spec.levels) {
            if (std::find(known.begin(), known.end(), level) == known.end())
                throw RunnerError("bad level '" + level + "' for factor " + spec.factor);
            level_configs.push_back(apply_factor_level(spec.base, spec.factor, level));
        }
        if (level_configs.empty()) throw RunnerError("sweep with no levels");
    }

    const int n_levels = static_cast<int>(level_configs.size());
    const int n_runs = spec.repetitions;
    std::vector<RunResult> results(static_cast<std::size_t>(n_levels) * n_runs);
    std::vector<std::string> errors(results.size());

    // Immutable per-roster structures are shared across all runs.
    const HierarchyGraph shared_graph = build_hierarchy(roster);
    EngineHooks run_hooks = hooks;
    if (!run_hooks.hierarchy) run_hooks.hierarchy = &shared_graph;

    // Runs are independent: levels reuse the seed list seed_base + i so
    // comparisons stay paired, and results land by index so output order
    // never depends on scheduling.
    const int total = n_levels * n_runs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(spec.jobs > 1 ? spec.jobs : 1) \
    if (spec.jobs > 1)
#endif
    for (int flat = 0; flat < total; ++flat) {
        const int level = flat / n_runs;
        const int run = flat % n_runs;
        RunConfig cfg = level_configs[level];
        cfg.seed = spec.seed_base + static_cast<std::uint64_t>(run);
        try {
            results[flat] = run_scenario(cfg, roster, run_hooks);
        } catch (const std::exception& e) {
            errors[flat] = e.what();
        }
    }

    std::vector<AggregateRow> rows;
    for (int level = 0; level < n_levels; ++level) {
        std::vector<RunResult> runs;
        std::string failure;
        for (int run = 0; run < n_runs; ++run) {
            const std::size_t flat = static_cast<std::size_t>(level) * n_runs + run;
            if (!errors[flat].empty()) {
                failure = errors[flat];
                break;
            }
            runs.push_back(results[flat]);
        }
        if (!failure.empty()) {
            // A failed run aborts its level; completed levels still emit.
            std::fprintf(stderr, "level %s failed: %s\n",
                         spec.factor.empty()
                             ? "base"
                             : (spec.factor + "=" + level_of(level_configs[level], spec.factor))
                                   .c_str(),
                         failure.c_str());
            continue;
        }
        if (!spec.out_dir.empty()) {
            for (int run = 0; run < n_runs; ++run) {
                const RunResult& r = runs[static_cast<std::size_t>(run)];
                std::string run_id = r.config.scenario;
                if (!spec.factor.empty())
                    run_id += "_" + spec.factor + "-" + level_of(r.config, spec.factor);
                char idx[16];
                std::snprintf(idx, sizeof(idx), "_r%03d", run);
                write_run_artifacts(spec.out_dir, run_id + idx, r);
            }
        }
        rows.push_back(aggregate(level_configs[level], runs));
    }

    if (!spec.out_dir.empty() && !rows.empty())
        export_csv_file(rows, (std::filesystem::path(spec.out_dir) / "summary.csv").string());
    return rows;
}

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

}  // namespace

void export_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
    if (rows.empty()) throw RunnerError("export_csv: no rows");
    out << "scenario,routing,leadership,switching,memory,consensus,protocols,"
           "time,msgs,failures,n_asset,n_viol,n_miss,crosslayer,rolesw,ampi\n";
    for (const AggregateRow& r : rows) {
        out << r.scenario << ',' << r.routing << ',' << r.leadership << ',' << r.switching << ','
            << r.memory << ',' << r.consensus << ',' << r.protocols << ',' << fixed2(r.time)
            << ',' << fixed2(r.msgs) << ',' << fixed2(r.failures) << ',' << fixed2(r.n_asset)
            << ',' << fixed2(r.n_viol) << ',' << fixed2(r.n_miss) << ',' << fixed2(r.crosslayer)
            << ',' << fixed2(r.rolesw) << ',' << fixed2(r.ampi) << '\n';
    }
}

std::string csv_string(const std::vector<AggregateRow>& rows) {
    std::ostringstream out;
    export_csv(rows, out);
    return out.str();
}

void export_csv_file(const std::vector<AggregateRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw RunnerError("cannot write CSV: " + path);
    export_csv(rows, out);
}

std::vector<AggregateRow> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw RunnerError("parse_csv: empty input");
    std::vector<AggregateRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<std::string> cells;
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 16) throw RunnerError("parse_csv: bad row: " + line);
        AggregateRow r;
        r.scenario = cells[0];
        r.routing = cells[1];
        r.leadership = cells[2];
        r.switching = cells[3];
        r.memory = cells[4];
        r.consensus = cells[5];
        r.protocols = cells[6];
        r.time = std::stod(cells[7]);
        r.msgs = std::stod(cells[8]);
        r.failures = std::stod(cells[9]);
        r.n_asset = std::stod(cells[10]);
        r.n_viol = std::stod(cells[11]);
        r.n_miss = std::stod(cells[12]);
        r.crosslayer = std::stod(cells[13]);
        r.rolesw = std::stod(cells[14]);
        r.ampi = std::stod(cells[15]);
        rows.push_back(std::move(r));
    }
    return rows;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw RunnerError("cannot open config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    RunConfig cfg = base;
    if (doc.contains("scenario")) cfg.scenario = doc["scenario"].get<std::string>();
    if (doc.contains("routing")) cfg.routing = routing_policy_from_string(doc["routing"]);
    if (doc.contains("leadership"))
        cfg.leadership = leadership_mode_from_string(doc["leadership"]);
    if (doc.contains("role_switching")) cfg.role_switching = doc["role_switching"] == "on";
    if (doc.contains("memory")) cfg.memory = memory_mode_from_string(doc["memory"]);
    if (doc.contains("consensus")) cfg.consensus.enabled = doc["consensus"] == "on";
    if (doc.contains("consensus_rounds")) cfg.consensus.rounds = doc["consensus_rounds"].get<int>();
    if (doc.contains("consensus_quorum"))
        cfg.consensus.quorum = doc["consensus_quorum"].get<double>();
    if (doc.contains("protocols")) cfg.protocols = protocol_mode_from_string(doc["protocols"]);
    if (doc.contains("outage_rate")) cfg.outage_rate = doc["outage_rate"].get<double>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("fault_injection")) cfg.fault_injection = doc["fault_injection"].get<bool>();
    if (doc.contains("memory_window")) cfg.memory_window = doc["memory_window"].get<std::size_t>();
    if (doc.contains("memory_budget")) cfg.memory_budget = doc["memory_budget"].get<std::size_t>();
    if (doc.contains("ampi_include_crosslayer"))
        cfg.ampi.include_crosslayer = doc["ampi_include_crosslayer"].get<bool>();
    if (doc.contains("ampi_weights")) {
        auto w = doc["ampi_weights"].get<std::vector<double>>();
        if (w.size() != 5) throw RunnerError("ampi_weights needs 5 entries");
        cfg.ampi.w_time = w[0];
        cfg.ampi.w_msgs = w[1];
        cfg.ampi.w_cross = w[2];
        cfg.ampi.w_fail = w[3];
        cfg.ampi.w_switch = w[4];
    }
    if (doc.contains("ampi_constants")) {
        auto k = doc["ampi_constants"].get<std::vector<double>>();
        if (k.size() != 4) throw RunnerError("ampi_constants needs 4 entries");
        cfg.ampi.k_time = k[0];
        cfg.ampi.k_msgs = k[1];
        cfg.ampi.k_fail = k[2];
        cfg.ampi.k_switch = k[3];
    }
    return cfg;
}

}  // namespace marsops

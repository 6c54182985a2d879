#include "marsops/memory.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace marsops {

std::string to_string(MemoryMode m) {
    switch (m) {
        case MemoryMode::Off: return "off";
        case MemoryMode::Basic: return "basic";
        case MemoryMode::Shared: return "shared";
    }
    return "?";
}

MemoryMode memory_mode_from_string(const std::string& s) {
    if (s == "off") return MemoryMode::Off;
    if (s == "basic") return MemoryMode::Basic;
    if (s == "shared") return MemoryMode::Shared;
    throw std::invalid_argument("bad memory mode: " + s);
}

void append_turn(MemoryState& state, MemoryMode mode, const TurnRecord& turn) {
    if (mode == MemoryMode::Off) return;

    auto& window = state.short_term[turn.speaker];
    window.push_back(turn);
    while (window.size() > state.window_k) window.pop_front();

    std::size_t n = ++state.appended[turn.speaker];
    if (state.window_k > 0 && n % state.window_k == 0) {
        std::vector<TurnRecord> turns(window.begin(), window.end());
        state.long_term[turn.speaker].push_back(distill(turns, state.summary_budget));
    }
    if (mode == MemoryMode::Shared) state.shared_pool.push_back(turn);
}

std::vector<std::string> build_context(const MemoryState& state, MemoryMode mode,
                                       const AgentId& agent, int /*tick*/) {
    std::vector<std::string> ctx;
    if (mode == MemoryMode::Off) return ctx;

    if (auto it = state.short_term.find(agent); it != state.short_term.end())
        for (const TurnRecord& t : it->second)
            ctx.push_back("t" + std::to_string(t.tick) + " " + t.speaker + ": " + t.text);
    if (auto it = state.long_term.find(agent); it != state.long_term.end())
        for (const std::string& s : it->second) ctx.push_back(s);
    if (mode == MemoryMode::Shared)
        for (const TurnRecord& t : state.shared_pool)
            ctx.push_back("pool t" + std::to_string(t.tick) + " " + t.speaker + ": " + t.text);
    return ctx;
}

std::string distill(std::span<const TurnRecord> turns, std::size_t budget) {
    if (turns.empty()) throw std::invalid_argument("distill: empty input");

    std::set<AgentId> speakers;
    for (const TurnRecord& t : turns) speakers.insert(t.speaker);

    std::string out = "[" + turns.front().scenario + "]";
    for (const AgentId& s : speakers) out += " " + s;
    out += " |";
    for (const TurnRecord& t : turns) {
        auto cut = t.text.find_first_of(".;");
        out += " " + (cut == std::string::npos ? t.text : t.text.substr(0, cut));
    }
    if (out.size() > budget) out.resize(budget);
    return out;
}

void dump_memory_snapshot(const MemoryState& state, const std::string& path) {
    nlohmann::json doc;
    doc["window_k"] = state.window_k;
    doc["summary_budget"] = state.summary_budget;
    auto turn_json = [](const TurnRecord& t) {
        return nlohmann::json{{"tick", t.tick}, {"speaker", t.speaker},
                              {"text", t.text}, {"scenario", t.scenario}};
    };
    for (const auto& [agent, window] : state.short_term) {
        auto& arr = doc["short_term"][agent];
        for (const TurnRecord& t : window) arr.push_back(turn_json(t));
    }
    for (const auto& [agent, summaries] : state.long_term) doc["long_term"][agent] = summaries;
    for (const TurnRecord& t : state.shared_pool) doc["shared_pool"].push_back(turn_json(t));

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write memory snapshot: " + path);
    out << doc.dump(2) << "\n";
}

}  // namespace marsops

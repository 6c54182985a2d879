#pragma once

#include <deque>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "marsops/roster.hpp"

namespace marsops {

enum class MemoryMode { Off, Basic, Shared };

std::string to_string(MemoryMode m);
MemoryMode memory_mode_from_string(const std::string& s);

struct TurnRecord {
    int tick = 0;
    AgentId speaker;
    std::string text;
    std::string scenario;
};

// Per-agent short-term window (capacity k) plus distilled long-term
// summaries, with an optional shared pool visible to everyone.
struct MemoryState {
    std::size_t window_k = 8;
    std::size_t summary_budget = 512;
    std::map<AgentId, std::deque<TurnRecord>> short_term;
    std::map<AgentId, std::vector<std::string>> long_term;
    std::map<AgentId, std::size_t> appended;  // total turns appended per agent
    std::vector<TurnRecord> shared_pool;
};

// Off: no-op. Basic: push onto the speaker's window (FIFO eviction beyond k)
// and distill the window into the long store every k appended turns.
// Shared: Basic behaviour plus append to the shared pool.
void append_turn(MemoryState& state, MemoryMode mode, const TurnRecord& turn);

// Retrieval context: short window, then long summaries, then the shared pool
// (Shared mode only). Off yields an empty sequence.
std::vector<std::string> build_context(const MemoryState& state, MemoryMode mode,
                                       const AgentId& agent, int tick);

// Deterministic extractive summary: scenario id, speaker set, first clause
// of each turn, truncated to the character budget. Throws on empty input.
std::string distill(std::span<const TurnRecord> turns, std::size_t budget = 512);

// Debug dump of the full memory state as JSON.
void dump_memory_snapshot(const MemoryState& state, const std::string& path);

}  // namespace marsops

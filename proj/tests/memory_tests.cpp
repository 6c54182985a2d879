#include <cstdio>

#include "doctest.h"
#include "marsops/memory.hpp"
#include "marsops/rng.hpp"

using namespace marsops;

namespace {

TurnRecord turn(int tick, const char* speaker, std::string text) {
    return TurnRecord{tick, speaker, std::move(text), "DailyOperations"};
}

}  // namespace

TEST_CASE("off mode never touches any buffer") {
    MemoryState st;
    append_turn(st, MemoryMode::Off, turn(0, "GEO_01", "first"));
    CHECK(st.short_term.empty());
    CHECK(st.long_term.empty());
    CHECK(st.shared_pool.empty());
    CHECK(build_context(st, MemoryMode::Off, "GEO_01", 1).empty());
}

TEST_CASE("short window evicts FIFO beyond k") {
    MemoryState st;
    st.window_k = 4;
    for (int i = 1; i <= 5; ++i)
        append_turn(st, MemoryMode::Basic, turn(i, "GEO_01", "turn " + std::to_string(i)));
    const auto& window = st.short_term["GEO_01"];
    REQUIRE(window.size() == 4);
    CHECK(window.front().text == "turn 2");
    CHECK(window.back().text == "turn 5");
}

TEST_CASE("shared mode also appends to the shared pool") {
    MemoryState st;
    append_turn(st, MemoryMode::Shared, turn(0, "GEO_01", "hello"));
    CHECK(st.shared_pool.size() == 1);
    append_turn(st, MemoryMode::Basic, turn(1, "GEO_01", "again"));
    CHECK(st.shared_pool.size() == 1);
}

TEST_CASE("context order is short window, then summaries, then shared pool") {
    MemoryState st;
    st.window_k = 8;
    st.long_term["GEO_01"].push_back("[DailyOperations] GEO_01 | summary");
    append_turn(st, MemoryMode::Basic, turn(0, "GEO_01", "one"));
    append_turn(st, MemoryMode::Basic, turn(1, "GEO_01", "two"));

    auto ctx = build_context(st, MemoryMode::Basic, "GEO_01", 2);
    REQUIRE(ctx.size() == 3);
    CHECK(ctx[0].find("one") != std::string::npos);
    CHECK(ctx[1].find("two") != std::string::npos);
    CHECK(ctx[2].find("summary") != std::string::npos);

    append_turn(st, MemoryMode::Shared, turn(2, "AI_02", "pooled"));
    auto shared_ctx = build_context(st, MemoryMode::Shared, "GEO_01", 3);
    REQUIRE(shared_ctx.size() == 4);
    CHECK(shared_ctx.back().find("pooled") != std::string::npos);
}

TEST_CASE("distillation happens every k turns and summarizes the window") {
    MemoryState st;
    st.window_k = 3;
    for (int i = 0; i < 6; ++i)
        append_turn(st, MemoryMode::Basic, turn(i, "LSS_05", "reading " + std::to_string(i)));
    REQUIRE(st.long_term["LSS_05"].size() == 2);
    CHECK(st.long_term["LSS_05"][0].find("LSS_05") != std::string::npos);
}

TEST_CASE("distill is deterministic and respects the budget") {
    std::vector<TurnRecord> turns = {turn(0, "GEO_01", "long survey note; with a clause"),
                                     turn(1, "AI_02", "waypoint ack. second sentence")};
    CHECK(distill(turns) == distill(turns));
    CHECK(distill(turns).find("GEO_01") != std::string::npos);
    CHECK(distill(turns).find("AI_02") != std::string::npos);
    // first clause only
    CHECK(distill(turns).find("with a clause") == std::string::npos);

    std::vector<TurnRecord> empty;
    CHECK_THROWS_AS(distill(empty), std::invalid_argument);
}

TEST_CASE("property: window bound and budget hold for random append sequences") {
    Substream rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        MemoryState st;
        st.window_k = 1 + rng.next_below(6);
        st.summary_budget = 64 + rng.next_below(512);
        const char* speakers[] = {"GEO_01", "AI_02", "LSS_05"};
        int appends = 1 + static_cast<int>(rng.next_below(40));
        for (int i = 0; i < appends; ++i) {
            std::string text(1 + rng.next_below(120), 'x');
            append_turn(st, MemoryMode::Shared, turn(i, speakers[rng.next_below(3)], text));
        }
        for (const auto& [agent, window] : st.short_term) CHECK(window.size() <= st.window_k);
        for (const auto& [agent, summaries] : st.long_term)
            for (const auto& s : summaries) CHECK(s.size() <= st.summary_budget);
    }
}

TEST_CASE("basic mode keeps agents isolated from each other") {
    MemoryState st;
    append_turn(st, MemoryMode::Basic, turn(0, "GEO_01", "geo secret"));
    append_turn(st, MemoryMode::Basic, turn(1, "AI_02", "ai note"));
    for (const std::string& entry : build_context(st, MemoryMode::Basic, "AI_02", 2))
        CHECK(entry.find("geo secret") == std::string::npos);
}

TEST_CASE("memory snapshot dump writes a JSON file") {
    MemoryState st;
    append_turn(st, MemoryMode::Shared, turn(0, "GEO_01", "to disk"));
    const std::string path = "memory_snapshot_test.json";
    dump_memory_snapshot(st, path);
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::fclose(f);
    std::remove(path.c_str());
}

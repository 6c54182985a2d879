#include <cmath>

#include "doctest.h"
#include "marsops/consensus.hpp"
#include "marsops/rng.hpp"

using namespace marsops;

namespace {

std::vector<Proposal> proposals(int n) {
    std::vector<Proposal> out;
    for (int i = 0; i < n; ++i)
        out.push_back({"P" + std::to_string(i), "OPS_01", "option " + std::to_string(i)});
    return out;
}

std::vector<AgentId> voters(int n) {
    std::vector<AgentId> out;
    for (int i = 0; i < n; ++i) out.push_back("V_" + std::to_string(i));
    return out;
}

// Forces an exact tally by assigning voters round-robin over a vote pattern.
VoteModel forced_votes(const std::vector<AgentId>& vs, const std::vector<int>& picks) {
    VoteModel m;
    for (std::size_t i = 0; i < vs.size(); ++i)
        m.forced[vs[i]] = "P" + std::to_string(picks[i]);
    return m;
}

}  // namespace

TEST_CASE("uniform split over two proposals: full entropy, zero margin") {
    auto vs = voters(4);
    RoundTally t = run_round(proposals(2), vs, 1, forced_votes(vs, {0, 0, 1, 1}));
    CHECK(t.entropy == doctest::Approx(1.0));
    CHECK(t.margin == doctest::Approx(0.0));
}

TEST_CASE("unanimity: entropy collapses, margin is 1") {
    auto vs = voters(5);
    RoundTally t = run_round(proposals(2), vs, 1, forced_votes(vs, {0, 0, 0, 0, 0}));
    CHECK(t.entropy >= 0.0);
    CHECK(t.entropy <= 1e-10);
    CHECK(t.margin == doctest::Approx(1.0));
}

TEST_CASE("hand-computed tally (0.5, 0.25, 0.25, 0) gives entropy 0.75, margin 0.25") {
    auto vs = voters(4);
    RoundTally t = run_round(proposals(4), vs, 1, forced_votes(vs, {0, 0, 1, 2}));
    CHECK(t.entropy == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(t.margin == doctest::Approx(0.25));
}

TEST_CASE("single proposal: entropy defined as 0, margin is the lone share") {
    auto vs = voters(3);
    RoundTally t = run_round(proposals(1), vs, 1, VoteModel{});
    CHECK(t.entropy == 0.0);
    CHECK(t.margin == doctest::Approx(1.0));
}

TEST_CASE("empty proposals or voters are rejected") {
    CHECK_THROWS_AS(run_round({}, voters(2), 1, VoteModel{}), std::invalid_argument);
    CHECK_THROWS_AS(run_round(proposals(2), {}, 1, VoteModel{}), std::invalid_argument);
}

TEST_CASE("quorum boundary is inclusive: 3 of 5 meets 0.6") {
    ConsensusConfig cfg{true, 2, 0.6};
    auto vs = voters(5);
    auto outcome = run_consensus(cfg, proposals(2), vs, forced_votes(vs, {0, 0, 0, 1, 1}));
    CHECK(outcome.decided_round == 1);
    REQUIRE(outcome.winner.has_value());
    CHECK(outcome.winner->id == "P0");
}

TEST_CASE("a stuck 2-2-1 split never reaches quorum: undecided after R rounds") {
    ConsensusConfig cfg{true, 2, 0.6};
    auto vs = voters(5);
    auto outcome = run_consensus(cfg, proposals(3), vs, forced_votes(vs, {0, 0, 1, 1, 2}));
    CHECK(outcome.decided_round == 3);  // rounds + 1
    CHECK_FALSE(outcome.winner.has_value());
    REQUIRE(outcome.tallies.size() == 2);
    CHECK(outcome.tallies[0].shares == outcome.tallies[1].shares);
}

TEST_CASE("unanimous voters decide in round one even at quorum 1.0") {
    ConsensusConfig cfg{true, 2, 1.0};
    auto vs = voters(4);
    auto outcome = run_consensus(cfg, proposals(2), vs, forced_votes(vs, {1, 1, 1, 1}));
    CHECK(outcome.decided_round == 1);
    CHECK(outcome.winner->id == "P1");
}

TEST_CASE("ties break by proposal id order") {
    ConsensusConfig cfg{true, 1, 0.5};
    auto vs = voters(4);
    auto outcome = run_consensus(cfg, proposals(2), vs, forced_votes(vs, {1, 1, 0, 0}));
    CHECK(outcome.winner->id == "P0");
}

TEST_CASE("hash voting is deterministic in the key and stable across rounds") {
    auto ps = proposals(3);
    auto vs = voters(7);
    RoundTally a = run_round(ps, vs, 1, VoteModel{123, {}});
    RoundTally b = run_round(ps, vs, 2, VoteModel{123, {}});
    CHECK(a.shares == b.shares);
    RoundTally c = run_round(ps, vs, 1, VoteModel{124, {}});
    double sum = 0.0;
    for (const auto& [id, s] : c.shares) sum += s;
    CHECK(sum == doctest::Approx(1.0));  // scripted voters never abstain
}

TEST_CASE("property: raising the quorum never lowers the decided round") {
    Substream rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto ps = proposals(2 + static_cast<int>(rng.next_below(3)));
        auto vs = voters(3 + static_cast<int>(rng.next_below(6)));
        VoteModel model{rng.next_u64(), {}};
        int prev_round = 0;
        for (double theta : {0.3, 0.5, 0.7, 0.9, 1.0}) {
            ConsensusConfig cfg{true, 3, theta};
            auto outcome = run_consensus(cfg, ps, vs, model);
            CHECK(outcome.decided_round >= prev_round);
            prev_round = outcome.decided_round;
        }
    }
}

TEST_CASE("checklist score: satisfied fraction minus violation penalty") {
    CHECK(checklist_score({true, true, true, false}, 2, 0.0) == doctest::Approx(0.75));
    CHECK(checklist_score({true, true, true, true}, 0, 0.7) == doctest::Approx(1.0));
    CHECK(checklist_score({true, true, true, true}, 1, 0.1) == doctest::Approx(0.9));
    CHECK_THROWS_AS(checklist_score({}, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(checklist_score({true}, 0, -0.5), std::invalid_argument);
}

TEST_CASE("disabled consensus config is rejected") {
    ConsensusConfig cfg;  // enabled = false
    CHECK_THROWS_AS(run_consensus(cfg, proposals(2), voters(3), VoteModel{}),
                    std::invalid_argument);
}

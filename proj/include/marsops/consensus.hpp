#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "marsops/roster.hpp"

namespace marsops {

struct ConsensusConfig {
    bool enabled = false;
    int rounds = 2;
    double quorum = 0.6;
};

struct Proposal {
    std::string id;       // unique within a session; ties break by id order
    AgentId proposer;
    std::string text;
};

struct RoundTally {
    int round = 0;
    std::map<std::string, double> shares;  // proposal id -> vote share
    double entropy = 0.0;                  // normalized vote entropy, in [0,1]
    double margin = 0.0;                   // top share minus second share
};

struct ConsensusOutcome {
    std::optional<Proposal> winner;        // empty iff quorum never reached
    int decided_round = 0;                 // rounds + 1 when undecided
    std::vector<RoundTally> tallies;
};

// Deterministic vote model: each voter ranks proposals by a keyed hash of
// (voter id, proposal id, key), so tallies are reproducible per seed and
// identical across rounds. Playbooks can force individual votes to stage
// contested sessions.
struct VoteModel {
    std::uint64_t key = 0;
    std::map<AgentId, std::string> forced;  // voter -> proposal id
};

// One round: every voter casts exactly one vote; shares are |votes|/n.
// Throws std::invalid_argument on empty proposals or voters.
RoundTally run_round(const std::vector<Proposal>& proposals, const std::vector<AgentId>& voters,
                     int round, const VoteModel& model);

// Rounds run until the top share reaches the quorum or rounds expire; an
// undecided session reports decided_round = rounds + 1 and no winner.
ConsensusOutcome run_consensus(const ConsensusConfig& cfg, const std::vector<Proposal>& proposals,
                               const std::vector<AgentId>& voters, const VoteModel& model);

// Checklist score Q = satisfied/J - lambda * n_violations.
double checklist_score(const std::vector<bool>& deliverable_flags, std::size_t n_viol,
                       double lambda = 0.0);

}  // namespace marsops

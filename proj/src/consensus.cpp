#include "marsops/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "marsops/rng.hpp"

namespace marsops {

namespace {

constexpr double kEntropyEps = 1e-12;

std::string pick_vote(const AgentId& voter, const std::vector<Proposal>& proposals,
                      const VoteModel& model) {
    if (auto it = model.forced.find(voter); it != model.forced.end()) return it->second;
    std::string best;
    std::uint64_t best_score = 0;
    for (const Proposal& p : proposals) {
        std::uint64_t h = fnv1a64(p.id, fnv1a64(voter) ^ model.key);
        // Highest hash wins; id order breaks exact collisions.
        if (best.empty() || h > best_score || (h == best_score && p.id < best)) {
            best = p.id;
            best_score = h;
        }
    }
    return best;
}

}  // namespace

RoundTally run_round(const std::vector<Proposal>& proposals, const std::vector<AgentId>& voters,
                     int round, const VoteModel& model) {
    if (proposals.empty()) throw std::invalid_argument("consensus round without proposals");
    if (voters.empty()) throw std::invalid_argument("consensus round without voters");
    {
        std::set<std::string> ids;
        for (const Proposal& p : proposals)
            if (!ids.insert(p.id).second)
                throw std::invalid_argument("duplicate proposal id: " + p.id);
    }

    RoundTally tally;
    tally.round = round;
    for (const Proposal& p : proposals) tally.shares[p.id] = 0.0;
    const double n = static_cast<double>(voters.size());
    for (const AgentId& voter : voters) tally.shares[pick_vote(voter, proposals, model)] += 1.0 / n;

    std::vector<double> shares;
    shares.reserve(tally.shares.size());
    for (const auto& [id, s] : tally.shares) shares.push_back(s);
    std::sort(shares.begin(), shares.end(), std::greater<>());

    if (proposals.size() == 1) {
        // 1/log|P| is singular for a single proposal; a one-option session
        // carries no divergence and its margin is the lone share.
        tally.entropy = 0.0;
        tally.margin = shares[0];
        return tally;
    }

    double h = 0.0;
    for (double s : shares) h -= s * std::log(s + kEntropyEps);
    h /= std::log(static_cast<double>(proposals.size()));
    tally.entropy = std::clamp(h, 0.0, 1.0);
    tally.margin = shares[0] - shares[1];
    return tally;
}

ConsensusOutcome run_consensus(const ConsensusConfig& cfg, const std::vector<Proposal>& proposals,
                               const std::vector<AgentId>& voters, const VoteModel& model) {
    if (!cfg.enabled) throw std::invalid_argument("consensus disabled");
    if (cfg.rounds < 1) throw std::invalid_argument("consensus rounds must be >= 1");
    if (cfg.quorum <= 0.0 || cfg.quorum > 1.0)
        throw std::invalid_argument("quorum outside (0,1]");

    ConsensusOutcome out;
    out.decided_round = cfg.rounds + 1;
    for (int r = 1; r <= cfg.rounds; ++r) {
        RoundTally tally = run_round(proposals, voters, r, model);
        out.tallies.push_back(tally);

        std::string top;
        double top_share = -1.0;
        for (const auto& [id, s] : tally.shares) {
            if (s > top_share) {
                top_share = s;
                top = id;
            }
        }
        if (top_share >= cfg.quorum) {
            out.decided_round = r;
            for (const Proposal& p : proposals)
                if (p.id == top) out.winner = p;
            break;
        }
    }
    return out;
}

double checklist_score(const std::vector<bool>& deliverable_flags, std::size_t n_viol,
                       double lambda) {
    if (deliverable_flags.empty()) throw std::invalid_argument("checklist without deliverables");
    if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
    double satisfied = 0.0;
    for (bool f : deliverable_flags) satisfied += f ? 1.0 : 0.0;
    return satisfied / static_cast<double>(deliverable_flags.size()) -
           lambda * static_cast<double>(n_viol);
}

}  // namespace marsops

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pbrs {

/// One buffered environment step: the transition, the environment reward and
/// the potential computed at the step it was taken.
struct TransitionRecord {
    int state;
    int action;
    double reward;
    double phi_s;
    int next_state;
    bool is_terminal;
};

/// Ordered records of one episode plus the plain sum of environment rewards.
struct EpisodeTrace {
    std::vector<TransitionRecord> records;
    double episode_reward = 0.0;
    std::uint64_t episode_index = 0;
};

/**
Discounted return of a reward sequence: sum of gamma^k * rewards[k], summed
front to back. The first reward is undiscounted.
*/
inline double discounted_return(std::span<const double> rewards, double gamma) {
    if (!(gamma >= 0.0) || !(gamma < 1.0))
        throw std::domain_error("discounted_return: gamma must lie in [0, 1)");
    double total = 0.0;
    double weight = 1.0;
    for (double r : rewards) {
        if (!std::isfinite(r)) throw std::domain_error("discounted_return: non-finite reward");
        total += weight * r;
        weight *= gamma;
    }
    return total;
}

}  // namespace pbrs

#pragma once

#include <cstdint>
#include <vector>

#include "pbrs/core/tabular_mdp.hpp"

namespace pbrs {

/// Exact solution of a finite MDP: optimal state values (0 at terminals),
/// optimal action values, and the greedy policy with lowest-index ties.
struct ExactSolution {
    std::vector<double> values;
    std::vector<double> q_values;  // indexed s * n_actions + a
    std::vector<int> greedy_policy;
    std::uint64_t iterations = 0;
    double residual = 0.0;

    double q(int state, int action, int n_actions) const {
        return q_values[static_cast<std::size_t>(state) * static_cast<std::size_t>(n_actions) +
                        static_cast<std::size_t>(action)];
    }
};

/**
Synchronous Bellman-optimality iteration until the sup-norm residual drops to
`tolerance`. Terminal states are pinned at value 0. Throws std::runtime_error
with the final residual when max_iterations is exhausted first.
*/
ExactSolution value_iteration(const TabularMdp& mdp, double tolerance = 1e-10,
                              std::uint64_t max_iterations = 1000000);

/// Undiscounted episode reward of the solution's greedy policy rolled out
/// from the start state, capped at max_steps.
double greedy_rollout_reward(const TabularMdp& mdp, const ExactSolution& solution,
                             std::uint64_t max_steps);

}  // namespace pbrs

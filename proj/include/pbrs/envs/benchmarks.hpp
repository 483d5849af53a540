#pragma once

#include <string>
#include <vector>

#include "pbrs/envs/grid_spec.hpp"

namespace pbrs {

/**
A frozen benchmark environment. The episode reward of any policy lies in
[min_possible, max_possible]; optimal_episode_reward is the undiscounted
episode reward of the exact-solver greedy policy and is verified against
value iteration by the test suite.
*/
struct Benchmark {
    std::string name;
    GridSpec spec;
    std::string description;
    double min_possible;
    double max_possible;
    double optimal_episode_reward;
};

/**
The frozen benchmark suite:

  sparse-goal       9x9, one terminal +1 goal, 81 states. Exactly one nonzero
                    reward per successful episode; with its generous step cap
                    every episode scores 1, so online episode-reward bounds
                    stay degenerate and shaping reduces to the unshaped
                    learner on it.
  pellet-collector  7x7, 6 pellets, 2 hazards, terminal +5 goal, 3136 states.
                    Episode rewards vary widely across policies, which keeps
                    the online bounds non-degenerate.
  corridor-risk     1x12 corridor with 2 unavoidable hazards and a terminal
                    +5 goal, 12 states.
*/
const std::vector<Benchmark>& standard_benchmarks();

/// Benchmark lookup; throws std::invalid_argument for unknown names.
const Benchmark& benchmark_by_name(const std::string& name);

}  // namespace pbrs

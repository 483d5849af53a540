#include "pbrs/envs/benchmarks.hpp"

#include <stdexcept>

namespace pbrs {

namespace {

const char* kSparseGoalMap =
    "step_reward=0\n"
    "max_steps=10000\n"
    "goal_reward=1\n"
    "gamma=0.95\n"
    "\n"
    "S........\n"
    ".........\n"
    ".........\n"
    ".........\n"
    ".........\n"
    ".........\n"
    ".........\n"
    ".........\n"
    "........G\n";

const char* kPelletCollectorMap =
    "step_reward=0\n"
    "max_steps=300\n"
    "goal_reward=5\n"
    "gamma=0.9\n"
    "\n"
    "......G\n"
    ".....o.\n"
    "...x.o.\n"
    "...oo..\n"
    ".o.....\n"
    ".o.x...\n"
    "S......\n";

const char* kCorridorRiskMap =
    "step_reward=0\n"
    "max_steps=100\n"
    "goal_reward=5\n"
    "gamma=0.9\n"
    "\n"
    "S...x...x..G\n";

std::vector<Benchmark> build_benchmarks() {
    std::vector<Benchmark> list;
    list.push_back({"sparse-goal", parse_grid(kSparseGoalMap),
                    "9x9 open grid, single terminal goal worth +1 (81 states)",
                    /*min_possible=*/0.0, /*max_possible=*/1.0,
                    /*optimal_episode_reward=*/1.0});
    list.push_back({"pellet-collector", parse_grid(kPelletCollectorMap),
                    "7x7 grid, 6 pellets (+1 each), 2 hazards (-1 per entry), "
                    "terminal goal worth +5 (3136 states)",
                    /*min_possible=*/-300.0, /*max_possible=*/11.0,
                    /*optimal_episode_reward=*/11.0});
    list.push_back({"corridor-risk", parse_grid(kCorridorRiskMap),
                    "1x12 corridor, 2 unavoidable hazards, terminal goal worth +5 (12 states)",
                    /*min_possible=*/-100.0, /*max_possible=*/3.0,
                    /*optimal_episode_reward=*/3.0});
    return list;
}

}  // namespace

const std::vector<Benchmark>& standard_benchmarks() {
    static const std::vector<Benchmark> benchmarks = build_benchmarks();
    return benchmarks;
}

const Benchmark& benchmark_by_name(const std::string& name) {
    for (const Benchmark& b : standard_benchmarks()) {
        if (b.name == name) return b;
    }
    throw std::invalid_argument("benchmark: unknown environment '" + name + "'");
}

}  // namespace pbrs

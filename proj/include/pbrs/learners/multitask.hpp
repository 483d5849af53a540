#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbrs/envs/task_suite.hpp"
#include "pbrs/learners/q_learning.hpp"

namespace pbrs {

/**
Simultaneous training over a task suite. Tasks share nothing but the
scheduling loop: each owns its Q-table, its shaping statistics, its own
derived random stream and its own epsilon schedule position. Replaying one
task's episodes alone with the same derived stream therefore reproduces that
task's Q-table and shaping state exactly.

Stream derivation from config.seed: the scheduler draws from
derive_seed(seed, 0), task k draws from derive_seed(seed, k + 1); these keys
are part of the reproducibility contract.
*/
struct MultiTaskResult {
    struct TaskResult {
        std::string id;
        TrainingResult training;  // rewards in per-task episode order
    };
    std::vector<TaskResult> per_task;
    /// Per global episode: (task index, environment episode reward).
    std::vector<std::pair<std::size_t, double>> schedule_log;
};

/// config.episodes counts global episodes across all tasks.
MultiTaskResult run_multitask_training(const TaskSuite& suite, const LearnerConfig& config);

/// Stream a single task of a multi-task run would use; exposed so single-task
/// replays can reproduce it.
SplitMix64 multitask_task_stream(std::uint64_t seed, std::size_t task_index);

}  // namespace pbrs

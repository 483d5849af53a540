#include "pbrs/learners/multitask.hpp"

namespace pbrs {

SplitMix64 multitask_task_stream(std::uint64_t seed, std::size_t task_index) {
    return SplitMix64(derive_seed(seed, static_cast<std::uint64_t>(task_index) + 1));
}

MultiTaskResult run_multitask_training(const TaskSuite& suite, const LearnerConfig& config) {
    suite.validate();
    config.validate();

    struct TaskRuntime {
        QTable q;
        ShapingState shaping;
        SplitMix64 rng;
        std::uint64_t episodes_done = 0;
        std::vector<double> rewards;
    };

    std::vector<TaskRuntime> runtime;
    runtime.reserve(suite.tasks.size());
    for (std::size_t k = 0; k < suite.tasks.size(); ++k) {
        runtime.push_back({QTable(suite.tasks[k].env.n_states(), suite.tasks[k].env.n_actions()),
                           config.make_shaping_state(), multitask_task_stream(config.seed, k)});
    }

    SplitMix64 scheduler(derive_seed(config.seed, 0));
    MultiTaskResult result;
    result.schedule_log.reserve(config.episodes);

    for (std::uint64_t episode = 0; episode < config.episodes; ++episode) {
        const TaskSuite::Entry& entry = next_task(suite, episode, scheduler);
        const std::size_t k = static_cast<std::size_t>(&entry - suite.tasks.data());
        TaskRuntime& task = runtime[k];
        const double epsilon = config.epsilon_at(task.episodes_done);

        double reward = 0.0;
        if (config.shaping_mode == ShapingMode::none) {
            reward = run_episode_baseline(entry.env, task.q, config, epsilon, task.rng,
                                          task.episodes_done)
                         .episode_reward;
        } else {
            reward = run_episode_pbrs(entry.env, task.q, task.shaping, config, epsilon, task.rng,
                                      task.episodes_done)
                         .episode_reward;
            task.shaping.finish_episode();
        }
        ++task.episodes_done;
        task.rewards.push_back(reward);
        result.schedule_log.emplace_back(k, reward);
    }

    for (std::size_t k = 0; k < suite.tasks.size(); ++k) {
        result.per_task.push_back(
            {suite.tasks[k].id,
             TrainingResult{std::move(runtime[k].q), std::move(runtime[k].rewards),
                            std::move(runtime[k].shaping)}});
    }
    return result;
}

}  // namespace pbrs

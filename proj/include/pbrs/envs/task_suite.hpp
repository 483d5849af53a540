#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbrs/core/rng.hpp"
#include "pbrs/core/tabular_mdp.hpp"

namespace pbrs {

enum class TaskSchedule { round_robin, uniform_random };

std::string to_string(TaskSchedule schedule);
TaskSchedule task_schedule_from_string(const std::string& name);

/// An ordered set of named tasks trained simultaneously, plus the rule that
/// assigns episodes to tasks.
struct TaskSuite {
    struct Entry {
        std::string id;
        TabularMdp env;
    };

    std::vector<Entry> tasks;
    TaskSchedule schedule = TaskSchedule::round_robin;

    /// Throws when empty or when task identifiers repeat.
    void validate() const;
};

/// Task receiving the given episode: tasks[episode mod n] under round_robin,
/// a uniform draw under uniform_random (consuming exactly one draw).
const TaskSuite::Entry& next_task(const TaskSuite& suite, std::uint64_t episode_index,
                                  SplitMix64& rng);

}  // namespace pbrs

#include "pbrs/envs/task_suite.hpp"

#include <set>
#include <stdexcept>

namespace pbrs {

void TaskSuite::validate() const {
    if (tasks.empty()) throw std::invalid_argument("tasks: suite must not be empty");
    std::set<std::string> ids;
    for (const Entry& e : tasks) {
        if (!ids.insert(e.id).second)
            throw std::invalid_argument("tasks: duplicate task identifier '" + e.id + "'");
    }
}

const TaskSuite::Entry& next_task(const TaskSuite& suite, std::uint64_t episode_index,
                                  SplitMix64& rng) {
    if (suite.tasks.empty()) throw std::invalid_argument("tasks: suite must not be empty");
    const std::uint64_t n = suite.tasks.size();
    switch (suite.schedule) {
        case TaskSchedule::uniform_random:
            return suite.tasks[rng.uniform_int(n)];
        case TaskSchedule::round_robin:
        default:
            return suite.tasks[episode_index % n];
    }
}

std::string to_string(TaskSchedule schedule) {
    return schedule == TaskSchedule::uniform_random ? "uniform_random" : "round_robin";
}

TaskSchedule task_schedule_from_string(const std::string& name) {
    if (name == "round_robin") return TaskSchedule::round_robin;
    if (name == "uniform_random") return TaskSchedule::uniform_random;
    throw std::invalid_argument("schedule: unknown schedule '" + name + "'");
}

}  // namespace pbrs

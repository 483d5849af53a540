#pragma once

#include <map>
#include <string>

#include "pbrs/shaping/potential.hpp"
#include "pbrs/shaping/shaping_state.hpp"

namespace pbrs {

/**
Independent ShapingState per task identifier. Tasks never observe each
other's statistics: the per-task potential reads and writes exactly one
entry, so interleaving episodes across tasks leaves every state equal to a
single-task replay.
*/
class TaskShapingRegistry {
  public:
    /// new_task_policy is applied to tasks on first use.
    explicit TaskShapingRegistry(BoundsPolicy new_task_policy = BoundsPolicy::online)
        : new_task_policy_(new_task_policy) {}

    /// State for a task, auto-registered pristine on first use.
    ShapingState& state(const std::string& task) {
        auto it = per_task_.find(task);
        if (it == per_task_.end())
            it = per_task_.emplace(task, ShapingState(new_task_policy_)).first;
        return it->second;
    }

    bool contains(const std::string& task) const { return per_task_.count(task) > 0; }
    std::size_t size() const { return per_task_.size(); }

  private:
    BoundsPolicy new_task_policy_;
    std::map<std::string, ShapingState> per_task_;
};

/// Potential of the current step for one task of a multi-task agent; other
/// tasks' statistics are never consulted.
inline double potential_multitask(double immediate_reward, TaskShapingRegistry& registry,
                                  const std::string& task) {
    return potential(immediate_reward, registry.state(task));
}

}  // namespace pbrs

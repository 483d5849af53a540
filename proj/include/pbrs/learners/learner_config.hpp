#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pbrs/shaping/shaping_state.hpp"

namespace pbrs {

/// Which reward signal the learner trains on.
enum class ShapingMode {
    none,                // plain Q-learning, immediate updates
    online_bounds,       // shaped, bounds learned during training
    known_bounds,        // shaped, bounds supplied up front
    strict_paper_bounds  // shaped, literal either-or bounds update
};

std::string to_string(ShapingMode mode);
ShapingMode shaping_mode_from_string(const std::string& name);

struct LearnerConfig {
    double alpha = 0.1;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    std::uint64_t epsilon_decay_episodes = 1000;
    std::uint64_t update_period = 32;
    std::uint64_t max_steps_per_episode = 1000;
    std::uint64_t episodes = 1000;
    std::uint64_t seed = 0;
    ShapingMode shaping_mode = ShapingMode::none;
    double known_upper = 0.0;  // used by known_bounds only
    double known_lower = 0.0;

    void validate() const {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw std::invalid_argument("alpha: must lie in (0, 1]");
        if (epsilon_start < 0.0 || epsilon_start > 1.0)
            throw std::invalid_argument("epsilon_start: must lie in [0, 1]");
        if (epsilon_end < 0.0 || epsilon_end > 1.0)
            throw std::invalid_argument("epsilon_end: must lie in [0, 1]");
        if (update_period < 1) throw std::invalid_argument("update_period: must be at least 1");
        if (max_steps_per_episode < 1)
            throw std::invalid_argument("max_steps_per_episode: must be at least 1");
        if (shaping_mode == ShapingMode::known_bounds &&
            (!std::isfinite(known_upper) || !std::isfinite(known_lower) ||
             known_lower > known_upper))
            throw std::invalid_argument("known_bounds: requires finite lower <= upper");
    }

    /// Exploration rate for an episode: linear decay from epsilon_start to
    /// epsilon_end over epsilon_decay_episodes, then flat.
    double epsilon_at(std::uint64_t episode) const {
        if (epsilon_decay_episodes == 0 || episode >= epsilon_decay_episodes) return epsilon_end;
        const double fraction =
            static_cast<double>(episode) / static_cast<double>(epsilon_decay_episodes);
        return epsilon_start + (epsilon_end - epsilon_start) * fraction;
    }

    /// Fresh shaping statistics for this configuration.
    ShapingState make_shaping_state() const {
        switch (shaping_mode) {
            case ShapingMode::known_bounds:
                return ShapingState::with_known_bounds(known_upper, known_lower);
            case ShapingMode::strict_paper_bounds:
                return ShapingState(BoundsPolicy::strict_paper);
            default:
                return ShapingState(BoundsPolicy::online);
        }
    }
};

}  // namespace pbrs

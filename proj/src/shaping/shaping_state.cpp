#include "pbrs/shaping/shaping_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbrs {

ShapingState::ShapingState(BoundsPolicy policy) : policy_(policy) {
    if (policy == BoundsPolicy::known)
        throw std::invalid_argument("ShapingState: use with_known_bounds for fixed bounds");
}

ShapingState ShapingState::with_known_bounds(double upper, double lower) {
    if (std::isfinite(upper) && std::isfinite(lower) && lower > upper)
        throw std::invalid_argument("ShapingState: known lower bound exceeds upper bound");
    ShapingState state(BoundsPolicy::online);
    state.policy_ = BoundsPolicy::known;
    state.max_episode_reward_ = upper;
    state.min_episode_reward_ = lower;
    return state;
}

void ShapingState::accumulate_step(double reward) {
    if (!std::isfinite(reward))
        throw std::invalid_argument("ShapingState: non-finite step reward");
    current_episode_reward_ += reward;
}

void ShapingState::finish_episode() {
    switch (policy_) {
        case BoundsPolicy::online:
            max_episode_reward_ = std::max(max_episode_reward_, current_episode_reward_);
            min_episode_reward_ = std::min(min_episode_reward_, current_episode_reward_);
            break;
        case BoundsPolicy::strict_paper:
            if (current_episode_reward_ > max_episode_reward_) {
                max_episode_reward_ = current_episode_reward_;
            } else if (current_episode_reward_ < min_episode_reward_) {
                min_episode_reward_ = current_episode_reward_;
            }
            break;
        case BoundsPolicy::known:
            break;
    }
    ++episodes_completed_;
    current_episode_reward_ = 0.0;
}

}  // namespace pbrs

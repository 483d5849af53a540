#pragma once

#include <cstdint>
#include <limits>

namespace pbrs {

/// How the episode-reward bounds evolve over a run.
enum class BoundsPolicy {
    /// Bounds start at (-inf, +inf) and both extrema are updated at every
    /// episode end.
    online,
    /// Bounds are fixed constants supplied at construction.
    known,
    /// Literal variant of the online update: an episode can raise the
    /// maximum or lower the minimum, never both. Kept so the behaviour is
    /// testable; the online policy is the default because this one leaves
    /// the minimum at +inf under monotonically improving episodes.
    strict_paper,
};

/**
Running episode-reward statistics behind the potential function: the reward
accumulated so far in the current episode and the best / worst complete
episode rewards seen so far (or fixed constants under the known policy).
*/
class ShapingState {
  public:
    /// Online or strict-paper bounds, initialised to (-inf, +inf).
    explicit ShapingState(BoundsPolicy policy = BoundsPolicy::online);

    /// Known-bounds state; the bounds never change afterwards.
    static ShapingState with_known_bounds(double upper, double lower);

    double max_episode_reward() const { return max_episode_reward_; }
    double min_episode_reward() const { return min_episode_reward_; }
    double current_episode_reward() const { return current_episode_reward_; }
    bool known_bounds() const { return policy_ == BoundsPolicy::known; }
    BoundsPolicy policy() const { return policy_; }
    std::uint64_t episodes_completed() const { return episodes_completed_; }

    /// Adds one step's environment reward to the current episode total.
    /// Non-finite rewards are rejected.
    void accumulate_step(double reward);

    /// Closes the current episode: updates the bounds according to the
    /// policy, increments the episode counter and resets the running total.
    void finish_episode();

  private:
    double max_episode_reward_ = -std::numeric_limits<double>::infinity();
    double min_episode_reward_ = std::numeric_limits<double>::infinity();
    double current_episode_reward_ = 0.0;
    BoundsPolicy policy_ = BoundsPolicy::online;
    std::uint64_t episodes_completed_ = 0;
};

}  // namespace pbrs

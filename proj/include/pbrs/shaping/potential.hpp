#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "pbrs/shaping/shaping_state.hpp"

namespace pbrs {

/**
Potential of the current step, derived from episode-reward statistics.

Returns 0 when the immediate reward is 0; otherwise
1 + (R_ep - R_max) / (R_max - R_min), where R_ep is the running episode
reward (which must already include immediate_reward) and R_max / R_min are
the state's bounds. Whenever the bounds are degenerate -- either one is
non-finite because too few episodes have finished, or they coincide -- the
potential is 0, which keeps the shaping bonus identically zero and degrades
to unshaped learning. The result is always finite.
*/
inline double potential(double immediate_reward, const ShapingState& state) {
    if (immediate_reward == 0.0) return 0.0;
    const double upper = state.max_episode_reward();
    const double lower = state.min_episode_reward();
    if (!std::isfinite(upper) || !std::isfinite(lower)) return 0.0;
    const double span = upper - lower;
    if (span == 0.0 || !std::isfinite(span)) return 0.0;
    const double value = 1.0 + (state.current_episode_reward() - upper) / span;
    return std::isfinite(value) ? value : 0.0;
}

/// Shaping bonus F = gamma * phi(next) - phi(current). gamma must be the
/// discount factor of the environment being shaped.
inline double shaping_bonus(double phi_s, double phi_next, double gamma) {
    return gamma * phi_next - phi_s;
}

/// Lookup into a fixed per-state potential table. This is the static-potential
/// baseline used by the policy-invariance oracle; terminal entries are zero by
/// convention.
inline double static_potential_lookup(std::span<const double> table, int state) {
    if (state < 0 || static_cast<std::size_t>(state) >= table.size())
        throw std::out_of_range("static_potential_lookup: state index out of range");
    return table[static_cast<std::size_t>(state)];
}

}  // namespace pbrs

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbrs/core/rng.hpp"

namespace pbrs {

/**
Explicit finite MDP: state and action counts, per-(state, action) outcome
rows, discount factor, terminal set and a start state.

Outcome rows are sparse: each (s, a) pair stores only the successor states
with positive probability. Every row must sum to 1 within 1e-9 and is
validated once at construction, so stepping and solving never re-check.
Terminal states are absorbing by construction: whatever rows are passed in
for them are replaced by a zero-reward self-loop.
*/
class TabularMdp {
  public:
    struct Outcome {
        int next_state;
        double probability;
        double reward;
    };

    /// Rows are indexed by s * n_actions + a; validation failures name the
    /// offending field in the exception message.
    TabularMdp(int n_states, int n_actions, std::vector<std::vector<Outcome>> rows,
               double gamma, std::vector<int> terminals, int start_state);

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }
    double gamma() const { return gamma_; }
    int start_state() const { return start_state_; }
    bool is_terminal(int state) const { return terminal_[static_cast<std::size_t>(state)]; }
    const std::vector<int>& terminals() const { return terminal_list_; }

    std::span<const Outcome> outcomes(int state, int action) const {
        return rows_[row_index(state, action)];
    }

    /// Probability of reaching next_state from (state, action); 0 when the
    /// transition is not stored.
    double transition_probability(int state, int action, int next_state) const;

    /// Reward attached to (state, action, next_state); 0 when the transition
    /// has no stored outcome.
    double reward(int state, int action, int next_state) const;

    /// Samples a successor. Deterministic rows (a single outcome) consume no
    /// draws; stochastic rows consume exactly one uniform draw.
    const Outcome& sample(int state, int action, SplitMix64& rng) const;

    /// Copy with every outcome reward replaced; transition structure, gamma,
    /// terminals and start state are untouched. rewrite is called once per
    /// stored outcome.
    template <typename F>
    TabularMdp with_rewards(F&& rewrite) const {
        TabularMdp copy(*this);
        for (int s = 0; s < n_states_; ++s) {
            if (terminal_[static_cast<std::size_t>(s)]) continue;
            for (int a = 0; a < n_actions_; ++a) {
                for (Outcome& o : copy.rows_[row_index(s, a)]) {
                    o.reward = rewrite(s, a, o.next_state, o.reward);
                }
            }
        }
        return copy;
    }

  private:
    std::size_t row_index(int state, int action) const {
        return static_cast<std::size_t>(state) * static_cast<std::size_t>(n_actions_) +
               static_cast<std::size_t>(action);
    }
    void validate() const;

    int n_states_;
    int n_actions_;
    std::vector<std::vector<Outcome>> rows_;
    double gamma_;
    std::vector<bool> terminal_;
    std::vector<int> terminal_list_;
    int start_state_;
};

}  // namespace pbrs

#pragma once

#include <stdexcept>
#include <vector>

namespace pbrs {

/// Dense |S| x |A| action-value table, zero-initialised. The greedy action is
/// deterministic: ties go to the lowest action index.
class QTable {
  public:
    QTable(int n_states, int n_actions)
        : n_states_(n_states),
          n_actions_(n_actions),
          values_(static_cast<std::size_t>(n_states) * static_cast<std::size_t>(n_actions), 0.0) {
        if (n_states <= 0 || n_actions <= 0)
            throw std::invalid_argument("QTable: dimensions must be positive");
    }

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }

    double operator()(int state, int action) const { return values_[index(state, action)]; }
    double& operator()(int state, int action) { return values_[index(state, action)]; }

    double max_value(int state) const {
        const std::size_t base = index(state, 0);
        double best = values_[base];
        for (int a = 1; a < n_actions_; ++a) best = std::max(best, values_[base + a]);
        return best;
    }

    int greedy_action(int state) const {
        const std::size_t base = index(state, 0);
        int best = 0;
        for (int a = 1; a < n_actions_; ++a) {
            if (values_[base + a] > values_[base + best]) best = a;
        }
        return best;
    }

    const std::vector<double>& values() const { return values_; }

    bool operator==(const QTable& other) const = default;

  private:
    std::size_t index(int state, int action) const {
        if (state < 0 || state >= n_states_ || action < 0 || action >= n_actions_)
            throw std::out_of_range("QTable: index out of range");
        return static_cast<std::size_t>(state) * static_cast<std::size_t>(n_actions_) +
               static_cast<std::size_t>(action);
    }

    int n_states_;
    int n_actions_;
    std::vector<double> values_;
};

}  // namespace pbrs

#include "pbrs/core/tabular_mdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pbrs {

namespace {
constexpr double kRowSumTolerance = 1e-9;
}

TabularMdp::TabularMdp(int n_states, int n_actions, std::vector<std::vector<Outcome>> rows,
                       double gamma, std::vector<int> terminals, int start_state)
    : n_states_(n_states),
      n_actions_(n_actions),
      rows_(std::move(rows)),
      gamma_(gamma),
      terminal_(static_cast<std::size_t>(std::max(n_states, 0)), false),
      terminal_list_(std::move(terminals)),
      start_state_(start_state) {
    if (n_states_ <= 0) throw std::invalid_argument("n_states: must be positive");
    if (n_actions_ <= 0) throw std::invalid_argument("n_actions: must be positive");
    if (!(gamma_ >= 0.0) || !(gamma_ < 1.0))
        throw std::invalid_argument("gamma: must lie in [0, 1), got " + std::to_string(gamma_));
    if (start_state_ < 0 || start_state_ >= n_states_)
        throw std::invalid_argument("start_state: index " + std::to_string(start_state_) +
                                    " out of range");
    std::sort(terminal_list_.begin(), terminal_list_.end());
    terminal_list_.erase(std::unique(terminal_list_.begin(), terminal_list_.end()),
                         terminal_list_.end());
    for (int t : terminal_list_) {
        if (t < 0 || t >= n_states_)
            throw std::invalid_argument("terminals: index " + std::to_string(t) + " out of range");
        terminal_[static_cast<std::size_t>(t)] = true;
    }
    if (rows_.size() != static_cast<std::size_t>(n_states_) * static_cast<std::size_t>(n_actions_))
        throw std::invalid_argument("transition: expected " +
                                    std::to_string(n_states_ * n_actions_) + " rows, got " +
                                    std::to_string(rows_.size()));
    // Terminal states are absorbing with zero reward regardless of input.
    for (int t : terminal_list_) {
        for (int a = 0; a < n_actions_; ++a) {
            rows_[row_index(t, a)] = {Outcome{t, 1.0, 0.0}};
        }
    }
    validate();
}

void TabularMdp::validate() const {
    for (int s = 0; s < n_states_; ++s) {
        for (int a = 0; a < n_actions_; ++a) {
            const auto& row = rows_[row_index(s, a)];
            double sum = 0.0;
            for (const Outcome& o : row) {
                if (o.next_state < 0 || o.next_state >= n_states_)
                    throw std::invalid_argument("transition: next state " +
                                                std::to_string(o.next_state) +
                                                " out of range in row (s=" + std::to_string(s) +
                                                ", a=" + std::to_string(a) + ")");
                if (!(o.probability > 0.0) || !std::isfinite(o.probability))
                    throw std::invalid_argument(
                        "transition: probabilities must be positive and finite in row (s=" +
                        std::to_string(s) + ", a=" + std::to_string(a) + ")");
                if (!std::isfinite(o.reward))
                    throw std::invalid_argument("reward: non-finite value in row (s=" +
                                                std::to_string(s) + ", a=" + std::to_string(a) +
                                                ")");
                sum += o.probability;
            }
            if (std::abs(sum - 1.0) > kRowSumTolerance)
                throw std::invalid_argument("transition: row (s=" + std::to_string(s) +
                                            ", a=" + std::to_string(a) + ") sums to " +
                                            std::to_string(sum) + ", expected 1");
        }
    }
}

double TabularMdp::transition_probability(int state, int action, int next_state) const {
    double p = 0.0;
    for (const Outcome& o : rows_[row_index(state, action)]) {
        if (o.next_state == next_state) p += o.probability;
    }
    return p;
}

double TabularMdp::reward(int state, int action, int next_state) const {
    for (const Outcome& o : rows_[row_index(state, action)]) {
        if (o.next_state == next_state) return o.reward;
    }
    return 0.0;
}

const TabularMdp::Outcome& TabularMdp::sample(int state, int action, SplitMix64& rng) const {
    const auto& row = rows_[row_index(state, action)];
    if (row.size() == 1) return row.front();
    const double u = rng.uniform();
    double acc = 0.0;
    for (const Outcome& o : row) {
        acc += o.probability;
        if (u < acc) return o;
    }
    return row.back();
}

}  // namespace pbrs

#include "pbrs/oracle/value_iteration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pbrs {

ExactSolution value_iteration(const TabularMdp& mdp, double tolerance,
                              std::uint64_t max_iterations) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance: must be positive");

    const int n = mdp.n_states();
    const int m = mdp.n_actions();
    const double gamma = mdp.gamma();

    std::vector<double> values(static_cast<std::size_t>(n), 0.0);
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);

    double residual = std::numeric_limits<double>::infinity();
    std::uint64_t iteration = 0;
    for (; iteration < max_iterations && residual > tolerance; ++iteration) {
        residual = 0.0;
        for (int s = 0; s < n; ++s) {
            if (mdp.is_terminal(s)) {
                next[static_cast<std::size_t>(s)] = 0.0;
                continue;
            }
            double best = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < m; ++a) {
                double q = 0.0;
                for (const TabularMdp::Outcome& o : mdp.outcomes(s, a))
                    q += o.probability *
                         (o.reward + gamma * values[static_cast<std::size_t>(o.next_state)]);
                best = std::max(best, q);
            }
            next[static_cast<std::size_t>(s)] = best;
            residual = std::max(residual, std::abs(best - values[static_cast<std::size_t>(s)]));
        }
        values.swap(next);
    }
    if (residual > tolerance)
        throw std::runtime_error("value_iteration: no convergence within " +
                                 std::to_string(max_iterations) +
                                 " iterations, residual=" + std::to_string(residual));

    ExactSolution solution;
    solution.values = std::move(values);
    solution.q_values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0.0);
    solution.greedy_policy.assign(static_cast<std::size_t>(n), 0);
    solution.iterations = iteration;
    solution.residual = residual;

    for (int s = 0; s < n; ++s) {
        if (mdp.is_terminal(s)) continue;
        int best_action = 0;
        double best_q = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < m; ++a) {
            double q = 0.0;
            for (const TabularMdp::Outcome& o : mdp.outcomes(s, a))
                q += o.probability *
                     (o.reward + gamma * solution.values[static_cast<std::size_t>(o.next_state)]);
            solution.q_values[static_cast<std::size_t>(s) * static_cast<std::size_t>(m) +
                              static_cast<std::size_t>(a)] = q;
            if (q > best_q) {
                best_q = q;
                best_action = a;
            }
        }
        solution.greedy_policy[static_cast<std::size_t>(s)] = best_action;
    }
    return solution;
}

double greedy_rollout_reward(const TabularMdp& mdp, const ExactSolution& solution,
                             std::uint64_t max_steps) {
    double total = 0.0;
    int state = mdp.start_state();
    for (std::uint64_t step = 0; step < max_steps && !mdp.is_terminal(state); ++step) {
        const int action = solution.greedy_policy[static_cast<std::size_t>(state)];
        // Deterministic rollout: follow the highest-probability outcome.
        const TabularMdp::Outcome* chosen = nullptr;
        for (const TabularMdp::Outcome& o : mdp.outcomes(state, action)) {
            if (chosen == nullptr || o.probability > chosen->probability) chosen = &o;
        }
        total += chosen->reward;
        state = chosen->next_state;
    }
    return total;
}

}  // namespace pbrs

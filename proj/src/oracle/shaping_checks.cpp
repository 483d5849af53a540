#include "pbrs/oracle/shaping_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pbrs/oracle/value_iteration.hpp"
#include "pbrs/shaping/potential.hpp"
#include "pbrs/shaping/shaping_state.hpp"

namespace pbrs {

TabularMdp shape_mdp_static(const TabularMdp& mdp, std::span<const double> phi) {
    if (phi.size() != static_cast<std::size_t>(mdp.n_states()))
        throw std::invalid_argument("phi: expected one potential per state");
    for (double p : phi) {
        if (!std::isfinite(p)) throw std::invalid_argument("phi: potentials must be finite");
    }
    for (int t : mdp.terminals()) {
        if (phi[static_cast<std::size_t>(t)] != 0.0)
            throw std::invalid_argument("phi: terminal potentials must be zero");
    }
    const double gamma = mdp.gamma();
    return mdp.with_rewards([&](int s, int /*a*/, int next, double r) {
        return r + gamma * phi[static_cast<std::size_t>(next)] -
               phi[static_cast<std::size_t>(s)];
    });
}

namespace {

constexpr double kSolverTolerance = 1e-12;

std::vector<int> tolerance_optimal_actions(const ExactSolution& sol, int state, int n_actions,
                                           double tolerance) {
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < n_actions; ++a) best = std::max(best, sol.q(state, a, n_actions));
    std::vector<int> actions;
    for (int a = 0; a < n_actions; ++a) {
        if (best - sol.q(state, a, n_actions) <= tolerance) actions.push_back(a);
    }
    return actions;
}

}  // namespace

InvarianceReport check_policy_invariance(const TabularMdp& mdp, std::span<const double> phi,
                                         double tolerance) {
    const TabularMdp shaped = shape_mdp_static(mdp, phi);
    const ExactSolution base = value_iteration(mdp, kSolverTolerance);
    const ExactSolution after = value_iteration(shaped, kSolverTolerance);

    InvarianceReport report;
    const int m = mdp.n_actions();
    for (int s = 0; s < mdp.n_states(); ++s) {
        if (mdp.is_terminal(s)) continue;
        for (int a = 0; a < m; ++a) {
            const double gap = std::abs(after.q(s, a, m) - base.q(s, a, m) +
                                        phi[static_cast<std::size_t>(s)]);
            report.max_q_gap = std::max(report.max_q_gap, gap);
        }
        if (tolerance_optimal_actions(base, s, m, tolerance) !=
            tolerance_optimal_actions(after, s, m, tolerance))
            ++report.mismatched_states;
    }
    report.pass = report.mismatched_states == 0 && report.max_q_gap <= tolerance;
    return report;
}

TabularMdp random_mdp(int n_states, int n_actions, double gamma, bool episodic, SplitMix64& rng) {
    std::vector<std::vector<TabularMdp::Outcome>> rows(
        static_cast<std::size_t>(n_states) * static_cast<std::size_t>(n_actions));
    for (auto& row : rows) {
        std::vector<double> weights(static_cast<std::size_t>(n_states));
        double sum = 0.0;
        for (double& w : weights) {
            w = rng.uniform() + 1e-3;
            sum += w;
        }
        row.reserve(static_cast<std::size_t>(n_states));
        for (int next = 0; next < n_states; ++next) {
            const double reward = 2.0 * rng.uniform() - 1.0;
            row.push_back({next, weights[static_cast<std::size_t>(next)] / sum, reward});
        }
    }
    std::vector<int> terminals;
    if (episodic) terminals.push_back(n_states - 1);
    return TabularMdp(n_states, n_actions, std::move(rows), gamma, std::move(terminals), 0);
}

std::vector<double> random_zero_terminal_potential(const TabularMdp& mdp, double scale,
                                                   SplitMix64& rng) {
    std::vector<double> phi(static_cast<std::size_t>(mdp.n_states()));
    for (double& p : phi) p = scale * (2.0 * rng.uniform() - 1.0);
    for (int t : mdp.terminals()) phi[static_cast<std::size_t>(t)] = 0.0;
    return phi;
}

InvarianceSweep run_invariance_sweep(std::uint64_t cases, std::uint64_t seed, double tolerance) {
    SplitMix64 rng(seed);
    InvarianceSweep sweep;
    sweep.cases = cases;
    for (std::uint64_t i = 0; i < cases; ++i) {
        const int n_states = 2 + static_cast<int>(rng.uniform_int(9));   // 2..10
        const int n_actions = 2 + static_cast<int>(rng.uniform_int(3));  // 2..4
        const double gamma = 0.5 + 0.45 * rng.uniform();
        const bool episodic = rng.uniform() < 0.5;
        const TabularMdp mdp = random_mdp(n_states, n_actions, gamma, episodic, rng);
        const std::vector<double> phi = random_zero_terminal_potential(mdp, 1.0, rng);
        const InvarianceReport report = check_policy_invariance(mdp, phi, tolerance);
        if (!report.pass) ++sweep.failures;
        sweep.max_q_gap = std::max(sweep.max_q_gap, report.max_q_gap);
    }
    return sweep;
}

SignPropertyReport check_sign_properties(std::span<const ShapingStepSnapshot> steps,
                                         double gamma) {
    constexpr double kSlack = 1e-9;
    SignPropertyReport report;
    report.steps = steps.size();

    auto assert_sign = [&](bool nonpositive, double bonus) {
        // nonpositive: expect bonus <= 0; otherwise expect bonus > 0.
        const double excess = nonpositive ? bonus : -bonus;
        if (excess > kSlack) {
            ++report.violations;
            report.max_violation = std::max(report.max_violation, excess);
        }
    };

    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const ShapingStepSnapshot& a = steps[i];
        const ShapingStepSnapshot& b = steps[i + 1];
        if (a.episode_end) continue;  // pairs never straddle episodes
        if (a.reward == 0.0 || b.reward == 0.0) continue;
        ++report.candidate_pairs;

        const double upper = a.upper_bound;
        const double lower = a.lower_bound;
        if (!std::isfinite(upper) || !std::isfinite(lower) || upper == lower) {
            ++report.degenerate_pairs;
            continue;
        }

        const double r_now = a.episode_reward;
        const double r_next = b.episode_reward;
        const double bonus = shaping_bonus(a.phi, b.phi, gamma);

        if (r_next == r_now) {
            if (r_now >= lower) {
                ++report.no_change;
                assert_sign(/*nonpositive=*/true, bonus);
            } else {
                ++report.out_of_scope_no_change;
            }
        } else if (gamma * r_next >= r_now) {
            const bool provable = lower > 0.0 || (lower == 0.0 && gamma * r_next > r_now);
            if (provable) {
                ++report.improvement;
                assert_sign(/*nonpositive=*/false, bonus);
            } else {
                ++report.out_of_scope_improvement;
            }
        } else if (gamma * r_next - r_now > -(lower * (1.0 - gamma))) {
            ++report.small_decline;
            assert_sign(/*nonpositive=*/false, bonus);
        } else {
            ++report.large_decline;
            assert_sign(/*nonpositive=*/true, bonus);
        }
    }
    return report;
}

double check_algebraic_identity(std::span<const IdentitySample> samples) {
    double max_deviation = 0.0;
    for (const IdentitySample& sample : samples) {
        if (!(sample.upper > sample.lower))
            throw std::invalid_argument("identity: samples require upper > lower");

        ShapingState state = ShapingState::with_known_bounds(sample.upper, sample.lower);
        state.accumulate_step(sample.episode_reward_s);
        const double phi_s = potential(1.0, state);
        state.accumulate_step(sample.episode_reward_next - sample.episode_reward_s);
        const double phi_next = potential(1.0, state);
        const double via_potentials = shaping_bonus(phi_s, phi_next, sample.gamma);

        const double closed_form =
            (sample.gamma * sample.episode_reward_next - sample.episode_reward_s +
             sample.lower * (1.0 - sample.gamma)) /
            (sample.upper - sample.lower);

        max_deviation = std::max(max_deviation, std::abs(via_potentials - closed_form));
    }
    return max_deviation;
}

std::vector<IdentitySample> random_identity_samples(std::size_t count, SplitMix64& rng) {
    std::vector<IdentitySample> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double lower = 20.0 * rng.uniform() - 10.0;
        const double upper = lower + 0.5 + 19.5 * rng.uniform();
        const double span = upper - lower;
        const double r_s = lower - 0.5 * span + 2.0 * span * rng.uniform();
        const double r_next = lower - 0.5 * span + 2.0 * span * rng.uniform();
        const double gamma = rng.uniform();
        samples.push_back({r_s, r_next, upper, lower, gamma});
    }
    return samples;
}

}  // namespace pbrs

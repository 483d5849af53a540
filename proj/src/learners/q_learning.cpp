#include "pbrs/learners/q_learning.hpp"

#include <cmath>
#include <stdexcept>

#include "pbrs/shaping/potential.hpp"

namespace pbrs {

void q_update(QTable& q, int state, int action, double reward, double bonus, int next_state,
              bool is_terminal, double alpha, double gamma) {
    if (!std::isfinite(reward) || !std::isfinite(bonus))
        throw std::invalid_argument("q_update: non-finite reward or bonus");
    const double bootstrap = is_terminal ? 0.0 : q.max_value(next_state);
    const double target = reward + bonus + gamma * bootstrap;
    q(state, action) += alpha * (target - q(state, action));
}

int epsilon_greedy(const QTable& q, int state, double epsilon, SplitMix64& rng) {
    const double u = rng.uniform();
    if (u < epsilon)
        return static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(q.n_actions())));
    return q.greedy_action(state);
}

namespace {

/**
Applies buffered records backward (newest first). Record i bootstraps its
shaping bonus from record i+1's potential. The newest record uses potential 0
when its transition is terminal or when the episode is over (a truncated
episode's final record will never see a successor); otherwise it is kept in
the buffer for the next flush.
*/
void flush_buffer(std::vector<TransitionRecord>& buffer, QTable& q, double alpha, double gamma,
                  bool episode_over) {
    if (buffer.empty()) return;
    const std::size_t newest = buffer.size() - 1;
    const bool hold_newest = !episode_over && !buffer[newest].is_terminal;
    if (hold_newest && buffer.size() == 1) return;
    const std::size_t first_applied = hold_newest ? newest - 1 : newest;
    for (std::size_t i = first_applied + 1; i-- > 0;) {
        const TransitionRecord& rec = buffer[i];
        const double phi_next = (i == newest) ? 0.0 : buffer[i + 1].phi_s;
        const double f = shaping_bonus(rec.phi_s, phi_next, gamma);
        q_update(q, rec.state, rec.action, rec.reward, f, rec.next_state, rec.is_terminal, alpha,
                 gamma);
    }
    if (hold_newest) {
        buffer.front() = buffer.back();
        buffer.resize(1);
    } else {
        buffer.clear();
    }
}

}  // namespace

EpisodeTrace run_episode_pbrs(const TabularMdp& env, QTable& q, ShapingState& shaping,
                              const LearnerConfig& config, double epsilon, SplitMix64& rng,
                              std::uint64_t episode_index, ShapingDiagnostics* diagnostics) {
    EpisodeTrace trace;
    trace.episode_index = episode_index;
    std::vector<TransitionRecord> buffer;
    const double gamma = env.gamma();
    int state = env.start_state();
    std::uint64_t steps_since_flush = 0;

    for (std::uint64_t step = 0; step < config.max_steps_per_episode && !env.is_terminal(state);
         ++step) {
        const int action = epsilon_greedy(q, state, epsilon, rng);
        const TabularMdp::Outcome& outcome = env.sample(state, action, rng);
        shaping.accumulate_step(outcome.reward);
        const double phi_s = potential(outcome.reward, shaping);
        const bool terminal = env.is_terminal(outcome.next_state);
        const TransitionRecord record{state,         action,
                                      outcome.reward, phi_s,
                                      outcome.next_state, terminal};
        buffer.push_back(record);
        trace.records.push_back(record);
        state = outcome.next_state;
        ++steps_since_flush;

        const bool episode_over = terminal || step + 1 == config.max_steps_per_episode;
        if (steps_since_flush >= config.update_period || episode_over) {
            flush_buffer(buffer, q, config.alpha, gamma, episode_over);
            steps_since_flush = 0;
        }
        if (diagnostics != nullptr) {
            diagnostics->steps.push_back({outcome.reward, shaping.current_episode_reward(),
                                          shaping.max_episode_reward(),
                                          shaping.min_episode_reward(), phi_s, episode_over});
        }
    }
    trace.episode_reward = shaping.current_episode_reward();
    return trace;
}

EpisodeTrace run_episode_baseline(const TabularMdp& env, QTable& q, const LearnerConfig& config,
                                  double epsilon, SplitMix64& rng, std::uint64_t episode_index) {
    EpisodeTrace trace;
    trace.episode_index = episode_index;
    const double gamma = env.gamma();
    int state = env.start_state();

    for (std::uint64_t step = 0; step < config.max_steps_per_episode && !env.is_terminal(state);
         ++step) {
        const int action = epsilon_greedy(q, state, epsilon, rng);
        const TabularMdp::Outcome& outcome = env.sample(state, action, rng);
        const bool terminal = env.is_terminal(outcome.next_state);
        q_update(q, state, action, outcome.reward, 0.0, outcome.next_state, terminal, config.alpha,
                 gamma);
        trace.records.push_back(
            {state, action, outcome.reward, 0.0, outcome.next_state, terminal});
        trace.episode_reward += outcome.reward;
        state = outcome.next_state;
    }
    return trace;
}

TrainingResult run_training(const TabularMdp& env, const LearnerConfig& config,
                            ShapingDiagnostics* diagnostics) {
    return run_training_with_rng(env, config, SplitMix64(config.seed), diagnostics);
}

TrainingResult run_training_with_rng(const TabularMdp& env, const LearnerConfig& config,
                                     SplitMix64 rng, ShapingDiagnostics* diagnostics) {
    config.validate();
    TrainingResult result{QTable(env.n_states(), env.n_actions()), {}, config.make_shaping_state()};
    result.episode_rewards.reserve(config.episodes);

    for (std::uint64_t episode = 0; episode < config.episodes; ++episode) {
        const double epsilon = config.epsilon_at(episode);
        if (config.shaping_mode == ShapingMode::none) {
            EpisodeTrace trace =
                run_episode_baseline(env, result.q, config, epsilon, rng, episode);
            result.episode_rewards.push_back(trace.episode_reward);
        } else {
            EpisodeTrace trace = run_episode_pbrs(env, result.q, result.shaping, config, epsilon,
                                                  rng, episode, diagnostics);
            result.episode_rewards.push_back(trace.episode_reward);
            result.shaping.finish_episode();
        }
    }
    return result;
}

std::vector<double> evaluate_policy(const TabularMdp& env, const QTable& q,
                                    std::uint64_t episodes, std::uint64_t max_steps,
                                    SplitMix64& rng) {
    std::vector<double> rewards;
    rewards.reserve(episodes);
    for (std::uint64_t episode = 0; episode < episodes; ++episode) {
        double total = 0.0;
        int state = env.start_state();
        for (std::uint64_t step = 0; step < max_steps && !env.is_terminal(state); ++step) {
            const int action = epsilon_greedy(q, state, 0.0, rng);
            const TabularMdp::Outcome& outcome = env.sample(state, action, rng);
            total += outcome.reward;
            state = outcome.next_state;
        }
        rewards.push_back(total);
    }
    return rewards;
}

std::string to_string(ShapingMode mode) {
    switch (mode) {
        case ShapingMode::none: return "none";
        case ShapingMode::online_bounds: return "online_bounds";
        case ShapingMode::known_bounds: return "known_bounds";
        case ShapingMode::strict_paper_bounds: return "strict_paper_bounds";
    }
    return "none";
}

ShapingMode shaping_mode_from_string(const std::string& name) {
    if (name == "none") return ShapingMode::none;
    if (name == "online_bounds") return ShapingMode::online_bounds;
    if (name == "known_bounds") return ShapingMode::known_bounds;
    if (name == "strict_paper_bounds") return ShapingMode::strict_paper_bounds;
    throw std::invalid_argument("shaping_mode: unknown mode '" + name + "'");
}

}  // namespace pbrs

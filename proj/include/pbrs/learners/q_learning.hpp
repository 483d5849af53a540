#pragma once

#include <vector>

#include "pbrs/core/episode.hpp"
#include "pbrs/core/rng.hpp"
#include "pbrs/core/tabular_mdp.hpp"
#include "pbrs/learners/learner_config.hpp"
#include "pbrs/learners/q_table.hpp"
#include "pbrs/shaping/diagnostics.hpp"
#include "pbrs/shaping/shaping_state.hpp"

namespace pbrs {

/**
One temporal-difference backup, with an additive bonus folded into the
target:

    Q(s,a) <- Q(s,a) + alpha * (r + f + gamma * M - Q(s,a))

where M is 0 for terminal transitions and max_a Q(next_state, a) otherwise.
With f = 0 this is the plain Q-learning update.
*/
void q_update(QTable& q, int state, int action, double reward, double bonus, int next_state,
              bool is_terminal, double alpha, double gamma);

/// Epsilon-greedy action choice. Consumes exactly one uniform draw, plus one
/// bounded-integer draw when the exploration branch is taken.
int epsilon_greedy(const QTable& q, int state, double epsilon, SplitMix64& rng);

/**
One shaped episode: steps the environment until a terminal state or
max_steps_per_episode, accumulating the episode reward into `shaping` and
buffering (s, a, r, phi_s, s') records. On every update_period boundary and
at episode end the buffer is flushed backward (newest record first); record i
takes its successor's potential as phi(s'), the newest record takes 0 when
its transition is terminal or the episode is ending, and is otherwise
retained in the buffer until its successor exists. Each flushed record is
applied through q_update exactly once.

The caller finishes the episode on `shaping` afterwards; this function only
accumulates.
*/
EpisodeTrace run_episode_pbrs(const TabularMdp& env, QTable& q, ShapingState& shaping,
                              const LearnerConfig& config, double epsilon, SplitMix64& rng,
                              std::uint64_t episode_index = 0,
                              ShapingDiagnostics* diagnostics = nullptr);

/// One unshaped episode: textbook Q-learning with an immediate update per
/// step. Draws from the stream exactly like the shaped episode runner.
EpisodeTrace run_episode_baseline(const TabularMdp& env, QTable& q, const LearnerConfig& config,
                                  double epsilon, SplitMix64& rng,
                                  std::uint64_t episode_index = 0);

/// What a single training run produces; the harness wraps this with config
/// provenance before persisting.
struct TrainingResult {
    QTable q;
    std::vector<double> episode_rewards;  // environment rewards only
    ShapingState shaping;
};

/// Full training run: config.episodes episodes with the configured shaping
/// mode and the epsilon schedule. Deterministic given (env, config).
TrainingResult run_training(const TabularMdp& env, const LearnerConfig& config,
                            ShapingDiagnostics* diagnostics = nullptr);

/// As run_training but with a caller-supplied stream; used by multi-task
/// training and its replay tests.
TrainingResult run_training_with_rng(const TabularMdp& env, const LearnerConfig& config,
                                     SplitMix64 rng, ShapingDiagnostics* diagnostics = nullptr);

/// Greedy rollouts of a fixed policy; returns unshaped per-episode rewards.
std::vector<double> evaluate_policy(const TabularMdp& env, const QTable& q,
                                    std::uint64_t episodes, std::uint64_t max_steps,
                                    SplitMix64& rng);

}  // namespace pbrs

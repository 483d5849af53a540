#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbrs/core/rng.hpp"
#include "pbrs/core/tabular_mdp.hpp"
#include "pbrs/shaping/diagnostics.hpp"

namespace pbrs {

/**
MDP with every outcome reward replaced by reward + gamma * phi[next] -
phi[state]. Transitions, gamma, terminals and the start state are untouched.
phi must be one value per state and zero at every terminal; a nonzero
terminal potential would silently break the policy-preservation guarantee on
episodic tasks, so it is rejected.
*/
TabularMdp shape_mdp_static(const TabularMdp& mdp, std::span<const double> phi);

/// Outcome of one static-shaping policy-preservation check.
struct InvarianceReport {
    bool pass = false;
    /// States whose tolerance-optimal action sets differ between the two MDPs.
    int mismatched_states = 0;
    /// max over non-terminal (s, a) of |Q_shaped - Q + phi(s)|; the theory
    /// says the three terms cancel exactly.
    double max_q_gap = 0.0;
};

/**
Solves the MDP and its statically shaped counterpart exactly and compares,
for every non-terminal state, the set of actions within `tolerance` of the
state's best action value. Value equality is not expected (shaped and
unshaped Q differ by phi(state)); set equality is. Also reports the max_q_gap
diagnostic, which must stay within tolerance.
*/
InvarianceReport check_policy_invariance(const TabularMdp& mdp, std::span<const double> phi,
                                         double tolerance = 1e-6);

/// Aggregate of a randomized policy-invariance sweep.
struct InvarianceSweep {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double max_q_gap = 0.0;
    bool pass() const { return failures == 0; }
};

/// Runs `cases` seeded random MDPs (2..10 states, 2..4 actions, a mix of
/// continuing and episodic) against random zero-terminal potentials.
InvarianceSweep run_invariance_sweep(std::uint64_t cases, std::uint64_t seed,
                                     double tolerance = 1e-6);

/// Random MDP for the sweep: normalized-uniform transition rows, rewards
/// uniform in [-1, 1]; when episodic, the last state is terminal.
TabularMdp random_mdp(int n_states, int n_actions, double gamma, bool episodic, SplitMix64& rng);

/// Uniform [-scale, scale] potential per state, zeroed at terminals.
std::vector<double> random_zero_terminal_potential(const TabularMdp& mdp, double scale,
                                                   SplitMix64& rng);

/**
Sign classification of recorded consecutive step pairs.

A pair of consecutive steps is a candidate when both steps carry a nonzero
environment reward (both potentials came from the bounds formula); candidates
with degenerate bounds are counted and skipped. Each remaining pair lands in
one class by the relation between the episode rewards R (after the first
step) and R' (after the second):

  no_change       R' = R             -> bonus <= 0, provided R >= lower bound
  improvement     gamma R' >= R      -> bonus > 0, provided the lower bound
                                        is nonnegative (and positive when
                                        gamma R' = R)
  small_decline   gamma R' <  R and
                  gamma R' - R > -(lower)(1 - gamma)  -> bonus > 0
  large_decline   gamma R' - R <= -(lower)(1 - gamma) -> bonus <= 0

Pairs whose class carries a proviso that fails are logged as out-of-scope
rather than asserted. All assertions use a 1e-9 slack.
*/
struct SignPropertyReport {
    std::uint64_t steps = 0;
    std::uint64_t candidate_pairs = 0;
    std::uint64_t degenerate_pairs = 0;
    std::uint64_t no_change = 0;
    std::uint64_t improvement = 0;
    std::uint64_t small_decline = 0;
    std::uint64_t large_decline = 0;
    std::uint64_t out_of_scope_no_change = 0;
    std::uint64_t out_of_scope_improvement = 0;
    std::uint64_t violations = 0;
    double max_violation = 0.0;
    bool pass() const { return violations == 0; }
    std::uint64_t in_scope_pairs() const {
        return no_change + improvement + small_decline + large_decline;
    }
};

SignPropertyReport check_sign_properties(std::span<const ShapingStepSnapshot> steps, double gamma);

/// One synthetic evaluation point for the closed-form bonus identity.
struct IdentitySample {
    double episode_reward_s;
    double episode_reward_next;
    double upper;
    double lower;
    double gamma;
};

/**
Evaluates the shaping bonus two ways for every sample -- through the
potential function and through the closed form
(gamma R' - R + lower (1 - gamma)) / (upper - lower) -- and returns the
largest absolute difference.
*/
double check_algebraic_identity(std::span<const IdentitySample> samples);

/// In-domain random samples (upper > lower by at least 0.5, moderate
/// magnitudes, gamma in [0, 1]).
std::vector<IdentitySample> random_identity_samples(std::size_t count, SplitMix64& rng);

}  // namespace pbrs

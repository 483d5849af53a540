#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pbrs/core/rng.hpp"

namespace pbrs {

/// Learning-curve area: the plain sum of per-episode rewards (unit spacing).
double auc(std::span<const double> per_episode_reward);

/// First episode index whose trailing window-mean reaches the threshold;
/// only full windows count, so the earliest possible answer is window - 1.
std::optional<std::uint64_t> episodes_to_threshold(std::span<const double> per_episode_reward,
                                                   double threshold, std::uint64_t window);

double mean(std::span<const double> values);

/// Median with the usual midpoint rule for even sizes.
double median(std::vector<double> values);

/// Two-sided percentile bootstrap CI for the mean.
struct BootstrapInterval {
    double mean = 0.0;
    double low = 0.0;
    double high = 0.0;
};
BootstrapInterval bootstrap_mean_ci(std::span<const double> values, std::uint64_t resamples,
                                    double confidence, SplitMix64& rng);

/// Lower end of the one-sided (1 - alpha) percentile bootstrap interval for
/// mean(a) - mean(b), resampling both groups independently.
double bootstrap_mean_diff_lower(std::span<const double> a, std::span<const double> b,
                                 std::uint64_t resamples, double alpha, SplitMix64& rng);

}  // namespace pbrs

#include "pbrs/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbrs {

double auc(std::span<const double> per_episode_reward) {
    double total = 0.0;
    for (double r : per_episode_reward) total += r;
    return total;
}

std::optional<std::uint64_t> episodes_to_threshold(std::span<const double> per_episode_reward,
                                                   double threshold, std::uint64_t window) {
    if (window < 1) throw std::invalid_argument("window: must be at least 1");
    if (per_episode_reward.size() < window) return std::nullopt;
    double running = 0.0;
    for (std::size_t i = 0; i < per_episode_reward.size(); ++i) {
        running += per_episode_reward[i];
        if (i >= window) running -= per_episode_reward[i - window];
        if (i + 1 >= window &&
            running / static_cast<double>(window) >= threshold)
            return static_cast<std::uint64_t>(i);
    }
    return std::nullopt;
}

double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    double total = 0.0;
    for (double v : values) total += v;
    return total / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

double resampled_mean(std::span<const double> values, SplitMix64& rng) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        total += values[rng.uniform_int(values.size())];
    return total / static_cast<double>(values.size());
}

double percentile(std::vector<double>& sorted_values, double q) {
    // Nearest-rank on a sorted vector; q in [0, 1].
    const std::size_t n = sorted_values.size();
    const std::size_t rank =
        std::min(n - 1, static_cast<std::size_t>(q * static_cast<double>(n)));
    return sorted_values[rank];
}

}  // namespace

BootstrapInterval bootstrap_mean_ci(std::span<const double> values, std::uint64_t resamples,
                                    double confidence, SplitMix64& rng) {
    if (values.empty()) throw std::invalid_argument("bootstrap: empty sample");
    if (resamples < 1) throw std::invalid_argument("bootstrap: resamples must be positive");
    std::vector<double> means;
    means.reserve(resamples);
    for (std::uint64_t i = 0; i < resamples; ++i) means.push_back(resampled_mean(values, rng));
    std::sort(means.begin(), means.end());
    const double alpha = 1.0 - confidence;
    BootstrapInterval interval;
    interval.mean = mean(values);
    interval.low = percentile(means, alpha / 2.0);
    interval.high = percentile(means, 1.0 - alpha / 2.0);
    return interval;
}

double bootstrap_mean_diff_lower(std::span<const double> a, std::span<const double> b,
                                 std::uint64_t resamples, double alpha, SplitMix64& rng) {
    if (a.empty() || b.empty()) throw std::invalid_argument("bootstrap: empty sample");
    if (resamples < 1) throw std::invalid_argument("bootstrap: resamples must be positive");
    std::vector<double> diffs;
    diffs.reserve(resamples);
    for (std::uint64_t i = 0; i < resamples; ++i)
        diffs.push_back(resampled_mean(a, rng) - resampled_mean(b, rng));
    std::sort(diffs.begin(), diffs.end());
    return percentile(diffs, alpha);
}

}  // namespace pbrs

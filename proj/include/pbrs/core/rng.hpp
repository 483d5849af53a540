#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace pbrs {

/**
Deterministic random stream used by every run in the project.

The generator is SplitMix64 (Steele, Lea & Flood). It was chosen because the
whole sequence is defined by plain 64-bit integer arithmetic, so two builds on
different platforms produce bit-identical draws for the same seed, and because
independent substreams can be derived from a seed and an integer key. The
standard <random> engines are portable but the distributions are not, so both
the uniform-real and the bounded-integer mappings are fixed here as well.
*/
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Name recorded in run metadata so result files identify the stream.
    static constexpr std::string_view name() { return "splitmix64"; }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), using the top 53 bits of one raw draw.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /**
    Uniform integer in [0, bound). Uses masked rejection, so the result is
    unbiased and the algorithm involves no 128-bit arithmetic. A power-of-two
    bound never rejects.
    */
    std::uint64_t uniform_int(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
        std::uint64_t draw = next_u64() & mask;
        while (draw >= bound) draw = next_u64() & mask;
        return draw;
    }

  private:
    std::uint64_t state_;
};

/**
Derives a child seed from a parent seed and an integer key. Used to give each
(arm, seed index) run and each task inside a multi-task run its own stream;
the derivation is part of the reproducibility contract, so it is fixed to the
SplitMix64 finalizer over seed xor golden-ratio-spaced key.
*/
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ull * (key + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace pbrs

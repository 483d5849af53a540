#pragma once

#include <vector>

namespace pbrs {

/// Per-step snapshot of the shaping statistics, captured on the diagnostics
/// channel. Result files never contain these; they feed the verification
/// checks and debugging only.
struct ShapingStepSnapshot {
    double reward;          // environment reward of the step
    double episode_reward;  // running episode reward after the step
    double upper_bound;     // max episode reward at the time of the step
    double lower_bound;     // min episode reward at the time of the step
    double phi;             // potential computed at the step
    bool episode_end;       // last step of its episode
};

struct ShapingDiagnostics {
    std::vector<ShapingStepSnapshot> steps;
};

}  // namespace pbrs

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "pbrs/core/tabular_mdp.hpp"

namespace pbrs {

/// A cell as (x, y), x growing rightward and y growing downward.
using GridCell = std::pair<int, int>;

/**
Declarative gridworld: walls, an optional terminal goal, pellets worth +1
each (consumed on visit, tracked in the state) and hazards worth -1 per
entry. Compiles to a TabularMdp whose states enumerate (cell, remaining
pellet subset) pairs; the pellet count is capped at 8 to keep the state space
exactly solvable.
*/
struct GridSpec {
    int width = 1;
    int height = 1;
    std::set<GridCell> walls;
    GridCell start{0, 0};
    std::optional<GridCell> goal;
    double goal_reward = 0.0;
    std::set<GridCell> pellets;
    std::set<GridCell> hazards;
    double step_reward = 0.0;
    std::uint64_t max_steps = 1000;
    double gamma = 0.99;

    bool operator==(const GridSpec&) const = default;

    /// Number of states of the compiled MDP: cells times 2^|pellets|.
    std::uint64_t state_count() const {
        return static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height)
               << pellets.size();
    }
};

/// Movement actions of every compiled grid, in index order.
enum GridAction : int { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
inline constexpr int kGridActions = 4;

/**
Compiles a grid into an explicit MDP. States enumerate (cell, pellet subset)
pairs; moves blocked by walls or the border self-loop. Entering a cell yields
step_reward, plus +1 when the cell holds a not-yet-consumed pellet (the
pellet leaves the subset), -1 when it is a hazard, and goal_reward when it is
the goal (terminal). A blocked move "re-enters" the current cell. Spec
violations are rejected with the violated field named.
*/
TabularMdp compile_grid(const GridSpec& spec);

/// State index of (cell, remaining pellet mask) in the compiled MDP.
int grid_state_index(const GridSpec& spec, GridCell cell, std::uint32_t pellet_mask);

/**
Plain-text form: a key=value header (step_reward, max_steps, goal_reward,
gamma) followed by a blank line and one row of map characters per grid row.
Characters: '#' wall, '.' empty, 'S' start, 'G' goal, 'o' pellet, 'x' hazard.
Serialization is canonical and parse/serialize round-trip exactly.
*/
std::string serialize_grid(const GridSpec& spec);
GridSpec parse_grid(const std::string& text);

}  // namespace pbrs

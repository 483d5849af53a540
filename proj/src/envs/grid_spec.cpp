#include "pbrs/envs/grid_spec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pbrs/detail/numeric_text.hpp"

namespace pbrs {

namespace {

bool in_bounds(const GridSpec& spec, GridCell cell) {
    return cell.first >= 0 && cell.first < spec.width && cell.second >= 0 &&
           cell.second < spec.height;
}

void validate_spec(const GridSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("width/height: must be at least 1");
    if (spec.pellets.size() > 8)
        throw std::invalid_argument("pellets: at most 8 pellets are supported");
    if (!(spec.gamma >= 0.0) || !(spec.gamma < 1.0))
        throw std::invalid_argument("gamma: must lie in [0, 1)");
    if (spec.max_steps < 1) throw std::invalid_argument("max_steps: must be at least 1");
    if (!std::isfinite(spec.step_reward))
        throw std::invalid_argument("step_reward: must be finite");
    if (!std::isfinite(spec.goal_reward))
        throw std::invalid_argument("goal_reward: must be finite");

    auto check_cells = [&](const std::set<GridCell>& cells, const char* field) {
        for (GridCell c : cells) {
            if (!in_bounds(spec, c))
                throw std::invalid_argument(std::string(field) + ": cell out of bounds");
        }
    };
    check_cells(spec.walls, "walls");
    check_cells(spec.pellets, "pellets");
    check_cells(spec.hazards, "hazards");
    if (!in_bounds(spec, spec.start)) throw std::invalid_argument("start: cell out of bounds");
    if (spec.goal && !in_bounds(spec, *spec.goal))
        throw std::invalid_argument("goal: cell out of bounds");

    auto overlaps = [](const std::set<GridCell>& a, const std::set<GridCell>& b) {
        return std::any_of(a.begin(), a.end(), [&](GridCell c) { return b.count(c) > 0; });
    };
    if (overlaps(spec.pellets, spec.walls) || overlaps(spec.hazards, spec.walls) ||
        overlaps(spec.pellets, spec.hazards))
        throw std::invalid_argument("walls/pellets/hazards: special cell sets must be disjoint");
    if (spec.goal && (spec.walls.count(*spec.goal) || spec.pellets.count(*spec.goal) ||
                      spec.hazards.count(*spec.goal)))
        throw std::invalid_argument("goal: must not coincide with walls, pellets or hazards");
    if (spec.walls.count(spec.start)) throw std::invalid_argument("start: must not be a wall");
    // The one-character-per-cell text format cannot express a start on top of
    // another special cell, so the spec forbids it outright.
    if (spec.pellets.count(spec.start) || spec.hazards.count(spec.start) ||
        (spec.goal && *spec.goal == spec.start))
        throw std::invalid_argument("start: must not coincide with pellets, hazards or the goal");
}

int cell_index(const GridSpec& spec, GridCell cell) {
    return cell.second * spec.width + cell.first;
}

constexpr int kDx[kGridActions] = {0, 0, -1, 1};
constexpr int kDy[kGridActions] = {-1, 1, 0, 0};

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

double parse_double(const std::string& text, const char* field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(field) + ": cannot parse number '" + text + "'");
    return value;
}

}  // namespace

int grid_state_index(const GridSpec& spec, GridCell cell, std::uint32_t pellet_mask) {
    const int n_masks = 1 << spec.pellets.size();
    return cell_index(spec, cell) * n_masks + static_cast<int>(pellet_mask);
}

TabularMdp compile_grid(const GridSpec& spec) {
    validate_spec(spec);

    const int n_cells = spec.width * spec.height;
    const int n_pellets = static_cast<int>(spec.pellets.size());
    const int n_masks = 1 << n_pellets;
    const int n_states = n_cells * n_masks;

    std::vector<GridCell> pellet_cells(spec.pellets.begin(), spec.pellets.end());
    auto pellet_bit = [&](GridCell cell) -> int {
        for (int i = 0; i < n_pellets; ++i) {
            if (pellet_cells[static_cast<std::size_t>(i)] == cell) return i;
        }
        return -1;
    };

    std::vector<int> terminals;
    if (spec.goal) {
        for (int m = 0; m < n_masks; ++m)
            terminals.push_back(grid_state_index(spec, *spec.goal, static_cast<std::uint32_t>(m)));
    }

    std::vector<std::vector<TabularMdp::Outcome>> rows(
        static_cast<std::size_t>(n_states) * kGridActions);
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            const GridCell cell{x, y};
            for (int mask = 0; mask < n_masks; ++mask) {
                const int state = grid_state_index(spec, cell, static_cast<std::uint32_t>(mask));
                for (int a = 0; a < kGridActions; ++a) {
                    GridCell target{x + kDx[a], y + kDy[a]};
                    if (!in_bounds(spec, target) || spec.walls.count(target)) target = cell;

                    double reward = spec.step_reward;
                    int next_mask = mask;
                    const int bit = pellet_bit(target);
                    if (bit >= 0 && (mask >> bit & 1)) {
                        reward += 1.0;
                        next_mask = mask & ~(1 << bit);
                    }
                    if (spec.hazards.count(target)) reward += -1.0;
                    if (spec.goal && target == *spec.goal) reward += spec.goal_reward;

                    const int next_state =
                        grid_state_index(spec, target, static_cast<std::uint32_t>(next_mask));
                    rows[static_cast<std::size_t>(state) * kGridActions +
                         static_cast<std::size_t>(a)] = {{next_state, 1.0, reward}};
                }
            }
        }
    }

    const int start_state =
        grid_state_index(spec, spec.start, static_cast<std::uint32_t>(n_masks - 1));
    return TabularMdp(n_states, kGridActions, std::move(rows), spec.gamma, std::move(terminals),
                      start_state);
}

std::string serialize_grid(const GridSpec& spec) {
    validate_spec(spec);
    std::string out;
    out += "step_reward=" + format_double(spec.step_reward) + "\n";
    out += "max_steps=" + std::to_string(spec.max_steps) + "\n";
    out += "goal_reward=" + format_double(spec.goal_reward) + "\n";
    out += "gamma=" + format_double(spec.gamma) + "\n";
    out += "\n";
    for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
            const GridCell cell{x, y};
            char c = '.';
            if (spec.walls.count(cell)) c = '#';
            else if (spec.pellets.count(cell)) c = 'o';
            else if (spec.hazards.count(cell)) c = 'x';
            else if (spec.goal && *spec.goal == cell) c = 'G';
            if (cell == spec.start) c = 'S';
            out += c;
        }
        out += "\n";
    }
    return out;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec spec;
    std::istringstream in(text);
    std::string line;

    bool in_header = true;
    std::vector<std::string> map_rows;
    while (std::getline(in, line)) {
        if (in_header) {
            if (line.empty()) {
                in_header = false;
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("header: expected key=value, got '" + line + "'");
            const std::string key = line.substr(0, eq);
            const std::string value = line.substr(eq + 1);
            if (key == "step_reward") spec.step_reward = parse_double(value, "step_reward");
            else if (key == "max_steps")
                spec.max_steps = static_cast<std::uint64_t>(std::stoull(value));
            else if (key == "goal_reward") spec.goal_reward = parse_double(value, "goal_reward");
            else if (key == "gamma") spec.gamma = parse_double(value, "gamma");
            else throw std::invalid_argument("header: unknown key '" + key + "'");
        } else {
            if (line.empty()) continue;
            map_rows.push_back(line);
        }
    }
    if (map_rows.empty()) throw std::invalid_argument("map: no rows");

    spec.height = static_cast<int>(map_rows.size());
    spec.width = static_cast<int>(map_rows.front().size());
    bool start_seen = false;
    for (int y = 0; y < spec.height; ++y) {
        const std::string& row = map_rows[static_cast<std::size_t>(y)];
        if (static_cast<int>(row.size()) != spec.width)
            throw std::invalid_argument("map: ragged rows");
        for (int x = 0; x < spec.width; ++x) {
            const GridCell cell{x, y};
            switch (row[static_cast<std::size_t>(x)]) {
                case '.': break;
                case '#': spec.walls.insert(cell); break;
                case 'o': spec.pellets.insert(cell); break;
                case 'x': spec.hazards.insert(cell); break;
                case 'G':
                    if (spec.goal) throw std::invalid_argument("map: multiple goals");
                    spec.goal = cell;
                    break;
                case 'S':
                    if (start_seen) throw std::invalid_argument("map: multiple starts");
                    spec.start = cell;
                    start_seen = true;
                    break;
                default:
                    throw std::invalid_argument(std::string("map: unknown character '") +
                                                row[static_cast<std::size_t>(x)] + "'");
            }
        }
    }
    if (!start_seen) throw std::invalid_argument("map: missing start cell");
    validate_spec(spec);
    return spec;
}

}  // namespace pbrs

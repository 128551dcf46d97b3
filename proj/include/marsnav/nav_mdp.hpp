#ifndef MARSNAV_NAV_MDP_HPP
#define MARSNAV_NAV_MDP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "marsnav/common.hpp"

namespace marsnav {

// Eight compass moves, one compressed cell each:
// 0:east 1:south 2:west 3:north 4:southeast 5:northeast 6:southwest 7:northwest
using ActionId = int;
constexpr int kNumActions = 8;

struct Delta {
  int dx1;
  int dx2;
};

// (dx1, dx2) for each action under the axis convention of Cell.
Delta action_delta(ActionId a);

// Traversability grid at the compressed (area) resolution, plus the goal.
// Immutable after construction.
class NavWorld {
 public:
  NavWorld(int n, std::vector<std::uint8_t> traversable, Cell goal,
           std::string source_map_id = "", int cell_size = 4);

  int size() const { return n_; }
  int cell_size() const { return cell_size_; }
  Cell goal() const { return goal_; }
  const std::string& source_map_id() const { return source_map_id_; }

  bool in_grid(Cell c) const { return c.x1 >= 0 && c.x1 < n_ && c.x2 >= 0 && c.x2 < n_; }
  bool traversable(Cell c) const {
    return grid_[static_cast<std::size_t>(c.x2) * n_ + c.x1] != 0;
  }
  bool safe(Cell c) const { return in_grid(c) && traversable(c); }

  const std::vector<std::uint8_t>& grid() const { return grid_; }

 private:
  int n_;
  std::vector<std::uint8_t> grid_;  // row-major [x2][x1], 1 = traversable
  Cell goal_;
  std::string source_map_id_;
  int cell_size_;
};

enum class Terminal { None, Success, HitRisky, OffGrid, StepLimit };

struct NavState {
  const NavWorld* world = nullptr;
  Cell pos;
  int step_count = 0;
  Terminal terminal = Terminal::None;

  bool is_terminal() const { return terminal != Terminal::None; }
};

struct StepResult {
  NavState next;
  double reward = 0.0;
};

NavState make_start_state(const NavWorld& world, Cell start);

// Episode length bound used by rollout evaluation; the MDP itself is
// unbounded.
inline int default_max_steps(const NavWorld& world) { return 4 * world.size(); }

// One transition. Reward is +1 exactly when the post-move position is the
// goal, -1 otherwise. Stepping a terminal state throws.
StepResult step(const NavState& s, ActionId a, int max_steps);

// True iff every visited cell is safe and the path ends on the goal.
// Consecutive positions must differ by a valid action delta.
bool is_successful_trajectory(const NavWorld& world, const std::vector<Cell>& positions);

// Sum of gamma^t * r_t; empty input gives 0.
double discounted_return(const std::vector<double>& rewards, double gamma);

}  // namespace marsnav

#endif

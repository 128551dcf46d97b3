#include "marsnav/nav_mdp.hpp"

#include <cmath>
#include <stdexcept>

namespace marsnav {

namespace {
constexpr std::array<Delta, kNumActions> kDeltas = {{
    {+1, 0},   // east
    {0, +1},   // south
    {-1, 0},   // west
    {0, -1},   // north
    {+1, +1},  // southeast
    {+1, -1},  // northeast
    {-1, +1},  // southwest
    {-1, -1},  // northwest
}};
}

Delta action_delta(ActionId a) {
  if (a < 0 || a >= kNumActions) throw std::invalid_argument("action_delta: action out of range");
  return kDeltas[static_cast<std::size_t>(a)];
}

NavWorld::NavWorld(int n, std::vector<std::uint8_t> traversable, Cell goal,
                   std::string source_map_id, int cell_size)
    : n_(n),
      grid_(std::move(traversable)),
      goal_(goal),
      source_map_id_(std::move(source_map_id)),
      cell_size_(cell_size) {
  if (n_ < 2) throw std::invalid_argument("NavWorld: grid size must be at least 2");
  if (grid_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("NavWorld: grid size mismatch");
  if (cell_size_ < 1) throw std::invalid_argument("NavWorld: cell size must be positive");
  if (!in_grid(goal_) || !traversable(goal_))
    throw std::invalid_argument("NavWorld: goal cell must be traversable");
}

NavState make_start_state(const NavWorld& world, Cell start) {
  if (!world.in_grid(start)) throw std::invalid_argument("start cell outside grid");
  NavState s;
  s.world = &world;
  s.pos = start;
  s.step_count = 0;
  s.terminal = Terminal::None;
  return s;
}

StepResult step(const NavState& s, ActionId a, int max_steps) {
  if (s.world == nullptr) throw std::invalid_argument("step: state has no world");
  if (s.is_terminal()) throw std::logic_error("step: cannot step a terminal state");

  const NavWorld& w = *s.world;
  const Delta d = action_delta(a);
  Cell next{s.pos.x1 + d.dx1, s.pos.x2 + d.dx2};

  StepResult r;
  r.next = s;
  r.next.pos = next;
  r.next.step_count = s.step_count + 1;

  if (!w.in_grid(next)) {
    r.next.terminal = Terminal::OffGrid;
    r.reward = -1.0;
  } else if (next == w.goal()) {
    r.next.terminal = Terminal::Success;
    r.reward = +1.0;
  } else if (!w.traversable(next)) {
    r.next.terminal = Terminal::HitRisky;
    r.reward = -1.0;
  } else if (r.next.step_count >= max_steps) {
    r.next.terminal = Terminal::StepLimit;
    r.reward = -1.0;
  } else {
    r.reward = -1.0;
  }
  return r;
}

bool is_successful_trajectory(const NavWorld& world, const std::vector<Cell>& positions) {
  if (positions.empty()) throw std::invalid_argument("trajectory: empty position list");
  for (std::size_t i = 1; i < positions.size(); ++i) {
    int dx1 = positions[i].x1 - positions[i - 1].x1;
    int dx2 = positions[i].x2 - positions[i - 1].x2;
    bool adjacent = (dx1 != 0 || dx2 != 0) && std::abs(dx1) <= 1 && std::abs(dx2) <= 1;
    if (!adjacent) throw std::invalid_argument("trajectory: consecutive cells are not adjacent");
  }
  for (const Cell& c : positions) {
    if (!world.safe(c)) return false;
  }
  return positions.back() == world.goal();
}

double discounted_return(const std::vector<double>& rewards, double gamma) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw std::invalid_argument("discounted_return: gamma must be in (0, 1]");
  double acc = 0.0;
  double g = 1.0;
  for (double r : rewards) {
    acc += g * r;
    g *= gamma;
  }
  return acc;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace marsnav

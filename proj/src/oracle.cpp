#include "kayles/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>

#include "kayles/partitions.hpp"

namespace kayles {

char to_char(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::R: return 'R';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
  }
  return '?';
}

Outcome parse_outcome(std::string_view text) {
  if (text == "L") return Outcome::L;
  if (text == "R") return Outcome::R;
  if (text == "N") return Outcome::N;
  if (text == "P") return Outcome::P;
  throw parse_error("unknown outcome '" + std::string(text) + "'");
}

void Oracle::check_bound(const Position& p) const {
  if (p.total_pins() > bound_) {
    throw bound_error("position " + p.to_string() + " has " + std::to_string(p.total_pins()) +
                      " pins, above the oracle bound of " + std::to_string(bound_) +
                      "; use fast_outcome for large positions");
  }
}

std::optional<bool> Oracle::lookup(const Key& key) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void Oracle::store(Key key, bool value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), value);
}

std::size_t Oracle::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

bool Oracle::wins_moving_first(const Position& p, Player who) {
  check_bound(p);
  if (auto hit = lookup({p, who})) return *hit;
  return solve(p, who);
}

// Depth-first search with an explicit stack; a frame is resolved once one
// child is a loss for the opponent or all children are wins for them.
bool Oracle::solve(const Position& root, Player who) {
  struct Frame {
    Key key;
    std::vector<Position> children;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto push = [&](const Position& p, Player mover) {
    stack.push_back({Key{p, mover}, option_positions(p, mover), 0});
  };
  push(root, who);

  bool last = false;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Player reply = opponent(top.key.who);
    std::optional<bool> result;
    if (top.children.empty()) result = true;

    while (!result && top.next < top.children.size()) {
      auto child = lookup({top.children[top.next], reply});
      if (!child) break;
      if (!*child) result = true;
      ++top.next;
    }
    if (!result && top.next == top.children.size()) result = false;

    if (result) {
      last = *result;
      store(std::move(top.key), *result);
      stack.pop_back();
      continue;
    }
    // The next child is unsolved: descend. `top` is invalidated by push.
    Position child = top.children[top.next];
    push(child, reply);
  }
  return last;
}

Outcome Oracle::misere_outcome(const Position& p) {
  const bool left = wins_moving_first(p, Player::Left);
  const bool right = wins_moving_first(p, Player::Right);
  if (left && right) return Outcome::N;
  if (left) return Outcome::L;
  if (right) return Outcome::R;
  return Outcome::P;
}

Outcome OutcomeTable::at(const Position& p) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const auto& e) { return e.first == p; });
  if (it == entries.end()) throw bound_error("position " + p.to_string() + " not in table");
  return it->second;
}

OutcomeTable outcome_table(Oracle& oracle, std::uint64_t max_pins) {
  if (max_pins > oracle.bound()) {
    throw bound_error("table bound " + std::to_string(max_pins) + " exceeds oracle bound " +
                      std::to_string(oracle.bound()));
  }
  OutcomeTable table;
  table.max_pins = max_pins;
  for (Length m = 0; m <= max_pins; ++m)
    for_each_partition(m, [&](const Position& p) {
      table.entries.emplace_back(p, oracle.misere_outcome(p));
    });
  return table;
}

void write_table(std::ostream& out, const OutcomeTable& table) {
  for (const auto& [p, o] : table.entries) out << p.to_string() << '\t' << to_char(o) << '\n';
}

}  // namespace kayles

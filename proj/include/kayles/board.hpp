// Concrete boards for interactive play: rows of cells holding nothing, a
// Left square, or half of a Right domino.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kayles/position.hpp"
#include "kayles/strategy.hpp"

namespace kayles {

inline constexpr std::size_t max_board_rows = 16;
inline constexpr std::size_t max_row_length = 60;

struct illegal_placement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Placement {
  std::size_t row = 0;
  std::size_t cell = 0;
  Player player = Player::Left;
  bool operator==(const Placement&) const = default;
};

class BoardState {
 public:
  // Rows of the given lengths, all empty. Throws validation_error when
  // there are no rows, more than 16, or a length outside 1..60.
  BoardState(const std::vector<std::size_t>& row_lengths, Player first);

  // Rebuilds a board by replaying `history` on empty rows.
  static BoardState replay(const std::vector<std::size_t>& row_lengths, Player first,
                           const std::vector<Placement>& history);

  // Rows over {'.', 'L', 'R'}; dominoes appear as "RR".
  const std::vector<std::string>& rows() const { return rows_; }
  std::vector<std::size_t> row_lengths() const;
  Player to_move() const { return to_move_; }
  Player first() const { return first_; }
  const std::vector<Placement>& history() const { return history_; }

  // Misère: the player to move with no placement wins.
  bool finished() const { return !has_move(projection(), to_move_); }
  std::optional<Player> winner() const;

  // Multiset of maximal empty runs across all rows.
  Position projection() const;

  bool is_legal(const Placement& p) const;
  void apply(const Placement& p);
  std::vector<Placement> legal_placements() const;

  // Cell-level realisation of an abstract move: the leftmost (row-major)
  // maximal empty run whose length equals the chosen component.
  Placement realize(const Move& m) const;

 private:
  std::string check(const Placement& p) const;

  std::vector<std::string> rows_;
  Player first_;
  Player to_move_;
  std::vector<Placement> history_;
};

// Engine reply: best_move on the projection, mapped to cells.
std::optional<Placement> engine_placement(const BoardState& board);

}  // namespace kayles

#include "kayles/board.hpp"

namespace kayles {

BoardState::BoardState(const std::vector<std::size_t>& row_lengths, Player first)
    : first_(first), to_move_(first) {
  if (row_lengths.empty()) throw validation_error("a board needs at least one row");
  if (row_lengths.size() > max_board_rows)
    throw validation_error("at most " + std::to_string(max_board_rows) + " rows allowed");
  for (std::size_t n : row_lengths) {
    if (n < 1 || n > max_row_length)
      throw validation_error("row length " + std::to_string(n) + " outside 1.." +
                             std::to_string(max_row_length));
    rows_.emplace_back(n, '.');
  }
}

BoardState BoardState::replay(const std::vector<std::size_t>& row_lengths, Player first,
                              const std::vector<Placement>& history) {
  BoardState board(row_lengths, first);
  for (const Placement& p : history) board.apply(p);
  return board;
}

std::vector<std::size_t> BoardState::row_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& row : rows_) out.push_back(row.size());
  return out;
}

std::optional<Player> BoardState::winner() const {
  if (!finished()) return std::nullopt;
  return to_move_;
}

Position BoardState::projection() const {
  std::vector<Length> runs;
  for (const auto& row : rows_) {
    Length run = 0;
    for (char c : row) {
      if (c == '.') {
        ++run;
      } else {
        runs.push_back(run);
        run = 0;
      }
    }
    runs.push_back(run);
  }
  return Position(std::move(runs));
}

std::string BoardState::check(const Placement& p) const {
  if (finished()) return "game is finished";
  if (p.player != to_move_) return std::string("it is ") + to_char(to_move_) + "'s turn";
  if (p.row >= rows_.size()) return "row " + std::to_string(p.row) + " out of range";
  const auto& row = rows_[p.row];
  const std::size_t width = p.player == Player::Left ? 1 : 2;
  if (p.cell >= row.size() || row.size() - p.cell < width)
    return "cell " + std::to_string(p.cell) + " out of range for row of length " +
           std::to_string(row.size());
  for (std::size_t c = p.cell; c < p.cell + width; ++c)
    if (row[c] != '.') return "cell " + std::to_string(c) + " is occupied";
  return {};
}

bool BoardState::is_legal(const Placement& p) const { return check(p).empty(); }

void BoardState::apply(const Placement& p) {
  if (auto why = check(p); !why.empty()) throw illegal_placement(why);
  auto& row = rows_[p.row];
  if (p.player == Player::Left) {
    row[p.cell] = 'L';
  } else {
    row[p.cell] = 'R';
    row[p.cell + 1] = 'R';
  }
  history_.push_back(p);
  to_move_ = opponent(to_move_);
}

std::vector<Placement> BoardState::legal_placements() const {
  std::vector<Placement> out;
  if (finished()) return out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      Placement p{r, c, to_move_};
      if (is_legal(p)) out.push_back(p);
    }
  return out;
}

Placement BoardState::realize(const Move& m) const {
  const Position pos = projection();
  if (m.component_index >= pos.size()) throw validation_error("move does not fit this board");
  const Length want = pos[m.component_index];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    std::size_t c = 0;
    while (c < row.size()) {
      if (row[c] != '.') {
        ++c;
        continue;
      }
      std::size_t end = c;
      while (end < row.size() && row[end] == '.') ++end;
      if (end - c == want) return Placement{r, c + m.offset, m.player};
      c = end;
    }
  }
  throw validation_error("no empty run of length " + std::to_string(want));
}

std::optional<Placement> engine_placement(const BoardState& board) {
  if (board.finished()) return std::nullopt;
  const auto advice = best_move(board.projection(), board.to_move());
  if (!advice.move) return std::nullopt;
  return board.realize(*advice.move);
}

}  // namespace kayles

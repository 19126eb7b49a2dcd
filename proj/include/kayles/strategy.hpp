// Optimal play. The closed-form rule picks a move at (or one cell in from)
// the end of a strip chosen by its length mod 3; every choice is validated
// against fast_outcome before it is returned.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kayles/algebra.hpp"
#include "kayles/position.hpp"

namespace kayles {

struct MoveAdvice {
  enum class Kind : std::uint8_t {
    winning_move,
    no_winning_move,
    // Misère: the player to move cannot move and so has already won.
    no_legal_move,
  };

  Kind kind = Kind::no_legal_move;
  Outcome position_outcome = Outcome::N;
  // winning_move: the chosen move. no_winning_move: a legal move the engine
  // can still play (first in enumeration order), labelled losing.
  std::optional<Move> move;
  std::optional<Position> result;
  std::optional<Outcome> result_outcome;
  // Set when the closed-form choice failed validation and a scan over all
  // options supplied the move instead.
  bool used_fallback = false;
  std::string discrepancy;
};

// True when `who` has just moved to `result` and the opponent, moving
// next, loses.
bool leaves_opponent_lost(const Position& result, Player who);

MoveAdvice best_move(const Position& p, Player who);

struct AnnotatedMove {
  Move move;
  Position result;
  Outcome result_outcome;
  bool winning;
};

// Every distinct option, annotated; same order as moves().
std::vector<AnnotatedMove> winning_moves(const Position& p, Player who);

// Human-readable: "play square at end of strip 4 → 3+5 (P)".
std::string describe(const MoveAdvice& advice, const Position& p);

}  // namespace kayles

#include "kayles/strategy.hpp"

namespace kayles {

bool leaves_opponent_lost(const Position& result, Player who) {
  return !mover_wins(fast_outcome(result), opponent(who));
}

std::vector<AnnotatedMove> winning_moves(const Position& p, Player who) {
  std::vector<AnnotatedMove> out;
  for (auto& [move, result] : moves(p, who)) {
    const Outcome o = fast_outcome(result);
    const bool win = !mover_wins(o, opponent(who));
    out.push_back({move, std::move(result), o, win});
  }
  return out;
}

namespace {

// First component (hence longest) with n % 3 == residue and n >= min_len.
std::optional<std::size_t> find_strip(const Position& p, Length residue, Length min_len) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] % 3 == residue && p[i] >= min_len) return i;
  return std::nullopt;
}

std::optional<Move> rule_move(const Position& p, Player who) {
  if (who == Player::Left) {
    for (Length residue : {1u, 2u, 0u})
      if (auto i = find_strip(p, residue, 1)) return Move{who, *i, 0};
    return std::nullopt;
  }
  if (auto i = find_strip(p, 2, 2)) return Move{who, *i, p[*i] - 2};
  if (auto i = find_strip(p, 1, 4)) return Move{who, *i, 1};
  if (auto i = find_strip(p, 0, 3)) return Move{who, *i, p[*i] - 2};
  return std::nullopt;
}

}  // namespace

MoveAdvice best_move(const Position& p, Player who) {
  MoveAdvice advice;
  advice.position_outcome = fast_outcome(p);
  if (!has_move(p, who)) {
    advice.kind = MoveAdvice::Kind::no_legal_move;
    return advice;
  }

  auto fill = [&](const Move& m, Position result) {
    advice.result_outcome = fast_outcome(result);
    advice.move = m;
    advice.result = std::move(result);
  };

  if (!mover_wins(advice.position_outcome, who)) {
    advice.kind = MoveAdvice::Kind::no_winning_move;
    auto opts = moves(p, who);
    fill(opts.front().move, std::move(opts.front().result));
    return advice;
  }

  advice.kind = MoveAdvice::Kind::winning_move;
  if (auto m = rule_move(p, who)) {
    Position result = apply_move(p, *m);
    if (leaves_opponent_lost(result, who)) {
      fill(*m, std::move(result));
      return advice;
    }
    advice.discrepancy = "rule move fails validation: " + p.to_string() + " -> " +
                         result.to_string();
  } else {
    advice.discrepancy = "no rule move applies to " + p.to_string();
  }

  advice.used_fallback = true;
  for (auto& a : winning_moves(p, who)) {
    if (a.winning) {
      fill(a.move, std::move(a.result));
      return advice;
    }
  }
  advice.kind = MoveAdvice::Kind::no_winning_move;
  advice.discrepancy += "; no option validates";
  auto opts = moves(p, who);
  fill(opts.front().move, std::move(opts.front().result));
  return advice;
}

namespace {

std::string where(const Move& m, Length n) {
  const std::string strip = " strip " + std::to_string(n);
  if (m.player == Player::Left) {
    if (m.offset == 0 || m.offset == n - 1) return "square at end of" + strip;
    return "square at cell " + std::to_string(m.offset) + " of" + strip;
  }
  if (m.offset == 0 || m.offset == n - 2) return "domino at end of" + strip;
  if (m.offset == 1 || m.offset + 3 == n) return "domino one away from the end of" + strip;
  return "domino at cells " + std::to_string(m.offset) + "-" + std::to_string(m.offset + 1) +
         " of" + strip;
}

}  // namespace

std::string describe(const MoveAdvice& advice, const Position& p) {
  using Kind = MoveAdvice::Kind;
  if (advice.kind == Kind::no_legal_move) return "no legal move: immediate win";
  const std::string play = where(*advice.move, p[advice.move->component_index]) + " → " +
                           advice.result->to_string() + " (" + to_char(*advice.result_outcome) +
                           ")";
  if (advice.kind == Kind::winning_move) return "play " + play;
  return std::string("no winning move (") + to_char(advice.position_outcome) +
         "); fallback: " + play;
}

}  // namespace kayles

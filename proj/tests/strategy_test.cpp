#include <doctest.h>

#include "kayles/oracle.hpp"
#include "kayles/partitions.hpp"
#include "kayles/strategy.hpp"

using namespace kayles;
using Kind = MoveAdvice::Kind;

TEST_CASE("best_move examples") {
  SUBCASE("Left on 4+5 plays the end of the 4-strip") {
    const auto a = best_move({4, 5}, Player::Left);
    REQUIRE(a.kind == Kind::winning_move);
    const Position p{5, 4};
    CHECK(p[a.move->component_index] == 4);
    CHECK(a.move->offset == 0);
    CHECK(*a.result == Position{3, 5});
    CHECK(*a.result_outcome == Outcome::P);
    CHECK_FALSE(a.used_fallback);
  }
  SUBCASE("Right on 4+5 plays the end of the 5-strip") {
    const auto a = best_move({4, 5}, Player::Right);
    REQUIRE(a.kind == Kind::winning_move);
    CHECK(Position{5, 4}[a.move->component_index] == 5);
    CHECK(a.move->offset == 3);
    CHECK(*a.result == Position{4, 3});
    CHECK(*a.result_outcome == Outcome::R);
  }
  SUBCASE("Left on 3 (all strips divisible by 3)") {
    const auto a = best_move({3}, Player::Left);
    REQUIRE(a.kind == Kind::winning_move);
    CHECK(*a.result == Position{2});
    CHECK(*a.result_outcome == Outcome::P);
  }
  SUBCASE("Left on 4 has no winning move but still gets a legal one") {
    const auto a = best_move({4}, Player::Left);
    CHECK(a.kind == Kind::no_winning_move);
    CHECK(a.position_outcome == Outcome::R);
    REQUIRE(a.move);
    CHECK(apply_move({4}, *a.move) == *a.result);
  }
  SUBCASE("no legal move") {
    CHECK(best_move({1, 1}, Player::Right).kind == Kind::no_legal_move);
    CHECK(best_move({}, Player::Left).kind == Kind::no_legal_move);
  }
  SUBCASE("Right one away from the end of a 1 (mod 3) strip") {
    // 7: x = 1, y = 0 is R; no 2 (mod 3) strip, so domino at offset 1.
    const auto a = best_move({7}, Player::Right);
    REQUIRE(a.kind == Kind::winning_move);
    CHECK(a.move->offset == 1);
    CHECK(*a.result == Position{4, 1});
  }
  SUBCASE("ties go to the longest strip") {
    const auto a = best_move({4, 5, 5, 7}, Player::Left);
    REQUIRE(a.kind == Kind::winning_move);
    CHECK(a.move->component_index == 0);
    CHECK(*a.result == Position{6, 5, 5, 4});
    const auto b = best_move({8, 5, 2}, Player::Right);
    REQUIRE(b.kind == Kind::winning_move);
    CHECK(*b.result == Position{6, 5, 2});
    CHECK(b.move->component_index == 0);
  }
}

TEST_CASE("winning_moves") {
  const auto three = winning_moves({3}, Player::Left);
  REQUIRE(three.size() == 2);
  CHECK(three[0].result == Position{2});
  CHECK(three[0].result_outcome == Outcome::P);
  CHECK(three[0].winning);
  CHECK(three[1].result == Position{1, 1});
  CHECK(three[1].result_outcome == Outcome::R);
  CHECK_FALSE(three[1].winning);

  CHECK(winning_moves({1}, Player::Right).empty());

  const auto two = winning_moves({2}, Player::Right);
  REQUIRE(two.size() == 1);
  CHECK(two[0].result == Position{});
  CHECK(two[0].result_outcome == Outcome::N);
  CHECK_FALSE(two[0].winning);
}

TEST_CASE("strategy is sound against the oracle up to 18 pins") {
  Oracle oracle;
  for (const Position& p : positions_up_to(18)) {
    for (Player who : {Player::Left, Player::Right}) {
      const auto a = best_move(p, who);
      if (!has_move(p, who)) {
        CHECK(a.kind == Kind::no_legal_move);
        continue;
      }
      const bool can_win = oracle.wins_moving_first(p, who);
      CHECK((a.kind == Kind::winning_move) == can_win);
      REQUIRE(a.move);
      CHECK(apply_move(p, *a.move) == *a.result);
      if (can_win) {
        CHECK_FALSE(oracle.wins_moving_first(*a.result, opponent(who)));
        CHECK_FALSE(a.used_fallback);
      }
      for (const auto& m : winning_moves(p, who))
        CHECK(m.winning == !oracle.wins_moving_first(m.result, opponent(who)));
    }
  }
}

TEST_CASE("Left clears a single square when she can win") {
  Oracle oracle;
  for (const Position& g : positions_up_to(15)) {
    const Position p = g + Position{1};
    if (!oracle.wins_moving_first(p, Player::Left)) continue;
    // Removing the square leaves g.
    CHECK_FALSE(oracle.wins_moving_first(g, Player::Right));
    const auto options = winning_moves(p, Player::Left);
    const auto it = std::find_if(options.begin(), options.end(),
                                 [&](const AnnotatedMove& m) { return m.result == g; });
    REQUIRE(it != options.end());
    CHECK(it->winning);
  }
}

TEST_CASE("describe") {
  CHECK(describe(best_move({4, 5}, Player::Left), {4, 5}) ==
        "play square at end of strip 4 → 5+3 (P)");
  CHECK(describe(best_move({7}, Player::Right), {7}) ==
        "play domino one away from the end of strip 7 → 4+1 (R)");
  CHECK(describe(best_move({1}, Player::Right), {1}) == "no legal move: immediate win");
  CHECK(describe(best_move({4}, Player::Left), {4}) ==
        "no winning move (R); fallback: square at end of strip 4 → 3 (N)");
}

TEST_CASE("large positions are handled in closed form") {
  const Position big{1'000'000, 999'998, 500'000};
  const auto a = best_move(big, Player::Right);
  CHECK(a.position_outcome == fast_outcome(big));
  if (a.kind == Kind::winning_move) CHECK(leaves_opponent_lost(*a.result, Player::Right));
}

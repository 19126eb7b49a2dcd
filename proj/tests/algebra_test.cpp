#include <doctest.h>

#include <random>

#include "kayles/algebra.hpp"
#include "kayles/partitions.hpp"

using namespace kayles;

TEST_CASE("reduce_strip") {
  CHECK(reduce_strip(3) == ReducedForm{1, 1});
  CHECK(reduce_strip(4) == ReducedForm{2, 1});
  CHECK(reduce_strip(5) == ReducedForm{1, 2});
  CHECK(reduce_strip(0) == ReducedForm{0, 0});
  CHECK(reduce_strip(1) == ReducedForm{1, 0});
  CHECK(reduce_strip(2) == ReducedForm{0, 1});
  CHECK(reduce_strip(6) == ReducedForm{2, 2});
  CHECK(reduce_strip(1'000'000) == ReducedForm{333'334, 333'333});
}

TEST_CASE("reduce_position does not cancel") {
  CHECK(reduce_position({4, 5}) == ReducedForm{3, 3});
  CHECK(reduce_position({}) == ReducedForm{0, 0});
  CHECK(reduce_position({6}) == ReducedForm{2, 2});
  CHECK(reduce_position({1, 2}) == ReducedForm{1, 1});
  CHECK(reduce_strip(7).as_position() == Position{2, 2, 1, 1, 1});
}

TEST_CASE("monoid_value") {
  CHECK(monoid_value({1, 2}).v == 0);
  CHECK(monoid_value({3}).v == 0);
  CHECK(monoid_value({4, 4, 5}).v == 1);
  CHECK(monoid_value({5}).v == -1);
}

TEST_CASE("outcome_from_value") {
  CHECK(outcome_from_value({0}) == Outcome::N);
  CHECK(outcome_from_value({-1}) == Outcome::P);
  CHECK(outcome_from_value({7}) == Outcome::R);
  CHECK(outcome_from_value({-6}) == Outcome::N);
  CHECK(outcome_from_value({-2}) == Outcome::R);
  CHECK(outcome_from_value({-4}) == Outcome::P);
  for (std::int64_t v = -50; v <= 50; ++v) CHECK(outcome_from_value({v}) != Outcome::L);
}

TEST_CASE("fast_outcome_kj") {
  CHECK(fast_outcome_kj(2, 2) == Outcome::N);
  CHECK(fast_outcome_kj(3, 1) == Outcome::R);
  CHECK(fast_outcome_kj(1, 3) == Outcome::R);
  CHECK(fast_outcome_kj(0, 1) == Outcome::P);
  CHECK(fast_outcome_kj(0, 0) == Outcome::N);
  CHECK(fast_outcome_kj(1, 0) == Outcome::R);
  CHECK(fast_outcome_kj(0, 3) == Outcome::N);
}

TEST_CASE("fast_outcome") {
  CHECK(fast_outcome({4, 5}) == Outcome::N);
  // x = 0, y = 2: x + 2y = 4 = 1 (mod 3). The oracle agrees (oracle_test).
  CHECK(fast_outcome({5, 5}) == Outcome::R);
  CHECK(fast_outcome({1}) == Outcome::R);
  CHECK(fast_outcome({3, 3, 3}) == Outcome::N);
  CHECK(census({4, 5, 6, 7, 8}) == ComponentCensus{2, 2});
}

TEST_CASE("outcome_geq lattice") {
  CHECK(outcome_geq(Outcome::L, Outcome::P));
  CHECK_FALSE(outcome_geq(Outcome::N, Outcome::P));
  CHECK_FALSE(outcome_geq(Outcome::P, Outcome::N));
  CHECK(outcome_geq(Outcome::P, Outcome::R));
  CHECK_FALSE(outcome_geq(Outcome::R, Outcome::P));
  const Outcome all[] = {Outcome::L, Outcome::R, Outcome::N, Outcome::P};
  for (Outcome a : all) {
    CHECK(outcome_geq(a, a));
    CHECK(outcome_geq(Outcome::L, a));
    CHECK(outcome_geq(a, Outcome::R));
    for (Outcome b : all) {
      if (a != b) CHECK_FALSE((outcome_geq(a, b) && outcome_geq(b, a)));
      for (Outcome c : all)
        if (outcome_geq(a, b) && outcome_geq(b, c)) CHECK(outcome_geq(a, c));
    }
  }
}

TEST_CASE("closed forms agree with the oracle up to 18 pins") {
  Oracle oracle;
  for (const Position& p : positions_up_to(18)) {
    const Outcome truth = oracle.misere_outcome(p);
    CHECK(fast_outcome(p) == truth);
    CHECK(outcome_from_value(monoid_value(p)) == truth);
    const auto c = census(p);
    CHECK(monoid_value(p).v == static_cast<std::int64_t>(c.x) - static_cast<std::int64_t>(c.y));
    CHECK(c.x + c.y <= p.size());
  }
}

TEST_CASE("value homomorphism on random pairs") {
  std::mt19937_64 rng(2024);
  auto random_position = [&] {
    std::vector<Length> parts(rng() % 12);
    for (auto& n : parts) n = static_cast<Length>(rng() % 1000);
    return Position(parts);
  };
  for (int i = 0; i < 2000; ++i) {
    const Position p = random_position(), q = random_position();
    CHECK(monoid_value(p + q) == monoid_value(p) + monoid_value(q));
    CHECK(outcome_from_value(monoid_value(p)) == fast_outcome(p));
  }
}

TEST_CASE("indistinguishable_bounded") {
  Oracle oracle;
  SUBCASE("2 vs 1+1 split at the empty X") {
    for (std::uint64_t b : {0, 3, 6}) {
      const auto v = indistinguishable_bounded(oracle, {2}, {1, 1}, b);
      REQUIRE(v.counterexample);
      CHECK(v.counterexample->x == Position{});
      CHECK(v.counterexample->g_outcome == Outcome::P);
      CHECK(v.counterexample->h_outcome == Outcome::R);
    }
  }
  SUBCASE("S3 = S1 + S2") {
    const auto v = indistinguishable_bounded(oracle, {3}, {1, 2}, 10);
    CHECK(v.holds());
    CHECK(v.bound == 10);
  }
  SUBCASE("S6 = 0") { CHECK(indistinguishable_bounded(oracle, {6}, {}, 10).holds()); }
  SUBCASE("first witness in enumeration order") {
    // 1 and 0 differ already at X = 0.
    const auto v = indistinguishable_bounded(oracle, {1}, {}, 5);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->x == Position{});
    // 2+2 and 1 agree at X = 0 (both R); the witness comes later and is re-checkable.
    const auto w = indistinguishable_bounded(oracle, {2, 2}, {1}, 6);
    REQUIRE(w.counterexample);
    CHECK(w.counterexample->x == Position{1});
    CHECK(oracle.misere_outcome(Position{2, 2} + w.counterexample->x) ==
          w.counterexample->g_outcome);
    CHECK(oracle.misere_outcome(Position{1} + w.counterexample->x) == w.counterexample->h_outcome);
  }
  SUBCASE("bound errors") {
    Oracle small(10);
    CHECK_THROWS_AS(indistinguishable_bounded(small, {6}, {}, 5), bound_error);
    CHECK_NOTHROW(indistinguishable_bounded(small, {6}, {}, 4));
  }
}

TEST_CASE("geq_bounded") {
  Oracle oracle;
  const auto forward = geq_bounded(oracle, {2}, {1, 1}, 9);
  CHECK(forward.holds());
  CHECK(forward.strict());
  REQUIRE(forward.strictness);
  CHECK(forward.strictness->x == Position{});

  const auto backward = geq_bounded(oracle, {1, 1}, {2}, 0);
  REQUIRE(backward.counterexample);
  CHECK(backward.counterexample->x == Position{});
  CHECK(backward.counterexample->g_outcome == Outcome::R);
  CHECK(backward.counterexample->h_outcome == Outcome::P);

  for (const Position& g : positions_up_to(6)) {
    const auto v = geq_bounded(oracle, g, g, 6);
    CHECK(v.holds());
    CHECK_FALSE(v.strict());
  }
}

TEST_CASE("verdict records") {
  Oracle oracle;
  CHECK(indistinguishable_bounded(oracle, {2}, {1, 1}, 6).to_record() ==
        "claim=2 == 1+1\tbound=6\twitness=0\toutcomes=P/R");
  CHECK(indistinguishable_bounded(oracle, {3}, {2, 1}, 4).to_record() ==
        "claim=3 == 2+1\tbound=4\twitness=none\toutcomes=-");
  CHECK(geq_bounded(oracle, {2}, {1, 1}, 9).to_record() ==
        "claim=2 >= 1+1\tbound=9\twitness=none\toutcomes=-\tstrict_witness=0\tstrict_outcomes=P/R");
}

#include "kayles/algebra.hpp"

#include <algorithm>

#include "kayles/partitions.hpp"

namespace kayles {

Position ReducedForm::as_position() const {
  std::vector<Length> parts(k1, 1);
  parts.insert(parts.end(), k2, 2);
  return Position(std::move(parts));
}

ReducedForm reduce_strip(Length n) {
  const std::uint64_t k = n / 3;
  switch (n % 3) {
    case 0: return {k, k};
    case 1: return {k + 1, k};
    default: return {k, k + 1};
  }
}

ReducedForm reduce_position(const Position& p) {
  ReducedForm sum;
  for (Length n : p.components()) sum += reduce_strip(n);
  return sum;
}

ComponentCensus census(const Position& p) {
  ComponentCensus c;
  for (Length n : p.components()) {
    if (n % 3 == 1) ++c.x;
    else if (n % 3 == 2) ++c.y;
  }
  return c;
}

MonoidValue monoid_value(const Position& p) {
  const ReducedForm r = reduce_position(p);
  return {static_cast<std::int64_t>(r.k1) - static_cast<std::int64_t>(r.k2)};
}

Outcome outcome_from_value(MonoidValue value) {
  if (value.v > 0) return Outcome::R;
  if (value.v == 0) return Outcome::N;
  switch ((-value.v) % 3) {
    case 0: return Outcome::N;
    case 1: return Outcome::P;
    default: return Outcome::R;
  }
}

Outcome fast_outcome_kj(std::uint64_t k, std::uint64_t j) {
  if (k == j) return Outcome::N;
  if (k > j) return Outcome::R;
  switch ((k + 2 * j) % 3) {
    case 0: return Outcome::N;
    case 1: return Outcome::R;
    default: return Outcome::P;
  }
}

Outcome fast_outcome(const Position& p) {
  const ComponentCensus c = census(p);
  return fast_outcome_kj(c.x, c.y);
}

bool outcome_geq(Outcome a, Outcome b) {
  return a == b || a == Outcome::L || b == Outcome::R;
}

bool mover_wins(Outcome o, Player who) {
  if (o == Outcome::N) return true;
  return who == Player::Left ? o == Outcome::L : o == Outcome::R;
}

namespace {

void check_bounds(const Oracle& oracle, const Position& g, const Position& h,
                  std::uint64_t bound) {
  const auto need = std::max(g.total_pins(), h.total_pins()) + bound;
  if (need > oracle.bound()) {
    throw bound_error("testing " + g.to_string() + " against " + h.to_string() + " with X up to " +
                      std::to_string(bound) + " pins needs an oracle bound of " +
                      std::to_string(need) + " (have " + std::to_string(oracle.bound()) + ")");
  }
}

template <class Check>
DistinguishVerdict scan(Oracle& oracle, Relation relation, const Position& g, const Position& h,
                        std::uint64_t bound, Check&& violates) {
  check_bounds(oracle, g, h, bound);
  DistinguishVerdict verdict{relation, g, h, bound, std::nullopt, std::nullopt};
  for (Length m = 0; m <= bound && !verdict.counterexample; ++m) {
    for_each_partition(m, [&](const Position& x) {
      if (verdict.counterexample) return;
      const Outcome og = oracle.misere_outcome(g + x);
      const Outcome oh = oracle.misere_outcome(h + x);
      if (violates(og, oh)) verdict.counterexample = Witness{x, og, oh};
      else if (og != oh && !verdict.strictness) verdict.strictness = Witness{x, og, oh};
    });
  }
  return verdict;
}

std::string outcomes_field(const std::optional<Witness>& w) {
  if (!w) return "-";
  return std::string{to_char(w->g_outcome), '/', to_char(w->h_outcome)};
}

}  // namespace

DistinguishVerdict indistinguishable_bounded(Oracle& oracle, const Position& g, const Position& h,
                                             std::uint64_t bound) {
  return scan(oracle, Relation::equivalent, g, h, bound,
              [](Outcome a, Outcome b) { return a != b; });
}

DistinguishVerdict geq_bounded(Oracle& oracle, const Position& g, const Position& h,
                               std::uint64_t bound) {
  return scan(oracle, Relation::geq, g, h, bound,
              [](Outcome a, Outcome b) { return !outcome_geq(a, b); });
}

std::string DistinguishVerdict::to_record() const {
  const char* op = relation == Relation::equivalent ? " == " : " >= ";
  std::string rec = "claim=" + g.to_string() + op + h.to_string();
  rec += "\tbound=" + std::to_string(bound);
  rec += "\twitness=" + (counterexample ? counterexample->x.to_string() : std::string("none"));
  rec += "\toutcomes=" + outcomes_field(counterexample);
  if (relation == Relation::geq) {
    rec += "\tstrict_witness=" + (strictness ? strictness->x.to_string() : std::string("none"));
    rec += "\tstrict_outcomes=" + outcomes_field(strictness);
  }
  return rec;
}

}  // namespace kayles

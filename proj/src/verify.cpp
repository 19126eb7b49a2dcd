#include "kayles/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "kayles/algebra.hpp"
#include "kayles/partitions.hpp"
#include "kayles/strategy.hpp"

namespace kayles::verify {

const char* to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::refuted: return "refuted";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Outcome option_game_outcome(Oracle& oracle, const std::vector<Position>& left,
                            const std::vector<Position>& right, const Position& x) {
  std::map<std::pair<Position, Player>, bool> memo;
  auto wins = [&](auto&& self, const Position& rest, Player who) -> bool {
    auto key = std::make_pair(rest, who);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& own = who == Player::Left ? left : right;
    bool any_move = false;
    bool result = false;
    for (const Position& opt : own) {
      any_move = true;
      if (!oracle.wins_moving_first(opt + rest, opponent(who))) {
        result = true;
        break;
      }
    }
    if (!result) {
      for (const Position& next : option_positions(rest, who)) {
        any_move = true;
        if (!self(self, next, opponent(who))) {
          result = true;
          break;
        }
      }
    }
    if (!any_move) result = true;
    memo.emplace(std::move(key), result);
    return result;
  };
  const bool l = wins(wins, x, Player::Left);
  const bool r = wins(wins, x, Player::Right);
  if (l && r) return Outcome::N;
  if (l) return Outcome::L;
  if (r) return Outcome::R;
  return Outcome::P;
}

namespace {

std::string kv(const char* key, std::uint64_t value) {
  return std::string(key) + "=" + std::to_string(value);
}

std::string ones_twos(std::uint64_t k, std::uint64_t j) {
  return ReducedForm{k, j}.as_position().to_string();
}

ClaimReport start(std::string id, std::string params) {
  ClaimReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  return r;
}

void refute(ClaimReport& r, std::string witness, std::string reason) {
  r.status = Status::refuted;
  r.witness = std::move(witness);
  r.reason = std::move(reason);
}

std::string outcome_pair(Outcome a, Outcome b) {
  return std::string{to_char(a), ' ', 'v', 's', ' ', to_char(b)};
}

ClaimReport noleft(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("lemma-noleft", kv("max_pins", b.max_pins));
  for (const Position& p : positions_up_to(static_cast<Length>(b.max_pins))) {
    ++r.instances;
    if (oracle.misere_outcome(p) == Outcome::L) {
      refute(r, p.to_string(), "left-win position");
      break;
    }
  }
  return r;
}

ClaimReport noleft_mod3(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("lemma-noleft-mod3", kv("max_pins", b.max_pins));
  for (const Position& p : positions_up_to(static_cast<Length>(b.max_pins))) {
    ++r.instances;
    const Outcome o = oracle.misere_outcome(p);
    bool ok = false;
    switch (p.total_pins() % 3) {
      case 0: ok = o == Outcome::R || o == Outcome::N; break;
      case 1: ok = o == Outcome::R; break;
      default: ok = o == Outcome::R || o == Outcome::P; break;
    }
    if (!ok) {
      refute(r, p.to_string(), std::string("outcome ") + to_char(o) + " with " +
                                   std::to_string(p.total_pins()) + " pins");
      break;
    }
  }
  return r;
}

ClaimReport kstrat(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("lemma-kstrat", kv("g_pins", b.kstrat_g) + " " + kv("x_pins", b.kstrat_x));
  const auto xs = positions_up_to(static_cast<Length>(b.kstrat_x));
  for (const Position& g : positions_up_to(static_cast<Length>(b.kstrat_g))) {
    for (const Position& gl : option_positions(g, Player::Left)) {
      const Position rhs = gl + Position{1};
      for (const Position& x : xs) {
        ++r.instances;
        const Outcome a = oracle.misere_outcome(g + x);
        const Outcome c = oracle.misere_outcome(rhs + x);
        if (!outcome_geq(a, c)) {
          refute(r, "G=" + g.to_string() + " GL=" + gl.to_string() + " X=" + x.to_string(),
                 outcome_pair(a, c));
          return r;
        }
      }
    }
  }
  return r;
}

ClaimReport leftprefers(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("corollary-leftprefers", kv("max_pins", b.max_pins));
  if (b.max_pins == 0) return r;
  for (const Position& g : positions_up_to(static_cast<Length>(b.max_pins - 1))) {
    const Position with_square = g + Position{1};
    if (!oracle.wins_moving_first(with_square, Player::Left)) continue;
    ++r.instances;
    if (oracle.wins_moving_first(g, Player::Right)) {
      refute(r, "G=" + g.to_string(), "Left wins G+1 but not by moving to G");
      break;
    }
  }
  return r;
}

ClaimReport cor211(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("corollary-211", kv("x_pins", b.geq211_x));
  const auto forward = geq_bounded(oracle, {2}, {1, 1}, b.geq211_x);
  const auto backward = geq_bounded(oracle, {1, 1}, {2}, 0);
  r.instances = 2;
  if (!forward.holds()) {
    refute(r, "X=" + forward.counterexample->x.to_string(), "2 >= 1+1 fails");
  } else if (!forward.strict()) {
    refute(r, "none", "2 and 1+1 never distinguished");
  } else if (backward.holds()) {
    refute(r, "X=0", "1+1 >= 2 not refuted");
  }
  return r;
}

ClaimReport reducelemma(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("lemma-reducelemma",
                kv("k_plus_2j", b.reducelemma_pins) + " " + kv("x_pins", b.reducelemma_x));
  const auto xs = positions_up_to(static_cast<Length>(b.reducelemma_x));
  for (std::uint64_t k = 1; k <= b.reducelemma_pins; ++k) {
    for (std::uint64_t j = 0; k + 2 * j <= b.reducelemma_pins; ++j) {
      const Position sum = ReducedForm{k, j}.as_position();
      const std::vector<Position> left{ReducedForm{k - 1, j}.as_position()};
      std::vector<Position> right;
      if (j > 0) right.push_back(ReducedForm{k, j - 1}.as_position());
      for (const Position& x : xs) {
        ++r.instances;
        const Outcome full = oracle.misere_outcome(sum + x);
        const Outcome pruned = option_game_outcome(oracle, left, right, x);
        if (full != pruned) {
          refute(r, "G=" + sum.to_string() + " X=" + x.to_string(), outcome_pair(full, pruned));
          return r;
        }
      }
    }
  }
  return r;
}

ClaimReport kreduce(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("thm-kreduce", kv("n_max", b.strip_max) + " " + kv("x_pins", b.reduce_x_bound));
  for (Length n = 0; n <= b.strip_max; ++n) {
    ++r.instances;
    const auto v =
        indistinguishable_bounded(oracle, {n}, reduce_strip(n).as_position(), b.reduce_x_bound);
    if (!v.holds()) {
      refute(r, "n=" + std::to_string(n) + " X=" + v.counterexample->x.to_string(),
             outcome_pair(v.counterexample->g_outcome, v.counterexample->h_outcome));
      break;
    }
  }
  return r;
}

ClaimReport outcome12(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("thm-12outcome", kv("k_plus_2j", b.max_pins));
  for (std::uint64_t k = 0; k <= b.max_pins; ++k) {
    for (std::uint64_t j = 0; k + 2 * j <= b.max_pins; ++j) {
      ++r.instances;
      const Outcome fast = fast_outcome_kj(k, j);
      const Outcome truth = oracle.misere_outcome(ReducedForm{k, j}.as_position());
      if (fast != truth) {
        refute(r, ones_twos(k, j), outcome_pair(fast, truth));
        return r;
      }
    }
  }
  return r;
}

ClaimReport zerocor(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("corollary-zerocor", kv("x_pins", b.x_bound));
  const Position zero_pair{1, 2};
  for (const Position& x : positions_up_to(static_cast<Length>(b.x_bound))) {
    ++r.instances;
    const Outcome with = oracle.misere_outcome(zero_pair + x);
    const Outcome without = oracle.misere_outcome(x);
    if (with != without) {
      refute(r, "X=" + x.to_string(), outcome_pair(with, without));
      break;
    }
  }
  return r;
}

ClaimReport szero(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("corollary-szero", kv("n_max", b.szero_n) + " " + kv("x_pins", b.szero_x));
  for (Length n = 3; n <= b.szero_n; n += 3) {
    ++r.instances;
    const auto v = indistinguishable_bounded(oracle, {n}, {}, b.szero_x);
    if (!v.holds()) {
      refute(r, "n=" + std::to_string(n) + " X=" + v.counterexample->x.to_string(),
             outcome_pair(v.counterexample->g_outcome, v.counterexample->h_outcome));
      break;
    }
  }
  return r;
}

ClaimReport partition(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("monoid-partition", kv("max_pins", b.max_pins));
  for (const Position& p : positions_up_to(static_cast<Length>(b.max_pins))) {
    ++r.instances;
    const Outcome by_value = outcome_from_value(monoid_value(p));
    const Outcome truth = oracle.misere_outcome(p);
    if (by_value != truth || by_value == Outcome::L) {
      refute(r, p.to_string(), outcome_pair(by_value, truth));
      break;
    }
  }
  return r;
}

ClaimReport xy(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("thm-xy", kv("max_pins", b.max_pins));
  for (const Position& p : positions_up_to(static_cast<Length>(b.max_pins))) {
    ++r.instances;
    const Outcome fast = fast_outcome(p);
    const Outcome truth = oracle.misere_outcome(p);
    if (fast != truth) {
      refute(r, p.to_string(), outcome_pair(fast, truth));
      break;
    }
  }
  return r;
}

ClaimReport howtowin(Oracle& oracle, const SuiteBounds& b) {
  ClaimReport r = start("thm-howtowin", kv("max_pins", b.max_pins));
  for (const Position& p : positions_up_to(static_cast<Length>(b.max_pins))) {
    for (Player who : {Player::Left, Player::Right}) {
      ++r.instances;
      const auto advice = best_move(p, who);
      const bool can_win = oracle.wins_moving_first(p, who);
      const std::string where = p.to_string() + " " + to_char(who);
      using Kind = MoveAdvice::Kind;
      if (advice.kind == Kind::no_legal_move) {
        if (has_move(p, who)) {
          refute(r, where, "reported no legal move");
          return r;
        }
        continue;
      }
      if ((advice.kind == Kind::winning_move) != can_win) {
        refute(r, where, can_win ? "missed a win" : "claimed a win in a lost position");
        return r;
      }
      if (advice.kind == Kind::winning_move) {
        if (oracle.wins_moving_first(*advice.result, opponent(who))) {
          refute(r, where, "move to " + advice.result->to_string() + " does not win");
          return r;
        }
        if (advice.used_fallback) {
          refute(r, where, "closed-form rule needed fallback: " + advice.discrepancy);
          return r;
        }
      }
    }
  }
  return r;
}

ClaimReport inverse_pair(Oracle& oracle, const SuiteBounds&) {
  ClaimReport r = start("inverse-asymmetry", "");
  r.instances = 4;
  const Outcome s1 = oracle.misere_outcome({1});
  const Outcome s2 = oracle.misere_outcome({2});
  const Outcome pair = oracle.misere_outcome({1, 2});
  const Outcome zero = oracle.misere_outcome({});
  if (s1 != Outcome::R) refute(r, "1", std::string("outcome ") + to_char(s1));
  else if (s2 != Outcome::P) refute(r, "2", std::string("outcome ") + to_char(s2));
  else if (pair != Outcome::N || zero != Outcome::N)
    refute(r, "1+2", outcome_pair(pair, zero));
  return r;
}

std::uint64_t exhaustive_pins(const SuiteBounds& b) { return b.max_pins; }

}  // namespace

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all{
      {"lemma-noleft", "no position is a Left win", exhaustive_pins, noleft},
      {"lemma-noleft-mod3", "outcome classes by total pins mod 3", exhaustive_pins, noleft_mod3},
      {"lemma-kstrat", "G >= G^L + S1 for every Left option",
       [](const SuiteBounds& b) { return b.kstrat_g + b.kstrat_x + 1; }, kstrat},
      {"corollary-leftprefers", "Left wins G+S1 by moving to G", exhaustive_pins, leftprefers},
      {"corollary-211", "S2 strictly exceeds S1+S1",
       [](const SuiteBounds& b) { return 2 + b.geq211_x; }, cor211},
      {"lemma-reducelemma", "kS1+jS2 equals its pruned option game",
       [](const SuiteBounds& b) { return b.reducelemma_pins + b.reducelemma_x; }, reducelemma},
      {"thm-kreduce", "S_n equals its S1/S2 reduction",
       [](const SuiteBounds& b) { return std::uint64_t{b.strip_max} + b.reduce_x_bound; },
       kreduce},
      {"thm-12outcome", "outcome of kS1+jS2", exhaustive_pins, outcome12},
      {"corollary-zerocor", "S1+S2 is equivalent to zero",
       [](const SuiteBounds& b) { return 3 + b.x_bound; }, zerocor},
      {"corollary-szero", "S_3k is equivalent to zero",
       [](const SuiteBounds& b) { return std::uint64_t{b.szero_n} + b.szero_x; }, szero},
      {"monoid-partition", "outcome is a function of the monoid value", exhaustive_pins,
       partition},
      {"thm-xy", "outcome from the residue census", exhaustive_pins, xy},
      {"thm-howtowin", "closed-form winning moves", exhaustive_pins, howtowin},
      {"inverse-asymmetry", "S1 in R, S2 in P, S1+S2 in N", [](const SuiteBounds&) {
         return std::uint64_t{3};
       },
       inverse_pair},
  };
  return all;
}

std::vector<ClaimReport> run_suite(const std::vector<std::string>& ids, const SuiteBounds& bounds) {
  std::vector<const Claim*> selected;
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const Claim& c : claims()) selected.push_back(&c);
      continue;
    }
    auto it = std::find_if(claims().begin(), claims().end(),
                           [&](const Claim& c) { return c.id == id; });
    if (it == claims().end()) throw std::invalid_argument("unknown claim id '" + id + "'");
    selected.push_back(&*it);
  }

  std::uint64_t need = default_oracle_bound;
  for (const Claim* c : selected) need = std::max(need, c->oracle_pins(bounds));
  Oracle oracle(need);

  std::vector<ClaimReport> reports;
  for (const Claim* c : selected) {
    const auto start = std::chrono::steady_clock::now();
    ClaimReport report = c->run(oracle, bounds);
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    reports.push_back(std::move(report));
  }
  return reports;
}

void write_text(std::ostream& out, const std::vector<ClaimReport>& reports, bool timing) {
  for (const ClaimReport& r : reports) {
    out << to_string(r.status) << '\t' << r.id << '\t' << (r.params.empty() ? "-" : r.params)
        << "\tinstances=" << r.instances;
    if (r.status == Status::refuted) out << "\twitness=" << r.witness << "\t" << r.reason;
    if (r.status == Status::skipped) out << "\treason=" << r.reason;
    if (timing) out << '\t' << r.millis << "ms";
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ClaimReport>& reports, bool timing) {
  nlohmann::json records = nlohmann::json::array();
  for (const ClaimReport& r : reports) {
    nlohmann::json rec{{"id", r.id},
                       {"params", r.params},
                       {"status", to_string(r.status)},
                       {"witness", r.witness.empty() ? nlohmann::json(nullptr)
                                                     : nlohmann::json(r.witness)},
                       {"count", r.instances}};
    if (!r.reason.empty()) rec["reason"] = r.reason;
    rec["millis"] = timing ? r.millis : 0;
    records.push_back(std::move(rec));
  }
  out << records.dump(2) << '\n';
}

}  // namespace kayles::verify

// Desk-scale re-verification of the structural results for misère Partizan
// Kayles. Each claim is an (id, generator, checker) record; a run
// enumerates every in-bound instance and compares against the oracle.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kayles/oracle.hpp"
#include "kayles/position.hpp"

namespace kayles::verify {

struct SuiteBounds {
  // Outcome-exhaustive claims: every position with at most this many pins.
  std::uint64_t max_pins = 18;
  // Summand universe for the zero-element claim.
  std::uint64_t x_bound = 15;

  Length strip_max = 20;           // reductions checked for n <= strip_max
  std::uint64_t reduce_x_bound = 12;
  std::uint64_t kstrat_g = 10;     // G pins in the domination lemma
  std::uint64_t kstrat_x = 8;      // X pins in the domination lemma
  Length szero_n = 9;              // strips 3k <= szero_n
  std::uint64_t szero_x = 9;
  std::uint64_t geq211_x = 9;
  std::uint64_t reducelemma_pins = 12;  // k + 2j
  std::uint64_t reducelemma_x = 8;
};

enum class Status : std::uint8_t { confirmed, refuted, skipped };

const char* to_string(Status s);

struct ClaimReport {
  std::string id;
  std::string params;
  Status status = Status::confirmed;
  // refuted: the offending instance, re-checkable with the oracle.
  std::string witness;
  std::string reason;
  std::uint64_t instances = 0;
  std::int64_t millis = 0;
};

struct Claim {
  std::string id;
  std::string summary;
  // Largest position (in pins) the claim hands to the oracle.
  std::uint64_t (*oracle_pins)(const SuiteBounds&);
  ClaimReport (*run)(Oracle&, const SuiteBounds&);
};

const std::vector<Claim>& claims();

// "all" expands to every claim. Unknown ids throw std::invalid_argument.
std::vector<ClaimReport> run_suite(const std::vector<std::string>& ids, const SuiteBounds& bounds);

// Outcome of {left options | right options} + x, where the options are
// kayles positions and x is played out in full.
Outcome option_game_outcome(Oracle& oracle, const std::vector<Position>& left,
                            const std::vector<Position>& right, const Position& x);

void write_text(std::ostream& out, const std::vector<ClaimReport>& reports, bool timing = true);
void write_json(std::ostream& out, const std::vector<ClaimReport>& reports, bool timing = true);

}  // namespace kayles::verify

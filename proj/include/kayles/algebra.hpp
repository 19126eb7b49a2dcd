// Closed forms for misère Partizan Kayles.
//
// Every strip is equivalent (modulo sums of strips) to a sum of single
// squares S1 and dominoes S2, and S1 + S2 is equivalent to zero, so a
// position's class is an integer: (#S1) - (#S2). The outcome is a function
// of that integer alone. The bounded testers at the bottom refute or
// confirm equivalences against the exhaustive oracle.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kayles/oracle.hpp"
#include "kayles/position.hpp"

namespace kayles {

// k1 * S1 + k2 * S2, without cancellation.
struct ReducedForm {
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;

  ReducedForm& operator+=(const ReducedForm& o) {
    k1 += o.k1;
    k2 += o.k2;
    return *this;
  }
  bool operator==(const ReducedForm&) const = default;

  // As a concrete position of k1 ones and k2 twos.
  Position as_position() const;
};

struct MonoidValue {
  std::int64_t v = 0;

  MonoidValue operator+(MonoidValue o) const { return {v + o.v}; }
  bool operator==(const MonoidValue&) const = default;
};

// Counts of components with length 1 and 2 (mod 3).
struct ComponentCensus {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool operator==(const ComponentCensus&) const = default;
};

ReducedForm reduce_strip(Length n);
ReducedForm reduce_position(const Position& p);
ComponentCensus census(const Position& p);
MonoidValue monoid_value(const Position& p);

Outcome outcome_from_value(MonoidValue value);

// Outcome of k*S1 + j*S2, for all k, j >= 0.
Outcome fast_outcome_kj(std::uint64_t k, std::uint64_t j);

// Outcome from the residue census; O(#components).
Outcome fast_outcome(const Position& p);

// Left-favourable partial order: L on top, R at the bottom, N and P
// incomparable.
bool outcome_geq(Outcome a, Outcome b);

// Whether `who`, moving first in a position of outcome `o`, wins.
bool mover_wins(Outcome o, Player who);

struct Witness {
  Position x;
  Outcome g_outcome;
  Outcome h_outcome;
  bool operator==(const Witness&) const = default;
};

enum class Relation : std::uint8_t { equivalent, geq };

struct DistinguishVerdict {
  Relation relation = Relation::equivalent;
  Position g;
  Position h;
  std::uint64_t bound = 0;
  // First X (in enumeration order) violating the relation.
  std::optional<Witness> counterexample;
  // geq only: first X where the outcomes differ, proving strictness.
  std::optional<Witness> strictness;

  bool holds() const { return !counterexample.has_value(); }
  bool strict() const { return holds() && strictness.has_value(); }

  // One tab-separated record: claim, bound, witness, outcomes.
  std::string to_record() const;
};

// X ranges over every position with at most `bound` pins, m ascending and
// descending-lexicographic within m; the first witness in that order is
// reported.
DistinguishVerdict indistinguishable_bounded(Oracle& oracle, const Position& g, const Position& h,
                                             std::uint64_t bound);
DistinguishVerdict geq_bounded(Oracle& oracle, const Position& g, const Position& h,
                               std::uint64_t bound);

}  // namespace kayles

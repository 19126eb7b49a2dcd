// Exhaustive misère solver. This is the ground truth that every closed-form
// result in the library is checked against; it knows nothing about strip
// reductions or residues mod 3.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kayles/position.hpp"

namespace kayles {

enum class Outcome : std::uint8_t { L, R, N, P };

char to_char(Outcome o);
Outcome parse_outcome(std::string_view text);

struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_oracle_bound = 30;

class Oracle {
 public:
  explicit Oracle(std::uint64_t max_pins = default_oracle_bound) : bound_(max_pins) {}

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  std::uint64_t bound() const { return bound_; }

  // Misère: a player with no legal move wins.
  bool wins_moving_first(const Position& p, Player who);

  Outcome misere_outcome(const Position& p);

  std::size_t memo_size() const;

 private:
  struct Key {
    Position position;
    Player who;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return k.position.hash() * 2 + static_cast<std::size_t>(k.who);
    }
  };

  void check_bound(const Position& p) const;
  std::optional<bool> lookup(const Key& key) const;
  void store(Key key, bool value);
  bool solve(const Position& root, Player who);

  std::uint64_t bound_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

struct OutcomeTable {
  std::uint64_t max_pins = 0;
  // Partition order: m ascending, descending-lexicographic within m.
  std::vector<std::pair<Position, Outcome>> entries;

  Outcome at(const Position& p) const;
};

OutcomeTable outcome_table(Oracle& oracle, std::uint64_t max_pins);

// `<position>\t<outcome>` per line.
void write_table(std::ostream& out, const OutcomeTable& table);

}  // namespace kayles

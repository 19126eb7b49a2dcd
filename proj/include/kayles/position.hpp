// Partizan Kayles positions: disjunctive sums of 1xn strips.
//
// Left removes a single pin (places a square), Right removes two adjacent
// pins (places a domino). A position is the multiset of strip lengths.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kayles {

using Length = std::uint32_t;

inline constexpr Length max_strip_length = 1'000'000;
inline constexpr std::size_t max_component_count = 10'000;

enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

char to_char(Player p);
Player parse_player(std::string_view text);

struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sorted-descending multiset of nonzero strip lengths. Zero-length strips
// are the empty game and are dropped on construction.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Length> lengths);
  explicit Position(std::vector<Length> lengths);

  std::span<const Length> components() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Length operator[](std::size_t i) const { return parts_[i]; }

  std::uint64_t total_pins() const;

  // Multiset union (disjunctive sum).
  Position operator+(const Position& other) const;

  bool operator==(const Position&) const = default;
  // Orders by component vector lexicographically (descending parts first).
  std::strong_ordering operator<=>(const Position& other) const;

  std::size_t hash() const;

  // Canonical form: `+`-separated descending lengths, "0" when empty.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Length> parts_;
};

Position parse_position(std::string_view text);

struct Move {
  Player player = Player::Left;
  std::size_t component_index = 0;
  Length offset = 0;

  bool operator==(const Move&) const = default;
};

struct Option {
  Move move;
  Position result;
};

// Distinct options of `p` for `who`; each entry carries one witness move.
std::vector<Option> moves(const Position& p, Player who);

// Only the resulting positions, in the same order as moves().
std::vector<Position> option_positions(const Position& p, Player who);

Position apply_move(const Position& p, const Move& m);

bool has_move(const Position& p, Player who);

}  // namespace kayles

template <>
struct std::hash<kayles::Position> {
  std::size_t operator()(const kayles::Position& p) const noexcept { return p.hash(); }
};

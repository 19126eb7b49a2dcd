#include "kayles/position.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kayles {

char to_char(Player p) { return p == Player::Left ? 'L' : 'R'; }

Player parse_player(std::string_view text) {
  if (text == "L" || text == "l" || text == "left" || text == "Left") return Player::Left;
  if (text == "R" || text == "r" || text == "right" || text == "Right") return Player::Right;
  throw parse_error("unknown player '" + std::string(text) + "' (expected L or R)");
}

Position::Position(std::initializer_list<Length> lengths) : parts_(lengths) { normalize(); }

Position::Position(std::vector<Length> lengths) : parts_(std::move(lengths)) { normalize(); }

void Position::normalize() {
  std::erase(parts_, Length{0});
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::uint64_t Position::total_pins() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Position Position::operator+(const Position& other) const {
  std::vector<Length> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  Position sum;
  sum.parts_ = std::move(merged);
  return sum;
}

std::strong_ordering Position::operator<=>(const Position& other) const {
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                other.parts_.begin(), other.parts_.end());
}

std::size_t Position::hash() const {
  // FNV-1a over the component words.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Length n : parts_) {
    h ^= n;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string Position::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

bool is_separator(char c) {
  return c == '+' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

Position parse_position(std::string_view text) {
  std::vector<Length> lengths;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range ||
        (ec == std::errc() && end == token.data() + token.size() && value > max_strip_length)) {
      throw parse_error("strip length '" + std::string(token) + "' exceeds maximum " +
                        std::to_string(max_strip_length));
    }
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw parse_error("invalid token '" + std::string(token) +
                        "': expected a non-negative integer");
    }
    if (value != 0) lengths.push_back(static_cast<Length>(value));
    if (lengths.size() > max_component_count) {
      throw parse_error("too many components (maximum " + std::to_string(max_component_count) +
                        ")");
    }
  }
  return Position(std::move(lengths));
}

namespace {

// Replace component `index` of `p` by the two pieces `a` and `b`.
Position split(const Position& p, std::size_t index, Length a, Length b) {
  auto parts = p.components();
  std::vector<Length> out;
  out.reserve(parts.size() + 1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i != index) out.push_back(parts[i]);
  out.push_back(a);
  out.push_back(b);
  return Position(std::move(out));
}

Length piece_width(Player who) { return who == Player::Left ? 1 : 2; }

}  // namespace

std::vector<Option> moves(const Position& p, Player who) {
  std::vector<Option> out;
  const Length width = piece_width(who);
  auto parts = p.components();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // Equal components yield identical options.
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    const Length n = parts[i];
    if (n < width) continue;
    const Length rest = n - width;
    // Offsets o and rest - o give the same split.
    for (Length offset = 0; offset <= rest / 2; ++offset) {
      out.push_back({Move{who, i, offset}, split(p, i, offset, rest - offset)});
    }
  }
  return out;
}

std::vector<Position> option_positions(const Position& p, Player who) {
  std::vector<Position> out;
  for (auto& opt : moves(p, who)) out.push_back(std::move(opt.result));
  return out;
}

Position apply_move(const Position& p, const Move& m) {
  if (m.component_index >= p.size()) {
    throw validation_error("component index " + std::to_string(m.component_index) +
                           " out of range for position " + p.to_string());
  }
  const Length n = p[m.component_index];
  const Length width = piece_width(m.player);
  if (n < width || m.offset > n - width) {
    throw validation_error("offset " + std::to_string(m.offset) + " is not a legal " +
                           (m.player == Player::Left ? "square" : "domino") +
                           " placement on a strip of length " + std::to_string(n));
  }
  return split(p, m.component_index, m.offset, n - width - m.offset);
}

bool has_move(const Position& p, Player who) {
  if (p.empty()) return false;
  return who == Player::Left || p[0] >= 2;
}

}  // namespace kayles

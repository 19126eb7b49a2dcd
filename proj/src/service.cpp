#include "kayles/service.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace kayles::service {

namespace {

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string player_str(Player p) { return std::string(1, to_char(p)); }

void apply_engine_reply(GameSession& s, std::vector<Placement>& applied) {
  if (s.board.finished() || s.board.to_move() != s.engine) return;
  if (auto reply = engine_placement(s.board)) {
    s.board.apply(*reply);
    applied.push_back(*reply);
  }
}

}  // namespace

Analysis analyze(const BoardState& board) {
  Analysis a{board.projection(), {}, {}, board.to_move(), board.winner(), {}};
  a.value = monoid_value(a.position);
  a.outcome = fast_outcome(a.position);
  for (const Placement& p : board.legal_placements()) {
    BoardState next = board;
    next.apply(p);
    const Outcome o = fast_outcome(next.projection());
    a.moves.push_back({p, o, leaves_opponent_lost(next.projection(), p.player)});
  }
  return a;
}

std::shared_ptr<GameService::Slot> GameService::find(const std::string& id) const {
  std::shared_lock lock(store_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw not_found_error("unknown game '" + id + "'");
  return it->second;
}

std::string GameService::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(rng() ^ (++counter_ << 48)));
  return buf;
}

GameSession GameService::create_game(const std::vector<std::size_t>& rows, Player human,
                                     Player first) {
  auto slot = std::make_shared<Slot>(
      GameSession{{}, BoardState(rows, first), human, opponent(human), now_ms(), 0});
  GameSession& s = slot->session;
  s.updated_ms = s.created_ms;
  std::vector<Placement> applied;
  apply_engine_reply(s, applied);

  std::unique_lock lock(store_mutex_);
  do {
    s.id = fresh_id();
  } while (sessions_.contains(s.id));
  sessions_.emplace(s.id, slot);
  return s;
}

GameSession GameService::get_state(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  return slot->session;
}

PlacementResult GameService::apply_placement(const std::string& id, const Placement& placement) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  GameSession& s = slot->session;
  if (placement.player != s.human)
    throw illegal_placement(std::string("the human plays ") + to_char(s.human));
  std::vector<Placement> applied{placement};
  s.board.apply(placement);
  apply_engine_reply(s, applied);
  s.updated_ms = now_ms();
  return {std::move(applied), s};
}

PlacementResult GameService::engine_move(const std::string& id) {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  GameSession& s = slot->session;
  if (s.board.finished()) throw illegal_placement("game is finished");
  if (s.board.to_move() != s.engine) throw illegal_placement("it is the human's turn");
  std::vector<Placement> applied;
  apply_engine_reply(s, applied);
  s.updated_ms = now_ms();
  return {std::move(applied), s};
}

Analysis GameService::analysis(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mutex);
  return analyze(slot->session.board);
}

std::size_t GameService::size() const {
  std::shared_lock lock(store_mutex_);
  return sessions_.size();
}

std::vector<std::string> GameService::ids() const {
  std::shared_lock lock(store_mutex_);
  std::vector<std::string> out;
  for (const auto& [id, slot] : sessions_) out.push_back(id);
  return out;
}

nlohmann::json GameService::snapshot_json() const {
  nlohmann::json sessions = nlohmann::json::object();
  std::shared_lock lock(store_mutex_);
  for (const auto& [id, slot] : sessions_) {
    std::lock_guard session_lock(slot->mutex);
    sessions[id] = to_json(slot->session);
  }
  return {{"v", 1}, {"sessions", std::move(sessions)}};
}

void GameService::snapshot(const std::filesystem::path& path) const {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write snapshot " + tmp.string());
    out << snapshot_json().dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

RestoreResult GameService::restore(const std::filesystem::path& path) {
  std::map<std::string, std::shared_ptr<Slot>> loaded;
  RestoreResult result;
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      const auto doc = nlohmann::json::parse(in);
      if (doc.at("v").get<int>() != 1) throw std::runtime_error("unsupported snapshot version");
      for (const auto& [id, value] : doc.at("sessions").items()) {
        GameSession s = session_from_json(value);
        if (s.id != id) throw std::runtime_error("session id mismatch for '" + id + "'");
        loaded.emplace(id, std::make_shared<Slot>(std::move(s)));
      }
    } catch (const std::exception& e) {
      loaded.clear();
      result.warning = "ignoring corrupt snapshot " + path.string() + ": " + e.what();
      std::cerr << "warning: " << result.warning << '\n';
    }
  }
  std::unique_lock lock(store_mutex_);
  sessions_ = std::move(loaded);
  result.sessions = sessions_.size();
  return result;
}

nlohmann::json to_json(const Placement& p) {
  return {{"row", p.row}, {"cell", p.cell}, {"player", player_str(p.player)}};
}

Placement placement_from_json(const nlohmann::json& j) {
  return {j.at("row").get<std::size_t>(), j.at("cell").get<std::size_t>(),
          parse_player(j.at("player").get<std::string>())};
}

nlohmann::json board_json(const BoardState& board) { return board.rows(); }

nlohmann::json to_json(const GameSession& s) {
  nlohmann::json history = nlohmann::json::array();
  for (const Placement& p : s.board.history()) history.push_back(to_json(p));
  const auto winner = s.board.winner();
  return {{"id", s.id},
          {"rows", s.board.row_lengths()},
          {"board", board_json(s.board)},
          {"first", player_str(s.board.first())},
          {"toMove", player_str(s.board.to_move())},
          {"status", winner ? "finished" : "in-progress"},
          {"winner", winner ? nlohmann::json(player_str(*winner)) : nlohmann::json(nullptr)},
          {"human", player_str(s.human)},
          {"engine", player_str(s.engine)},
          {"history", std::move(history)},
          {"position", s.board.projection().to_string()},
          {"createdAt", s.created_ms},
          {"updatedAt", s.updated_ms}};
}

GameSession session_from_json(const nlohmann::json& j) {
  std::vector<Placement> history;
  for (const auto& p : j.at("history")) history.push_back(placement_from_json(p));
  GameSession s{j.at("id").get<std::string>(),
                BoardState::replay(j.at("rows").get<std::vector<std::size_t>>(),
                                   parse_player(j.at("first").get<std::string>()), history),
                parse_player(j.at("human").get<std::string>()),
                parse_player(j.at("engine").get<std::string>()),
                j.at("createdAt").get<std::int64_t>(),
                j.at("updatedAt").get<std::int64_t>()};
  if (s.engine != opponent(s.human)) throw std::runtime_error("engine must oppose the human");
  if (j.at("board").get<std::vector<std::string>>() != s.board.rows())
    throw std::runtime_error("board does not match history for '" + s.id + "'");
  return s;
}

nlohmann::json to_json(const Analysis& a) {
  nlohmann::json moves = nlohmann::json::array();
  for (const MoveReport& m : a.moves) {
    nlohmann::json entry = to_json(m.placement);
    entry["resultOutcome"] = std::string(1, to_char(m.result_outcome));
    entry["winning"] = m.winning;
    moves.push_back(std::move(entry));
  }
  return {{"position", a.position.to_string()},
          {"value", a.value.v},
          {"outcome", std::string(1, to_char(a.outcome))},
          {"toMove", player_str(a.to_move)},
          {"status", a.winner ? "finished" : "in-progress"},
          {"winner", a.winner ? nlohmann::json(player_str(*a.winner)) : nlohmann::json(nullptr)},
          {"moves", std::move(moves)}};
}

nlohmann::json to_json(const PlacementResult& r) {
  nlohmann::json applied = nlohmann::json::array();
  for (const Placement& p : r.applied) applied.push_back(to_json(p));
  const auto winner = r.session.board.winner();
  return {{"id", r.session.id},
          {"applied", std::move(applied)},
          {"board", board_json(r.session.board)},
          {"toMove", player_str(r.session.board.to_move())},
          {"status", winner ? "finished" : "in-progress"},
          {"winner", winner ? nlohmann::json(player_str(*winner)) : nlohmann::json(nullptr)}};
}

}  // namespace kayles::service

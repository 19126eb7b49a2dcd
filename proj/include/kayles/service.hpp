// Human-vs-engine game sessions and their JSON/HTTP surface.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kayles/board.hpp"

namespace httplib {
class Server;
}

namespace kayles::service {

struct not_found_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameSession {
  std::string id;
  BoardState board;
  Player human = Player::Left;
  Player engine = Player::Right;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
};

struct MoveReport {
  Placement placement;
  Outcome result_outcome;
  bool winning;
};

struct Analysis {
  Position position;
  MonoidValue value;
  Outcome outcome;
  Player to_move;
  std::optional<Player> winner;
  std::vector<MoveReport> moves;
};

struct PlacementResult {
  std::vector<Placement> applied;
  GameSession session;
};

struct RestoreResult {
  std::size_t sessions = 0;
  // Non-empty when the file existed but could not be used.
  std::string warning;
};

class GameService {
 public:
  GameService() = default;

  // If the engine moves first its placement is applied before returning.
  GameSession create_game(const std::vector<std::size_t>& rows, Player human, Player first);
  GameSession get_state(const std::string& id) const;
  // Applies the human placement and, when the game continues, the engine
  // reply. Throws illegal_placement or not_found_error.
  PlacementResult apply_placement(const std::string& id, const Placement& placement);
  // Applies the engine's move when it is the engine's turn.
  PlacementResult engine_move(const std::string& id);
  Analysis analysis(const std::string& id) const;

  std::size_t size() const;
  std::vector<std::string> ids() const;

  nlohmann::json snapshot_json() const;
  void snapshot(const std::filesystem::path& path) const;
  // Replaces the store. Missing file: empty store. Corrupt file: empty
  // store plus a warning.
  RestoreResult restore(const std::filesystem::path& path);

 private:
  struct Slot {
    explicit Slot(GameSession s) : session(std::move(s)) {}
    mutable std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::shared_mutex store_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t counter_ = 0;
};

Analysis analyze(const BoardState& board);

nlohmann::json to_json(const Placement& p);
Placement placement_from_json(const nlohmann::json& j);
nlohmann::json board_json(const BoardState& board);
nlohmann::json to_json(const GameSession& s);
GameSession session_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const PlacementResult& r);

// Registers the game API. With a snapshot path, POST /snapshot writes the
// store to it on demand.
void mount_routes(httplib::Server& server, GameService& games,
                  std::optional<std::filesystem::path> snapshot_path = std::nullopt);

}  // namespace kayles::service

#include <httplib.h>

#include "kayles/service.hpp"

namespace kayles::service {

namespace {

void send(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send(res, status, {{"error", message}});
}

// Runs `handler`, mapping library exceptions to HTTP statuses.
template <class Handler>
void guarded(httplib::Response& res, Handler&& handler) {
  try {
    handler();
  } catch (const not_found_error& e) {
    send_error(res, 404, e.what());
  } catch (const illegal_placement& e) {
    send_error(res, 409, e.what());
  } catch (const validation_error& e) {
    send_error(res, 400, e.what());
  } catch (const parse_error& e) {
    send_error(res, 400, e.what());
  } catch (const nlohmann::json::exception& e) {
    send_error(res, 400, std::string("bad request body: ") + e.what());
  }
}

}  // namespace

void mount_routes(httplib::Server& server, GameService& games,
                  std::optional<std::filesystem::path> snapshot_path) {
  server.Post("/games", [&games](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto body = nlohmann::json::parse(req.body);
      const auto rows = body.at("rows").get<std::vector<std::size_t>>();
      const Player human = parse_player(body.at("human").get<std::string>());
      const Player first = parse_player(body.value("first", std::string("L")));
      const GameSession s = games.create_game(rows, human, first);
      nlohmann::json view = to_json(s);
      send(res, 201, view);
    });
  });

  server.Get(R"(/games/([0-9a-f]+))", [&games](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 200, to_json(games.get_state(req.matches[1]))); });
  });

  server.Post(R"(/games/([0-9a-f]+)/placements)",
              [&games](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  const auto pl = placement_from_json(nlohmann::json::parse(req.body));
                  send(res, 200, to_json(games.apply_placement(req.matches[1], pl)));
                });
              });

  server.Post(R"(/games/([0-9a-f]+)/engine-move)",
              [&games](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] { send(res, 200, to_json(games.engine_move(req.matches[1]))); });
              });

  server.Get(R"(/games/([0-9a-f]+)/analysis)",
             [&games](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { send(res, 200, to_json(games.analysis(req.matches[1]))); });
             });

  if (snapshot_path) {
    server.Post("/snapshot", [&games, path = *snapshot_path](const httplib::Request&,
                                                              httplib::Response& res) {
      try {
        games.snapshot(path);
        send(res, 200, {{"path", path.string()}, {"sessions", games.size()}});
      } catch (const std::exception& e) {
        send_error(res, 500, e.what());
      }
    });
  }
}

}  // namespace kayles::service

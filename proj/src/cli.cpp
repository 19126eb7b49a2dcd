#include "kayles/cli.hpp"

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "kayles/algebra.hpp"
#include "kayles/oracle.hpp"
#include "kayles/service.hpp"
#include "kayles/strategy.hpp"
#include "kayles/verify.hpp"

namespace kayles::cli {

namespace {

constexpr int exit_usage = 2;
constexpr int exit_disagree = 3;

std::string signed_value(std::int64_t v) {
  // U+2212 MINUS SIGN
  return v < 0 ? "−" + std::to_string(-v) : std::to_string(v);
}

std::string reduced_text(const ReducedForm& r) {
  std::string out;
  if (r.k1) out += std::to_string(r.k1) + "×S1";
  if (r.k2) out += (out.empty() ? "" : " + ") + std::to_string(r.k2) + "×S2";
  return out.empty() ? "0" : out;
}

}  // namespace

int cmd_outcome(const std::string& text, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const Position p = parse_position(text);
  const Outcome fast = fast_outcome(p);
  std::optional<Outcome> exact;
  if (p.total_pins() <= cfg.oracle_bound) {
    Oracle oracle(cfg.oracle_bound);
    exact = oracle.misere_outcome(p);
  }
  const bool disagree = exact && *exact != fast;

  if (cfg.format == Format::structured) {
    out << "position=" << p.to_string() << '\n'
        << "pins=" << p.total_pins() << '\n'
        << "value=" << monoid_value(p).v << '\n'
        << "fast=" << to_char(fast) << '\n'
        << "oracle=" << (exact ? std::string(1, to_char(*exact)) : std::string("skipped")) << '\n'
        << "outcome=" << to_char(fast) << '\n';
  } else if (disagree) {
    out << to_char(fast) << " (oracle says " << to_char(*exact) << ")\n";
  } else if (exact) {
    out << to_char(fast) << '\n';
  } else {
    out << to_char(fast) << " (fast formula only: " << p.total_pins()
        << " pins exceeds oracle bound " << cfg.oracle_bound << ")\n";
  }
  if (disagree) {
    err << "error: closed form and oracle disagree on " << p.to_string() << '\n';
    return exit_disagree;
  }
  return 0;
}

int cmd_reduce(const std::string& text, const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Position p = parse_position(text);
  const ReducedForm r = reduce_position(p);
  const MonoidValue v = monoid_value(p);
  if (cfg.format == Format::structured) {
    out << "position=" << p.to_string() << '\n'
        << "k1=" << r.k1 << '\n'
        << "k2=" << r.k2 << '\n'
        << "value=" << v.v << '\n';
  } else {
    out << reduced_text(r) << " (value " << signed_value(v.v) << ")\n";
  }
  return 0;
}

int cmd_best_move(const std::string& text, const std::string& player, const CliConfig& cfg,
                  std::ostream& out, std::ostream& err) {
  const Position p = parse_position(text);
  const Player who = parse_player(player);
  const MoveAdvice advice = best_move(p, who);
  if (cfg.format == Format::structured) {
    static constexpr const char* kinds[] = {"winning_move", "no_winning_move", "no_legal_move"};
    out << "position=" << p.to_string() << '\n'
        << "player=" << to_char(who) << '\n'
        << "outcome=" << to_char(advice.position_outcome) << '\n'
        << "advice=" << kinds[static_cast<int>(advice.kind)] << '\n';
    if (advice.move) {
      out << "component=" << p[advice.move->component_index] << '\n'
          << "offset=" << advice.move->offset << '\n'
          << "result=" << advice.result->to_string() << '\n'
          << "result_outcome=" << to_char(*advice.result_outcome) << '\n';
    }
    out << "fallback=" << (advice.used_fallback ? "true" : "false") << '\n';
  } else {
    out << describe(advice, p) << '\n';
  }
  if (advice.used_fallback) {
    err << "warning: " << advice.discrepancy << '\n';
    return exit_disagree;
  }
  return 0;
}

int cmd_equiv(const std::string& a, const std::string& b, std::uint64_t bound, bool geq,
              const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const Position g = parse_position(a);
  const Position h = parse_position(b);
  Oracle oracle(std::max(cfg.oracle_bound, std::max(g.total_pins(), h.total_pins()) + bound));
  const DistinguishVerdict v =
      geq ? geq_bounded(oracle, g, h, bound) : indistinguishable_bounded(oracle, g, h, bound);

  if (cfg.format == Format::structured) {
    std::string rec = v.to_record();
    std::replace(rec.begin(), rec.end(), '\t', '\n');
    out << rec << '\n';
  } else if (const auto& w = v.counterexample) {
    out << (geq ? "refuted by X=" : "distinguished by X=") << w->x.to_string() << ": "
        << to_char(w->g_outcome) << " vs " << to_char(w->h_outcome) << '\n';
  } else if (geq) {
    out << "no counterexample up to bound " << bound;
    if (const auto& s = v.strictness)
      out << "; strict: X=" << s->x.to_string() << " (" << to_char(s->g_outcome) << " vs "
          << to_char(s->h_outcome) << ")";
    out << '\n';
  } else {
    out << "indistinguishable up to bound " << bound << '\n';
  }
  return v.holds() ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& suite, const CliConfig& cfg, bool timing,
               const std::string& json_path, std::ostream& out, std::ostream&) {
  verify::SuiteBounds bounds;
  bounds.max_pins = cfg.max_pins;
  bounds.x_bound = cfg.x_bound;
  const auto reports = verify::run_suite(suite, bounds);
  if (cfg.format == Format::structured) verify::write_json(out, reports, timing);
  else verify::write_text(out, reports, timing);
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    verify::write_json(file, reports, timing);
  }
  for (const auto& r : reports)
    if (r.status != verify::Status::confirmed) return 1;
  return 0;
}

int cmd_table(std::uint64_t max_pins, const CliConfig& cfg, std::ostream& out, std::ostream&) {
  Oracle oracle(std::max(cfg.oracle_bound, max_pins));
  write_table(out, outcome_table(oracle, max_pins));
  return 0;
}

namespace {

std::atomic<httplib::Server*> running_server{nullptr};

extern "C" void stop_server(int) {
  if (auto* s = running_server.load()) s->stop();
}

}  // namespace

int cmd_serve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  service::GameService games;
  std::optional<std::filesystem::path> snapshot;
  if (!cfg.snapshot.empty()) {
    snapshot = cfg.snapshot;
    const auto restored = games.restore(*snapshot);
    if (!restored.warning.empty()) err << "warning: " << restored.warning << '\n';
    out << "restored " << restored.sessions << " sessions from " << cfg.snapshot << '\n';
  }

  httplib::Server server;
  service::mount_routes(server, games, snapshot);
  running_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);

  out << "listening on port " << cfg.port << std::endl;
  const bool ok = server.listen("0.0.0.0", cfg.port);
  running_server = nullptr;

  if (snapshot) {
    games.snapshot(*snapshot);
    out << "saved " << games.size() << " sessions to " << cfg.snapshot << '\n';
  }
  if (!ok) {
    err << "error: could not listen on port " << cfg.port << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Misère Partizan Kayles solver"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--oracle-bound", cfg.oracle_bound, "Largest position (pins) sent to the oracle")
      ->check(CLI::PositiveNumber);

  std::string pos_a, pos_b, player;
  std::uint64_t bound = 10;
  bool geq = false;
  bool no_timing = false;
  std::string json_path;
  std::vector<std::string> suite{"all"};
  std::uint64_t table_pins = 10;

  auto* outcome = app.add_subcommand("outcome", "Misère outcome of a position");
  outcome->add_option("position", pos_a)->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce to single squares and dominoes");
  reduce->add_option("position", pos_a)->required();

  auto* best = app.add_subcommand("best-move", "Winning move for a player, if any");
  best->add_option("position", pos_a)->required();
  best->add_option("player", player, "L or R")->required();

  auto* equiv = app.add_subcommand("equiv", "Bounded indistinguishability test");
  equiv->add_option("a", pos_a)->required();
  equiv->add_option("b", pos_b)->required();
  equiv->add_option("--bound", bound, "Largest X (pins) to try");
  equiv->add_flag("--geq", geq, "Test a >= b instead of equivalence");

  auto* verify = app.add_subcommand("verify", "Re-check every structural claim");
  verify->add_option("--suite", suite, "Claim ids, or 'all'")->delimiter(',');
  verify->add_option("--max-pins", cfg.max_pins, "Bound for exhaustive claims")
      ->check(CLI::PositiveNumber);
  verify->add_option("--x-bound", cfg.x_bound, "Summand bound for the zero-element claim")
      ->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path, "Also write the JSON report here");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times");

  auto* table = app.add_subcommand("table", "Oracle outcome table, one position per line");
  table->add_option("--max-pins", table_pins, "Largest total pins");

  auto* serve = app.add_subcommand("serve", "Run the game HTTP API");
  serve->add_option("--port", cfg.port)->check(CLI::Range(1, 65535));
  serve->add_option("--snapshot", cfg.snapshot, "Session snapshot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  cfg.format = format == "structured" ? Format::structured : Format::text;

  try {
    if (*outcome) return cmd_outcome(pos_a, cfg, out, err);
    if (*reduce) return cmd_reduce(pos_a, cfg, out, err);
    if (*best) return cmd_best_move(pos_a, player, cfg, out, err);
    if (*equiv) return cmd_equiv(pos_a, pos_b, bound, geq, cfg, out, err);
    if (*verify) return cmd_verify(suite, cfg, !no_timing, json_path, out, err);
    if (*table) return cmd_table(table_pins, cfg, out, err);
    if (*serve) return cmd_serve(cfg, out, err);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_usage;
}

}  // namespace kayles::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kayles::cli {

enum class Format { text, structured };

struct CliConfig {
  std::uint64_t oracle_bound = 30;
  std::uint64_t max_pins = 18;
  std::uint64_t x_bound = 15;
  int port = 8080;
  std::string snapshot;
  Format format = Format::text;
};

int cmd_outcome(const std::string& position, const CliConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_reduce(const std::string& position, const CliConfig& cfg, std::ostream& out,
               std::ostream& err);
int cmd_best_move(const std::string& position, const std::string& player, const CliConfig& cfg,
                  std::ostream& out, std::ostream& err);
int cmd_equiv(const std::string& a, const std::string& b, std::uint64_t bound, bool geq,
              const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::vector<std::string>& suite, const CliConfig& cfg, bool timing,
               const std::string& json_path, std::ostream& out, std::ostream& err);
int cmd_table(std::uint64_t max_pins, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_serve(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line, as main() sees it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kayles::cli

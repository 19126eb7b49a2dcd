#include <doctest.h>

#include <sstream>
#include <vector>

#include "kayles/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<const char*> args) {
  args.insert(args.begin(), "kayles");
  std::ostringstream out, err;
  const int code = kayles::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("outcome") {
  CHECK(cli({"outcome", "4+5"}).out == "N\n");
  CHECK(cli({"outcome", ""}).out == "N\n");
  CHECK(cli({"outcome", "1+1"}).out == "R\n");
  const auto big = cli({"outcome", "40+7"});
  CHECK(big.code == 0);
  CHECK(big.out == "R (fast formula only: 47 pins exceeds oracle bound 30)\n");

  const auto bad = cli({"outcome", "4+q"});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("'q'") != std::string::npos);

  const auto structured = cli({"--format", "structured", "outcome", "5+5"});
  CHECK(structured.out ==
        "position=5+5\npins=10\nvalue=-2\nfast=R\noracle=R\noutcome=R\n");
}

TEST_CASE("reduce") {
  CHECK(cli({"reduce", "5"}).out == "1×S1 + 2×S2 (value −1)\n");
  CHECK(cli({"reduce", "3"}).out == "1×S1 + 1×S2 (value 0)\n");
  CHECK(cli({"reduce", "0"}).out == "0 (value 0)\n");
  CHECK(cli({"reduce", "4+4+5"}).out == "5×S1 + 4×S2 (value 1)\n");
  CHECK(cli({"--format", "structured", "reduce", "4+5"}).out ==
        "position=5+4\nk1=3\nk2=3\nvalue=0\n");
}

TEST_CASE("best-move") {
  CHECK(cli({"best-move", "4+5", "L"}).out == "play square at end of strip 4 → 5+3 (P)\n");
  CHECK(cli({"best-move", "4+5", "R"}).out == "play domino at end of strip 5 → 4+3 (R)\n");
  CHECK(cli({"best-move", "1", "R"}).out == "no legal move: immediate win\n");
  CHECK(cli({"best-move", "4", "X"}).code != 0);
  const auto s = cli({"--format", "structured", "best-move", "3", "L"});
  CHECK(s.out.find("advice=winning_move\n") != std::string::npos);
  CHECK(s.out.find("result=2\n") != std::string::npos);
}

TEST_CASE("equiv") {
  const auto split = cli({"equiv", "2", "1+1", "--bound", "6"});
  CHECK(split.out == "distinguished by X=0: P vs R\n");
  CHECK(split.code == 1);
  const auto same = cli({"equiv", "3", "1+2", "--bound", "10"});
  CHECK(same.out == "indistinguishable up to bound 10\n");
  CHECK(same.code == 0);
  CHECK(cli({"equiv", "2", "1+1", "--bound", "9", "--geq"}).out ==
        "no counterexample up to bound 9; strict: X=0 (P vs R)\n");
  CHECK(cli({"--format", "structured", "equiv", "2", "1+1", "--bound", "0"}).out ==
        "claim=2 == 1+1\nbound=0\nwitness=0\noutcomes=P/R\n");
  // Oracle grows to fit the requested bound.
  CHECK(cli({"equiv", "20", "1+1+1+1+1+1+2+2+2+2+2+2+2", "--bound", "12"}).code == 0);
}

TEST_CASE("verify") {
  const auto all = cli({"verify", "--suite", "all"});
  CHECK(all.code == 0);
  CHECK(all.out.find("refuted") == std::string::npos);
  CHECK(all.out.find("confirmed\tthm-howtowin") != std::string::npos);

  const auto one = cli({"verify", "--suite", "lemma-noleft", "--max-pins", "18", "--no-timing"});
  CHECK(one.out == "confirmed\tlemma-noleft\tmax_pins=18\tinstances=1597\n");

  const auto two = cli({"verify", "--suite", "corollary-zerocor,thm-xy", "--x-bound", "10",
                        "--max-pins", "8", "--no-timing"});
  CHECK(two.out ==
        "confirmed\tcorollary-zerocor\tx_pins=10\tinstances=139\n"
        "confirmed\tthm-xy\tmax_pins=8\tinstances=67\n");

  const auto unknown = cli({"verify", "--suite", "nope"});
  CHECK(unknown.code != 0);
  CHECK(unknown.err.find("nope") != std::string::npos);
}

TEST_CASE("table") {
  CHECK(cli({"table", "--max-pins", "2"}).out == "0\tN\n1\tR\n2\tP\n1+1\tR\n");
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code != 0);
  CHECK(cli({"frobnicate"}).code != 0);
  CHECK(cli({"serve", "--port", "70000"}).code != 0);
}

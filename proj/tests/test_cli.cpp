#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gwitt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      gwitt::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto json = run({"enumerate", "--d", "1", "--e", "1", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["count"] == 2);
  CHECK(j["diagrams"].size() == 2);

  const auto ascii = run({"enumerate", "--d", "2", "--e", "2"});
  CHECK(ascii.code == 0);
  CHECK(ascii.out ==
        "frame 2x2: 4 even diagrams\n"
        "\n(2,2)  shift 0  base 0  twist 0\n##\n##\n"
        "\n(2,0)  shift 2  base BaseDet(4)  twist 1\n##\n..\n"
        "\n(1,1)  shift 2  base 0  twist 1\n#.\n#.\n"
        "\n(0,0)  shift 0  base 0  twist 0\n..\n..\n");

  const auto svg = run({"enumerate", "--d", "4", "--e", "4", "--format", "svg", "--annotate"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(count(svg.out, "<g ") == 12);
  CHECK(count(svg.out, "</g>") == 12);
  CHECK(count(svg.out, "shift 0, twist") == 2);
  CHECK(count(svg.out, "stroke-width=\"2\"") == 12);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--d", "3", "--e", "4", "--format", "json"},
           {"table", "--d", "4", "--e", "5", "--format", "json"},
           {"verify", "--scope", "bord", "--max-frame", "4"},
           {"enumerate", "--d", "3", "--e", "3", "--format", "svg"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("table") {
  const auto t = run({"table", "--d", "2", "--e", "2", "--trivial-base", "--format", "json"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find(R"("total": 4)") != std::string::npos);

  const auto g45 = run({"table", "--d", "4", "--e", "5", "--trivial-base", "--format", "json"});
  const auto j = nlohmann::json::parse(g45.out);
  CHECK(j["total"] == 12);
  REQUIRE(j["ranks"].size() == 2);
  CHECK(j["ranks"][0] == nlohmann::json::parse(R"({"shift":0,"twist":0,"rank":6})"));
  CHECK(j["ranks"][1] == nlohmann::json::parse(R"({"shift":0,"twist":1,"rank":6})"));

  const auto one = run({"table", "--d", "1", "--e", "1", "--trivial-base"});
  CHECK(one.out == "frame 1x1 (trivial base)\nshift  twist  rank\n0      0      1\n1      0      1\ntotal 2\n");
}

TEST_CASE("verify") {
  const auto all = run({"verify", "--scope", "all", "--max-frame", "5"});
  CHECK(all.code == 0);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"].size() == 5);

  const auto bord = nlohmann::json::parse(run({"verify", "--scope", "bord", "--max-frame", "7"}).out);
  for (const auto& frame : bord["suites"]["bord"]["frames"]) {
    CHECK(frame["bord_zero"] == frame["both_even"]);
  }
  CHECK(run({"verify", "--scope", "cond-even", "--max-frame", "8"}).code == 0);
}

TEST_CASE("maps") {
  const auto bord33 = run({"maps", "--d", "3", "--e", "3", "--which", "bord", "--format", "json"});
  REQUIRE(bord33.code == 0);
  const auto matrix = nlohmann::json::parse(bord33.out)["matrix"];
  bool nonzero = false;
  for (const auto& row : matrix) {
    for (const auto& v : row) nonzero |= v != 0;
  }
  CHECK(nonzero);

  const auto iota = run({"maps", "--d", "2", "--e", "2", "--which", "iota"});
  CHECK(count(iota.out, "-->") == 2);
  const auto zero = run({"maps", "--d", "2", "--e", "2", "--which", "bord"});
  CHECK(zero.out.find("zero map") != std::string::npos);

  const auto svg = run({"maps", "--d", "3", "--e", "3", "--which", "bord", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(count(svg.out, "<line ") > 0);
}

TEST_CASE("classify and canonical") {
  const auto one = run({"classify", "--d", "2", "--e", "2", "--rows", "2,0"});
  CHECK(one.code == 0);
  CHECK(one.out == "(2,0)  RowPlusBlocks  shift 2  twist 1\n");
  CHECK(run({"classify", "--d", "3", "--e", "3", "--rows", "2,1,1"}).code == 2);
  CHECK(run({"classify", "--d", "2", "--e", "2", "--rows", "1,2"}).code == 2);

  const auto can = run({"canonical", "--dvec", "1,3", "--evec", "1,2", "--ambient", "6",
                        "--format", "json"});
  REQUIRE(can.code == 0);
  const auto j = nlohmann::json::parse(can.out);
  CHECK(j["relative_dimension"] == 5);
  CHECK(j["even"] == false);
  CHECK(j["pushforward_admissible"] == true);
  CHECK(run({"canonical", "--dvec", "3,1", "--evec", "1,2", "--ambient", "6"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "--d", "0", "--e", "2"}).code == 2);
  CHECK(run({"enumerate", "--d", "2"}).code == 2);
  CHECK(run({"enumerate", "--d", "2", "--e", "2", "--format", "png"}).code == 2);
  CHECK(run({"enumerate", "--d", "2", "--e", "2", "--format", "svg", "--cell-size", "3"}).code == 2);
  CHECK(run({"verify", "--scope", "everything"}).code == 2);
  CHECK(run({"verify", "--max-frame", "1"}).code == 2);
  CHECK(run({"maps", "--d", "2", "--e", "2", "--which", "phi"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

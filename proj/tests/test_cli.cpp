#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <random>
#include <sstream>

#include "chev/cli.hpp"

using namespace chev;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  std::vector<nlohmann::json> records() const {
    std::vector<nlohmann::json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) v.push_back(nlohmann::json::parse(line));
    return v;
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("run records round-trip on one line") {
  RunRecord r;
  r.command = "norm ball";
  r.inputs = {{"ring", "Z/2"}, {"gens", {"ea(1)", "eb(1)"}}};
  r.result = {{"size", 3}, {"note", "two\nlines"}};
  r.elapsed_ms = 12;
  r.cache_hit = true;
  const std::string line = r.to_line();
  CHECK(line.find('\n') == std::string::npos);
  CHECK(RunRecord::from_json(nlohmann::json::parse(line)) == r);
}

TEST_CASE("split-two") {
  const auto r = run({"construct", "split-two", "-D", "-7"});
  CHECK(r.code == 0);
  const auto recs = r.records();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["result"]["kind"] == "split");
  CHECK(recs[0]["result"]["r"] == 2);
  CHECK(recs[0]["elapsed_ms"] == 0);
  CHECK(run({"construct", "split-two", "-D", "5"}).records()[0]["result"]["r"] == 0);
  CHECK(run({"construct", "split-two", "-D", "4"}).code == 2);
}

TEST_CASE("norm ball and diameter") {
  auto r = run({"norm", "ball", "--group", "sp4", "--ring", "Z/2", "--gens", "ea(1)", "--k", "0"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["size"] == 1);
  r = run({"norm", "ball", "--group", "sl2", "--ring", "Z/2", "--gens", "e[e1-e2](1)", "--k", "1"});
  CHECK(r.records().at(0)["result"]["size"] == 4);
  r = run({"norm", "diameter", "--group", "sl2", "--ring", "Z/2", "--gens", "e[e1-e2](1)"});
  CHECK(r.records().at(0)["result"]["diameter"] == 2);
  r = run({"norm", "diameter", "--group", "sp4", "--ring", "Z/2", "--gens", "I"});
  CHECK(r.records().at(0)["result"]["diameter"] == "inf");
}

TEST_CASE("norm delta") {
  auto r = run({"norm", "delta", "--group", "sl2", "--ring", "Z/2", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["delta"] == 2);
  r = run({"norm", "delta", "--group", "sl2", "--ring", "Z/3", "--k", "3", "--multiset-cap", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("CapExceeded") != std::string::npos);
}

TEST_CASE("cache hits reproduce the result") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("chev-cli-cache-" + std::to_string(std::random_device{}()));
  const std::vector<std::string> args = {"norm", "diameter", "--group", "sp4", "--ring", "Z/2",
                                         "--gens", "eb(1)", "--cache-dir", dir.string()};
  const auto a = run(args).records().at(0);
  const auto b = run(args).records().at(0);
  CHECK_FALSE(a["cache_hit"].get<bool>());
  CHECK(b["cache_hit"].get<bool>());
  CHECK(a["result"] == b["result"]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("relations verify") {
  const auto r = run({"relations", "verify", "--group", "sl3", "--probe", "Z/7"});
  CHECK(r.code == 0);
  const auto recs = r.records();
  // Sign table, 30 ordered pairs, 6 additivity lines, 36 Weyl lines.
  CHECK(recs.size() == 1 + 30 + 6 + 36);
  for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i]["result"]["pass"] == true);
  CHECK(run({"relations", "verify", "--group", "sp4", "--probe", "Z/5"}).code == 0);
}

TEST_CASE("levels and constructions") {
  auto r = run({"levels", "pi", "--group", "sp4", "--ring", "Z/6", "--gens", "ea(2)", "ea(3)"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["pi"].empty());
  CHECK(r.records().at(0)["result"]["levels_sum_full"] == true);

  r = run({"construct", "lower-bound", "--group", "sl3", "--ring", "Z/30", "--root", "e1-e2", "--t",
           "2", "3", "5"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["certificate"]["bound"] == 3);

  r = run({"construct", "lower-bound", "--ring", "Quad(-7)/2", "--x", "w", "1+w", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["claimed_bound"] == 2);
  r = run({"construct", "lower-bound", "--ring", "Quad(-7)/2", "--x", "w", "1+w", "--k", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("KTooSmall") != std::string::npos);
}

TEST_CASE("generation commands") {
  auto r = run({"gen", "unit-check", "--ring", "Z/4"});
  CHECK(r.code == 0);
  CHECK(r.records().size() == 2);
  r = run({"gen", "unit-check", "--ring", "Quad(-7)/2"});
  CHECK(r.code == 2);
  r = run({"gen", "check", "--ring", "Z/3", "--gens", "ea(1)"});
  CHECK(r.code == 0);
  CHECK(r.records().at(0)["result"]["actually_generates"] == true);

  const std::vector<std::string> args = {"gen", "check", "--ring", "Z/2", "--random", "8", "--seed",
                                         "3"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.records().size() == 8);
}

TEST_CASE("group commands") {
  CHECK(run({"group", "order", "--group", "sl2", "--ring", "Z/3"}).records().at(0)["result"]["order"] ==
        24);
  CHECK(run({"group", "sign", "--ring", "Z/2"}).records().at(0)["result"]["kernel_size"] == 360);
  CHECK(run({"group", "abelianization", "--group", "sp4", "--ring", "Z/2"})
            .records()
            .at(0)["result"]["dim"] == 1);
  CHECK(run({"sl2", "decompose", "--ring", "Z/9"}).code == 0);
}

TEST_CASE("usage errors") {
  auto r = run({});
  CHECK(r.code == 2);
  CHECK(r.err.find("subcommands") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"norm", "ball", "--k", "zero"}).code == 2);
  CHECK(run({"norm", "ball", "--ring", "Z/0"}).code == 2);
  CHECK(run({"norm", "ball", "--gens", "ea(1"}).code == 2);
  CHECK(run({"construct", "split-two"}).code == 2);
}

TEST_CASE("pretty output") {
  const auto r = run({"construct", "split-two", "-D", "-7", "--pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("kind: split") != std::string::npos);
}

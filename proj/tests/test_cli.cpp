#include <doctest.h>

#include <json.hpp>
#include <string>

#include "support/cli_runner.hpp"

using cliutil::fresh_dir;
using cliutil::run_cli;
using cliutil::spit_file;
using json = nlohmann::json;

namespace {

constexpr const char* kP3Json =
    R"({"ideas": ["a", "b", "c"],
        "rankings": {"v1": ["a", "b", "c"],
                     "v2": ["a", "c", "b"],
                     "v3": ["b", "a", "c"]}})";

}  // namespace

TEST_CASE("tally reports exact borda results for a profile") {
  const auto dir = fresh_dir("tally");
  spit_file(dir / "p3.json", kP3Json);
  const auto result = run_cli("tally --profile " + (dir / "p3.json").string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.err.empty());

  const json doc = json::parse(result.out);
  CHECK(doc["ideas"] == 3);
  CHECK(doc["voters"] == 3);
  CHECK(doc["scores"]["a"] == 5);
  CHECK(doc["scores"]["b"] == 3);
  CHECK(doc["scores"]["c"] == 1);
  CHECK(doc["normalized"]["a"].get<double>() ==
        doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(doc["ranking"][0] == "a");
  CHECK(doc["ranking"][2] == "c");
  CHECK(doc["condorcet_winner"] == "a");
}

TEST_CASE("tally from a comparison log counts records and voters") {
  const auto dir = fresh_dir("tallylog");
  spit_file(dir / "log.csv",
            "topic_id,participant_id,winner,loser,elapsed_ms\n"
            "t1,v1,a,b,\n"
            "t1,v1,a,c,\n"
            "t1,v2,b,c,\n");
  const auto result = run_cli("tally --log " + (dir / "log.csv").string());
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.out);
  CHECK(doc["records"] == 3);
  CHECK(doc["voters"] == 2);
  CHECK(doc["scores"]["a"] == 2);
  CHECK(doc["scores"]["b"] == 1);
  CHECK(doc["scores"]["c"] == 0);
  CHECK(doc["condorcet_winner"] == "a");
}

TEST_CASE("exit codes distinguish validation failures from io failures") {
  const auto dir = fresh_dir("exit");

  SUBCASE("missing input file is exit 2") {
    const auto result =
        run_cli("tally --profile " + (dir / "absent.json").string());
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("error:") != std::string::npos);
  }
  SUBCASE("invalid profile is exit 1") {
    spit_file(dir / "one.json", R"({"ideas": ["a"], "rankings": {}})");
    const auto result =
        run_cli("tally --profile " + (dir / "one.json").string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("error:") != std::string::npos);
  }
  SUBCASE("malformed log reports its location and exits 1") {
    spit_file(dir / "bad.csv",
              "topic_id,participant_id,winner,loser,elapsed_ms\n"
              "t1,v1,a,a,\n");
    const auto result = run_cli("tally --log " + (dir / "bad.csv").string());
    CHECK(result.exit_code == 1);
    CHECK(result.err.find(":2:4:") != std::string::npos);
  }
  SUBCASE("unknown subcommand is exit 1") {
    const auto result = run_cli("frobnicate");
    CHECK(result.exit_code == 1);
  }
  SUBCASE("missing required input names the choices") {
    const auto result = run_cli("tally");
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("--profile or --log") != std::string::npos);
  }
}

TEST_CASE("stochastic outputs embed the seed and repeat bytewise") {
  const auto dir = fresh_dir("seed");
  spit_file(dir / "p3.json", kP3Json);
  const std::string args =
      "sample --profile " + (dir / "p3.json").string() +
      " --samples 50 --seed 7";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  const json doc = json::parse(first.out);
  CHECK(doc["seed"] == 7);
  CHECK(doc["samples"] == 50);
}

TEST_CASE("seed flag overrides the environment seed") {
  const auto dir = fresh_dir("seedenv");
  spit_file(dir / "p3.json", kP3Json);
  const std::string base =
      "sample --profile " + (dir / "p3.json").string() + " --samples 10";

  const auto env_only = run_cli(base, "AGORANK_SEED=123");
  REQUIRE(env_only.exit_code == 0);
  CHECK(json::parse(env_only.out)["seed"] == 123);

  const auto flag_wins = run_cli(base + " --seed 9", "AGORANK_SEED=123");
  REQUIRE(flag_wins.exit_code == 0);
  CHECK(json::parse(flag_wins.out)["seed"] == 9);

  const auto junk = run_cli(base, "AGORANK_SEED=abc");
  CHECK(junk.exit_code == 1);
  CHECK(junk.err.find("AGORANK_SEED") != std::string::npos);
}

TEST_CASE("validate summarizes inputs and rejects broken ones") {
  const auto dir = fresh_dir("validate");
  spit_file(dir / "p3.json", kP3Json);
  const auto good =
      run_cli("validate --profile " + (dir / "p3.json").string());
  REQUIRE(good.exit_code == 0);
  CHECK(json::parse(good.out)["ok"] == true);

  spit_file(dir / "points.csv", "m,target_eps,samples\n1,0.1,100\n");
  const auto bad =
      run_cli("validate --points " + (dir / "points.csv").string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("m must be >= 2") != std::string::npos);

  const auto none = run_cli("validate");
  CHECK(none.exit_code == 1);
}

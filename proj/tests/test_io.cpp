#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "agorank/errors.hpp"
#include "agorank/io.hpp"
#include "support/fixtures.hpp"

using namespace agorank;

namespace {

template <typename Fn>
ParseError capture(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& error) {
    return error;
  }
  FAIL("expected a ParseError");
  return ParseError("", 0, 0, "");
}

ComparisonLog parse_log(const std::string& text) {
  std::istringstream in(text);
  return io::parse_comparisons_csv(in, "log.csv");
}

PreferenceProfile parse_profile(const std::string& text) {
  std::istringstream in(text);
  return io::parse_profile_json(in, "profile.json");
}

constexpr const char* kLogHeader =
    "topic_id,participant_id,winner,loser,elapsed_ms\n";

}  // namespace

TEST_CASE("comparison log round-trips through csv") {
  ComparisonLog log;
  log.topic = "budget, 2016";
  log.records.push_back({{"v1"}, {"say \"hi\""}, {"b"}, 1500});
  log.records.push_back({{"v2"}, {"b"}, {"say \"hi\""}, std::nullopt});

  std::ostringstream out;
  io::write_comparisons_csv(out, log);
  const std::string first = out.str();
  CHECK(first.find("\"budget, 2016\"") != std::string::npos);
  CHECK(first.find("\"say \"\"hi\"\"\"") != std::string::npos);

  const ComparisonLog back = parse_log(first);
  CHECK(back.topic == log.topic);
  CHECK(back.records == log.records);

  std::ostringstream again;
  io::write_comparisons_csv(again, back);
  CHECK(again.str() == first);
}

TEST_CASE("comparison rows may omit elapsed time") {
  const ComparisonLog log =
      parse_log(std::string(kLogHeader) + "t1,v1,a,b,\n");
  REQUIRE(log.records.size() == 1);
  CHECK(log.topic == "t1");
  CHECK(log.records[0].participant == ParticipantId{"v1"});
  CHECK(log.records[0].winner == IdeaId{"a"});
  CHECK(log.records[0].loser == IdeaId{"b"});
  CHECK(!log.records[0].elapsed_ms.has_value());
}

TEST_CASE("comparison parser accepts BOM and CRLF line endings") {
  const std::string text =
      "\xEF\xBB\xBFtopic_id,participant_id,winner,loser,elapsed_ms\r\n"
      "t1,v1,a,b,120\r\n";
  const ComparisonLog log = parse_log(text);
  REQUIRE(log.records.size() == 1);
  CHECK(log.records[0].elapsed_ms == 120);
}

TEST_CASE("comparison parser reports the offending line and column") {
  SUBCASE("bad header") {
    const ParseError error =
        capture([] { parse_log("topic,participant,winner,loser\nx\n"); });
    CHECK(error.file() == "log.csv");
    CHECK(error.line() == 1);
    CHECK(error.column() == 1);
    CHECK(std::string(error.what()).find("bad header") != std::string::npos);
  }
  SUBCASE("empty file") {
    const ParseError error = capture([] { parse_log(""); });
    CHECK(std::string(error.what()).find("empty file") != std::string::npos);
  }
  SUBCASE("wrong field count") {
    const ParseError error = capture([] {
      parse_log(std::string(kLogHeader) + "t1,v1,a,b,\nt1,v2,a,b\n");
    });
    CHECK(error.line() == 3);
    CHECK(std::string(error.what()).find("expected 5 fields, got 4") !=
          std::string::npos);
  }
  SUBCASE("winner equals loser") {
    const ParseError error =
        capture([] { parse_log(std::string(kLogHeader) + "t1,v1,a,a,\n"); });
    CHECK(error.line() == 2);
    CHECK(error.column() == 4);
    CHECK(std::string(error.what()).find("winner and loser are both 'a'") !=
          std::string::npos);
  }
  SUBCASE("non-integer elapsed") {
    const ParseError error = capture(
        [] { parse_log(std::string(kLogHeader) + "t1,v1,a,b,soon\n"); });
    CHECK(error.line() == 2);
    CHECK(error.column() == 5);
    CHECK(std::string(error.what()).find("not an integer") !=
          std::string::npos);
  }
  SUBCASE("negative elapsed") {
    const ParseError error =
        capture([] { parse_log(std::string(kLogHeader) + "t1,v1,a,b,-4\n"); });
    CHECK(error.column() == 5);
    CHECK(std::string(error.what()).find("elapsed_ms must be >= 0") !=
          std::string::npos);
  }
  SUBCASE("mixed topics") {
    const ParseError error = capture([] {
      parse_log(std::string(kLogHeader) + "t1,v1,a,b,\nt2,v1,a,b,\n");
    });
    CHECK(error.line() == 3);
    CHECK(std::string(error.what()).find("mixed topics") != std::string::npos);
  }
  SUBCASE("no records") {
    const ParseError error = capture([] { parse_log(kLogHeader); });
    CHECK(std::string(error.what()).find("comparison log has no records") !=
          std::string::npos);
  }
  SUBCASE("blank interior row") {
    const ParseError error = capture([] {
      parse_log(std::string(kLogHeader) + "t1,v1,a,b,\n\nt1,v2,a,b,\n");
    });
    CHECK(error.line() == 3);
    CHECK(std::string(error.what()).find("blank row") != std::string::npos);
  }
  SUBCASE("unterminated quote") {
    const ParseError error = capture(
        [] { parse_log(std::string(kLogHeader) + "\"t1,v1,a,b,\n"); });
    CHECK(error.line() == 2);
    CHECK(std::string(error.what()).find("unterminated quoted field") !=
          std::string::npos);
  }
}

TEST_CASE("profile json round-trips and serializes stably") {
  const PreferenceProfile profile = fixtures::p3();
  std::ostringstream out;
  io::write_profile_json(out, profile);
  const std::string first = out.str();
  CHECK(first.find("\"ideas\"") < first.find("\"rankings\""));

  const PreferenceProfile back = parse_profile(first);
  CHECK(back.ideas == profile.ideas);
  CHECK(back.rankings == profile.rankings);

  std::ostringstream again;
  io::write_profile_json(again, back);
  CHECK(again.str() == first);
}

TEST_CASE("profile parser normalizes idea order") {
  const PreferenceProfile profile = parse_profile(
      R"({"ideas": ["c", "a", "b"], "rankings": {"v1": ["b", "c", "a"]}})");
  CHECK(profile.ideas == std::vector<IdeaId>{{"a"}, {"b"}, {"c"}});
  CHECK(profile.rankings.at({"v1"}).ordered ==
        std::vector<IdeaId>{{"b"}, {"c"}, {"a"}});
}

TEST_CASE("profile parser reports malformed documents") {
  SUBCASE("syntax error carries a location") {
    const ParseError error = capture([] {
      parse_profile("{\n  \"ideas\": [\"a\", \"b\"],\n  \"rankings\": }\n");
    });
    CHECK(error.file() == "profile.json");
    CHECK(error.line() == 3);
  }
  SUBCASE("duplicate participant key") {
    const ParseError error = capture([] {
      parse_profile(
          "{\n"
          "  \"ideas\": [\"a\", \"b\"],\n"
          "  \"rankings\": {\n"
          "    \"v1\": [\"a\", \"b\"],\n"
          "    \"v1\": [\"b\", \"a\"]\n"
          "  }\n"
          "}\n");
    });
    CHECK(std::string(error.what()).find(
              "duplicate key 'v1' (one ranking per participant)") !=
          std::string::npos);
    CHECK(error.line() == 5);
  }
  SUBCASE("not an object") {
    const ParseError error = capture([] { parse_profile("[1, 2]"); });
    CHECK(std::string(error.what()).find("profile must be a JSON object") !=
          std::string::npos);
  }
  SUBCASE("unknown key") {
    const ParseError error = capture([] {
      parse_profile(R"({"ideas": ["a", "b"], "rankings": {}, "extra": 1})");
    });
    CHECK(std::string(error.what()).find("unknown profile key 'extra'") !=
          std::string::npos);
  }
  SUBCASE("missing ideas") {
    const ParseError error =
        capture([] { parse_profile(R"({"rankings": {}})"); });
    CHECK(std::string(error.what()).find("needs an 'ideas' array") !=
          std::string::npos);
  }
  SUBCASE("missing rankings") {
    const ParseError error =
        capture([] { parse_profile(R"({"ideas": ["a", "b"]})"); });
    CHECK(std::string(error.what()).find("needs a 'rankings' object") !=
          std::string::npos);
  }
  SUBCASE("empty idea id") {
    const ParseError error = capture([] {
      parse_profile(R"({"ideas": ["a", ""], "rankings": {"v1": ["a"]}})");
    });
    CHECK(std::string(error.what()).find("non-empty strings") !=
          std::string::npos);
  }
  SUBCASE("duplicate idea id") {
    const ParseError error = capture([] {
      parse_profile(R"({"ideas": ["a", "a"], "rankings": {"v1": ["a"]}})");
    });
    CHECK(std::string(error.what()).find("duplicate id in 'ideas'") !=
          std::string::npos);
  }
  SUBCASE("ranking mentions an unknown idea") {
    const ParseError error = capture([] {
      parse_profile(
          R"({"ideas": ["a", "b"], "rankings": {"v1": ["a", "z"]}})");
    });
    CHECK(std::string(error.what()).find("invalid profile") !=
          std::string::npos);
    CHECK(std::string(error.what()).find("unknown idea 'z'") !=
          std::string::npos);
  }
}

TEST_CASE("ratings csv round-trips and validates") {
  const std::vector<RatingEvent> events = {
      {{"v1"}, 0, 5}, {{"v1"}, 3, 2}, {{"v2"}, 1, 4}};
  std::ostringstream out;
  io::write_ratings_csv(out, events);

  std::istringstream in(out.str());
  const auto back = io::parse_ratings_csv(in, "ratings.csv");
  REQUIRE(back.size() == 3);
  CHECK(back[1].participant == ParticipantId{"v1"});
  CHECK(back[1].sequence_index == 3);
  CHECK(back[1].stars == 2);

  const std::string header = "participant_id,sequence_index,stars\n";
  SUBCASE("stars out of range") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "v1,0,6\n");
      io::parse_ratings_csv(bad, "ratings.csv");
    });
    CHECK(error.line() == 2);
    CHECK(error.column() == 3);
    CHECK(std::string(error.what()).find("stars must be in 1..5, got 6") !=
          std::string::npos);
  }
  SUBCASE("negative sequence index") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "v1,-1,3\n");
      io::parse_ratings_csv(bad, "ratings.csv");
    });
    CHECK(error.column() == 2);
  }
  SUBCASE("sequence index must increase per participant") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "v1,2,3\nv2,9,3\nv1,2,4\n");
      io::parse_ratings_csv(bad, "ratings.csv");
    });
    CHECK(error.line() == 4);
    CHECK(std::string(error.what()).find(
              "not strictly increasing for participant 'v1'") !=
          std::string::npos);
  }
}

TEST_CASE("timings csv round-trips and validates") {
  const std::vector<TimingRecord> records = {{{"v1"}, 2, 3000},
                                             {{"v2"}, 5, 12000}};
  std::ostringstream out;
  io::write_timings_csv(out, records);
  std::istringstream in(out.str());
  const auto back = io::parse_timings_csv(in, "timings.csv");
  REQUIRE(back.size() == 2);
  CHECK(back[1].group_size == 5);
  CHECK(back[1].elapsed_ms == 12000);

  const std::string header = "participant_id,group_size,elapsed_ms\n";
  SUBCASE("group size below two") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "v1,1,3000\n");
      io::parse_timings_csv(bad, "timings.csv");
    });
    CHECK(error.column() == 2);
    CHECK(std::string(error.what()).find("group_size must be >= 2") !=
          std::string::npos);
  }
  SUBCASE("non-positive elapsed") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "v1,3,0\n");
      io::parse_timings_csv(bad, "timings.csv");
    });
    CHECK(error.column() == 3);
    CHECK(std::string(error.what()).find("elapsed_ms must be positive") !=
          std::string::npos);
  }
}

TEST_CASE("points csv round-trips and validates") {
  const std::vector<ThresholdPoint> points = {{4, 0.1, 230.5}, {8, 0.05, 910}};
  std::ostringstream out;
  io::write_points_csv(out, points);
  CHECK(out.str() ==
        "m,target_eps,samples\n"
        "4,0.1,230.5\n"
        "8,0.05,910\n");

  std::istringstream in(out.str());
  const auto back = io::parse_points_csv(in, "points.csv");
  REQUIRE(back.size() == 2);
  CHECK(back[0].m == 4);
  CHECK(back[0].target_eps == 0.1);
  CHECK(back[0].samples == 230.5);

  const std::string header = "m,target_eps,samples\n";
  SUBCASE("m below two") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "1,0.1,100\n");
      io::parse_points_csv(bad, "points.csv");
    });
    CHECK(std::string(error.what()).find("m must be >= 2") !=
          std::string::npos);
  }
  SUBCASE("non-positive target") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "4,0,100\n");
      io::parse_points_csv(bad, "points.csv");
    });
    CHECK(std::string(error.what()).find("target_eps must be positive") !=
          std::string::npos);
  }
  SUBCASE("non-positive samples") {
    const ParseError error = capture([&] {
      std::istringstream bad(header + "4,0.1,-2\n");
      io::parse_points_csv(bad, "points.csv");
    });
    CHECK(std::string(error.what()).find("samples must be positive") !=
          std::string::npos);
  }
}

TEST_CASE("trajectory csv uses shortest round-trip numbers") {
  ConvergenceTrajectory trajectory;
  trajectory.grid = {100, 200};
  trajectory.eps_mean = {0.25, 0.125};
  trajectory.eps_std = {0.5, 0.0};
  trajectory.repeats = 10;
  std::ostringstream out;
  io::write_trajectory_csv(out, trajectory);
  CHECK(out.str() ==
        "samples,eps_mean,eps_std\n"
        "100,0.25,0.5\n"
        "200,0.125,0\n");
}

TEST_CASE("fit json embeds coefficients, points, and the seed") {
  LinearFit fit;
  fit.a = 5.0;
  fit.b = 0.5;
  fit.r2 = 1.0;
  fit.points = {{4, 0.1, 20.5}};
  std::ostringstream out;
  io::write_fit_json(out, fit, 42);
  const std::string text = out.str();
  CHECK(text.find("\"a\": 5.0") != std::string::npos);
  CHECK(text.find("\"b\": 0.5") != std::string::npos);
  CHECK(text.find("\"r2\": 1.0") != std::string::npos);
  CHECK(text.find("\"seed\": 42") != std::string::npos);
  CHECK(text.find("\"samples\": 20.5") != std::string::npos);
}

TEST_CASE("format_double is shortest and exact") {
  CHECK(io::format_double(0.0) == "0");
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(200.0) == "200");
  const double third = 1.0 / 3.0;
  const std::string text = io::format_double(third);
  double back = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), back);
  REQUIRE(result.ec == std::errc());
  CHECK(back == third);
}

TEST_CASE("whole-file helpers raise IoError with the path") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "agorank_io_test";
  fs::create_directories(dir);
  const fs::path target = dir / "data.txt";
  io::write_file(target, "payload\n");
  CHECK(io::read_file(target) == "payload\n");

  CHECK_THROWS_AS(io::read_file(dir / "missing.txt"), IoError);
  CHECK_THROWS_AS(io::write_file(dir / "no_dir" / "x.txt", "y"), IoError);
  try {
    io::read_file(dir / "missing.txt");
  } catch (const IoError& error) {
    CHECK(std::string(error.what()).find("missing.txt") != std::string::npos);
  }
  fs::remove_all(dir);
}

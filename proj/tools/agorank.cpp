#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "agorank/behavioral.hpp"
#include "agorank/core.hpp"
#include "agorank/errors.hpp"
#include "agorank/io.hpp"
#include "agorank/replay.hpp"
#include "agorank/sampler.hpp"
#include "agorank/social_choice.hpp"
#include "agorank/synthetic.hpp"

namespace {

using nlohmann::json;

// ---- shared plumbing ------------------------------------------------------

/// --seed wins, then AGORANK_SEED, then 0. Every stochastic command echoes
/// the value actually used.
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("AGORANK_SEED")) {
    const std::string text(env);
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw agorank::ValidationError("AGORANK_SEED is not an unsigned integer: '" +
                                     text + "'");
    }
  }
  return 0;
}

std::string load(const std::string& path) { return agorank::io::read_file(path); }

agorank::PreferenceProfile load_profile(const std::string& path) {
  std::istringstream in(load(path));
  return agorank::io::parse_profile_json(in, path);
}

agorank::ComparisonLog load_log(const std::string& path) {
  std::istringstream in(load(path));
  return agorank::io::parse_comparisons_csv(in, path);
}

/// Write to the path, or to stdout when the path is empty.
void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    agorank::io::write_file(out_path, content);
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json scores_json(const agorank::ScoreVector& scores) {
  json doc = json::object();
  for (const auto& [idea, score] : scores.scores) doc[idea.value] = score;
  return doc;
}

json normalized_json(const agorank::NormalizedScoreVector& scores) {
  json doc = json::object();
  for (const auto& [idea, share] : scores.scores) doc[idea.value] = share;
  return doc;
}

json ranking_json(const agorank::Ranking& ranking) {
  json doc = json::array();
  for (const auto& idea : ranking.ordered) doc.push_back(idea.value);
  return doc;
}

/// Expand every ranking of a profile into one log, participants in ascending
/// id order, pairs in expansion order.
agorank::ComparisonLog expand_profile(const agorank::PreferenceProfile& profile,
                                      const std::string& topic) {
  agorank::require_valid(profile);
  agorank::ComparisonLog log;
  log.topic = topic;
  for (const auto& [participant, ranking] : profile.rankings) {
    auto expanded = agorank::expand_ranking_to_comparisons(ranking, participant);
    log.records.insert(log.records.end(),
                       std::make_move_iterator(expanded.begin()),
                       std::make_move_iterator(expanded.end()));
  }
  return log;
}

// ---- per-command configuration --------------------------------------------

struct TallyArgs {
  std::string profile_path;
  std::string log_path;
  std::string out_path;
};

struct SampleArgs {
  std::string profile_path;
  std::int64_t samples = 0;
  agorank::SampleBudget budget;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  CLI::Option* samples_opt = nullptr;
};

struct SearchArgs {
  std::string profile_path;
  agorank::SampleBudget budget;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
};

struct ReplayArgs {
  std::string log_path;
  std::string profile_path;
  std::string topic = "profile";
  std::int64_t repeats = 100;
  std::int64_t grid_size = 50;
  int workers = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<double> targets;
  std::string out_path;
  std::string points_out;
};

struct FitArgs {
  std::vector<std::string> points_paths;
  double target = 0.0;
  bool target_given = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
};

struct ExtrapolateArgs {
  double a = 0.0;
  double b = 0.0;
  std::string fit_path;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string out_path;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
};

struct BiasArgs {
  std::string ratings_path;
  std::string out_path;
};

struct TimingArgs {
  std::string timings_path;
  std::string out_path;
};

struct GenArgs {
  std::string mode = "ic";
  std::int64_t m = 0;
  std::int64_t n = 0;
  double phi = 0.5;
  std::string topic = "synthetic";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
  std::string log_out;
};

struct ValidateArgs {
  std::string profile_path;
  std::string log_path;
  std::string ratings_path;
  std::string timings_path;
  std::string points_path;
};

// ---- command bodies -------------------------------------------------------

int run_tally(const TallyArgs& args) {
  json doc;
  if (!args.profile_path.empty()) {
    const auto profile = load_profile(args.profile_path);
    const auto scores = agorank::borda_scores(profile);
    const auto tally = agorank::pairwise_tally(profile);
    const auto winner = agorank::condorcet_winner(tally);
    doc["ideas"] = profile.idea_count();
    doc["voters"] = profile.voter_count();
    doc["scores"] = scores_json(scores);
    doc["normalized"] = normalized_json(agorank::normalize(scores));
    doc["ranking"] = ranking_json(agorank::borda_ranking(scores));
    doc["condorcet_winner"] = winner ? json(winner->value) : json(nullptr);
  } else {
    const auto log = load_log(args.log_path);
    const auto ideas = log.idea_set();
    const auto scores = agorank::borda_scores_from_comparisons(log, ideas);
    const auto tally = agorank::pairwise_tally(log, ideas);
    const auto winner = agorank::condorcet_winner(tally);
    doc["ideas"] = ideas.size();
    doc["voters"] = tally.voters();
    doc["records"] = log.size();
    doc["scores"] = scores_json(scores);
    doc["normalized"] = normalized_json(agorank::normalize(scores));
    doc["ranking"] = ranking_json(agorank::borda_ranking(scores));
    doc["condorcet_winner"] = winner ? json(winner->value) : json(nullptr);
  }
  emit(dump(doc), args.out_path);
  return 0;
}

int run_sample(const SampleArgs& args) {
  const auto profile = load_profile(args.profile_path);
  const auto oracle = agorank::oracle_from_profile(profile);
  const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

  std::int64_t samples = args.samples;
  const bool budgeted = args.samples_opt->count() == 0;
  if (budgeted) {
    samples = agorank::suggested_samples(
        static_cast<std::int64_t>(profile.idea_count()), args.budget);
  } else if (samples < 1) {
    throw agorank::ValidationError("--samples must be at least 1");
  }

  const auto result = agorank::algorithm1(oracle, oracle.ideas(),
                                          oracle.participants(), samples, seed);
  json doc;
  doc["ideas"] = profile.idea_count();
  doc["voters"] = profile.voter_count();
  doc["samples"] = samples;
  doc["seed"] = seed;
  if (budgeted) {
    doc["eps"] = args.budget.eps;
    doc["delta"] = args.budget.delta;
    doc["constant"] = args.budget.constant;
  }
  doc["counts"] = scores_json(result.counts);
  doc["ranking"] = ranking_json(result.ranking);
  emit(dump(doc), args.out_path);
  return 0;
}

int run_condorcet_search(const SearchArgs& args) {
  const auto profile = load_profile(args.profile_path);
  const auto oracle = agorank::oracle_from_profile(profile);
  const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);
  const auto winner = agorank::epsilon_condorcet_search(
      oracle, oracle.ideas(), oracle.participants(), args.budget, seed);

  json doc;
  doc["ideas"] = profile.idea_count();
  doc["voters"] = profile.voter_count();
  doc["eps"] = args.budget.eps;
  doc["delta"] = args.budget.delta;
  doc["constant"] = args.budget.constant;
  doc["pair_samples"] =
      args.budget.eps == 0.0
          ? json(nullptr)
          : json(agorank::condorcet_pair_samples(
                static_cast<std::int64_t>(profile.idea_count()), args.budget));
  doc["seed"] = seed;
  doc["winner"] = winner ? json(winner->value) : json(nullptr);
  emit(dump(doc), args.out_path);
  return 0;
}

int run_replay(const ReplayArgs& args) {
  agorank::ComparisonLog log;
  if (!args.log_path.empty()) {
    log = load_log(args.log_path);
  } else {
    log = expand_profile(load_profile(args.profile_path), args.topic);
  }
  const auto ideas = log.idea_set();
  const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

  const auto grid =
      agorank::make_log_grid(static_cast<std::int64_t>(log.size()),
                             args.grid_size);
  const auto trajectory = agorank::replay_trajectory(
      log, ideas, args.repeats, grid, seed, args.workers);

  std::ostringstream body;
  agorank::io::write_trajectory_csv(body, trajectory);
  agorank::io::write_file(args.out_path, body.str());

  json meta;
  meta["ideas"] = ideas.size();
  meta["samples"] = log.size();
  meta["repeats"] = args.repeats;
  meta["grid_points"] = trajectory.grid.size();
  meta["workers"] = args.workers;
  meta["seed"] = seed;
  meta["out"] = args.out_path;

  if (!args.targets.empty()) {
    json crossings = json::object();
    std::vector<agorank::ThresholdPoint> points;
    for (const double target : args.targets) {
      const auto crossing =
          agorank::threshold_crossing_interpolated(trajectory, target);
      if (!crossing) {
        throw agorank::ValidationError(
            "trajectory never reaches target eps " +
            agorank::io::format_double(target));
      }
      crossings[agorank::io::format_double(target)] = *crossing;
      points.push_back({static_cast<std::int64_t>(ideas.size()), target,
                        *crossing});
    }
    meta["crossings"] = std::move(crossings);
    if (!args.points_out.empty()) {
      std::ostringstream points_body;
      agorank::io::write_points_csv(points_body, points);
      agorank::io::write_file(args.points_out, points_body.str());
      meta["points_out"] = args.points_out;
    }
  } else if (!args.points_out.empty()) {
    throw agorank::ValidationError("--points-out requires at least one --target");
  }

  std::cout << dump(meta);
  return 0;
}

int run_fit(const FitArgs& args) {
  std::vector<agorank::ThresholdPoint> points;
  for (const auto& path : args.points_paths) {
    std::istringstream in(load(path));
    auto parsed = agorank::io::parse_points_csv(in, path);
    points.insert(points.end(), parsed.begin(), parsed.end());
  }
  if (args.target_given) {
    std::vector<agorank::ThresholdPoint> kept;
    for (const auto& point : points) {
      if (std::abs(point.target_eps - args.target) < 1e-12) kept.push_back(point);
    }
    if (kept.empty()) {
      throw agorank::ValidationError(
          "no points with target eps " +
          agorank::io::format_double(args.target));
    }
    points = std::move(kept);
  } else {
    for (const auto& point : points) {
      if (std::abs(point.target_eps - points.front().target_eps) >= 1e-12) {
        throw agorank::ValidationError(
            "points mix several target eps values; pass --target to choose one");
      }
    }
  }

  const auto fit = agorank::fit_linear(points);
  const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);
  std::ostringstream body;
  agorank::io::write_fit_json(body, fit, seed);
  emit(body.str(), args.out_path);
  return 0;
}

int run_extrapolate(const ExtrapolateArgs& args) {
  double a = args.a;
  double b = args.b;
  if (!args.fit_path.empty()) {
    json doc;
    try {
      doc = json::parse(load(args.fit_path));
    } catch (const json::parse_error& error) {
      throw agorank::ParseError(args.fit_path, 0, 0, error.what());
    }
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b") ||
        !doc["a"].is_number() || !doc["b"].is_number()) {
      throw agorank::ParseError(args.fit_path, 0, 0,
                                "fit file needs numeric 'a' and 'b'");
    }
    a = doc["a"].get<double>();
    b = doc["b"].get<double>();
  } else if (args.a_opt->count() == 0 || args.b_opt->count() == 0) {
    throw agorank::ValidationError("pass either --fit or both --a and --b");
  }
  const double value = agorank::extrapolate_per_participant(a, b, args.m, args.n);
  emit(agorank::io::format_double(value) + "\n", args.out_path);
  return 0;
}

int run_bias(const BiasArgs& args) {
  std::istringstream in(load(args.ratings_path));
  const auto events = agorank::io::parse_ratings_csv(in, args.ratings_path);
  const auto matrix = agorank::rating_transition(events);

  json doc;
  doc["events"] = events.size();
  json probs = json::array();
  json support = json::array();
  for (int p = 1; p <= 5; ++p) {
    support.push_back(matrix.support[p - 1]);
    if (!matrix.row_defined(p)) {
      probs.push_back(nullptr);
      continue;
    }
    json row = json::array();
    for (int q = 1; q <= 5; ++q) row.push_back(matrix.prob(p, q));
    probs.push_back(std::move(row));
  }
  doc["probs"] = std::move(probs);
  doc["support"] = std::move(support);
  emit(dump(doc), args.out_path);
  return 0;
}

int run_timing(const TimingArgs& args) {
  std::istringstream in(load(args.timings_path));
  const auto records = agorank::io::parse_timings_csv(in, args.timings_path);
  const auto means = agorank::time_per_comparison(records);

  json doc;
  doc["records"] = records.size();
  json by_size = json::object();
  for (const auto& [group_size, seconds] : means) {
    by_size[std::to_string(group_size)] = seconds;
  }
  doc["seconds_per_comparison"] = std::move(by_size);
  emit(dump(doc), args.out_path);
  return 0;
}

int run_gen(const GenArgs& args) {
  const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);
  agorank::PreferenceProfile profile;
  if (args.mode == "ic") {
    profile = agorank::gen_impartial_culture(args.m, args.n, seed);
  } else {
    agorank::MallowsParams params;
    params.phi = args.phi;
    profile = agorank::gen_mallows(args.m, args.n, params, seed);
  }

  std::ostringstream body;
  agorank::io::write_profile_json(body, profile);
  agorank::io::write_file(args.out_path, body.str());

  json meta;
  meta["mode"] = args.mode;
  meta["m"] = args.m;
  meta["n"] = args.n;
  if (args.mode == "mallows") meta["phi"] = args.phi;
  meta["seed"] = seed;
  meta["out"] = args.out_path;

  if (!args.log_out.empty()) {
    const auto log = expand_profile(profile, args.topic);
    std::ostringstream log_body;
    agorank::io::write_comparisons_csv(log_body, log);
    agorank::io::write_file(args.log_out, log_body.str());
    meta["log_out"] = args.log_out;
    meta["log_records"] = log.size();
  }

  std::cout << dump(meta);
  return 0;
}

int run_validate(const ValidateArgs& args) {
  json doc;
  if (!args.profile_path.empty()) {
    const auto profile = load_profile(args.profile_path);
    doc["kind"] = "profile";
    doc["ideas"] = profile.idea_count();
    doc["participants"] = profile.voter_count();
    doc["complete"] = profile.complete();
  } else if (!args.log_path.empty()) {
    const auto log = load_log(args.log_path);
    doc["kind"] = "comparisons";
    doc["records"] = log.size();
    doc["ideas"] = log.idea_set().size();
  } else if (!args.ratings_path.empty()) {
    std::istringstream in(load(args.ratings_path));
    const auto events = agorank::io::parse_ratings_csv(in, args.ratings_path);
    doc["kind"] = "ratings";
    doc["events"] = events.size();
  } else if (!args.timings_path.empty()) {
    std::istringstream in(load(args.timings_path));
    const auto records = agorank::io::parse_timings_csv(in, args.timings_path);
    doc["kind"] = "timings";
    doc["records"] = records.size();
  } else {
    std::istringstream in(load(args.points_path));
    const auto points = agorank::io::parse_points_csv(in, args.points_path);
    doc["kind"] = "points";
    doc["points"] = points.size();
  }
  doc["ok"] = true;
  std::cout << dump(doc);
  return 0;
}

// ---- wiring ---------------------------------------------------------------

void add_seed(CLI::App* sub, std::uint64_t& seed, bool& seed_given) {
  sub->add_option("--seed", seed, "RNG seed (default: AGORANK_SEED, then 0)")
      ->each([&seed_given](const std::string&) { seed_given = true; });
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "agorank: sampled pairwise elicitation of Borda and Condorcet outcomes"};
  app.require_subcommand(1);
  app.fallthrough(false);

  TallyArgs tally_args;
  auto* tally = app.add_subcommand(
      "tally", "Exact Borda scores and Condorcet winner of a profile or log");
  auto* tally_profile =
      tally->add_option("--profile", tally_args.profile_path, "Profile JSON");
  auto* tally_log =
      tally->add_option("--log", tally_args.log_path, "Comparisons CSV");
  tally_profile->excludes(tally_log);
  tally->add_option("--out", tally_args.out_path, "Output path (default stdout)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand(
      "sample", "Estimate the Borda order by uniform pair sampling");
  sample->add_option("--profile", sample_args.profile_path, "Profile JSON")
      ->required();
  sample_args.samples_opt = sample->add_option(
      "--samples", sample_args.samples, "Iteration count (overrides the budget)");
  sample->add_option("--eps", sample_args.budget.eps, "Target eps")
      ->capture_default_str();
  sample->add_option("--delta", sample_args.budget.delta,
                     "Failure probability")
      ->capture_default_str();
  sample->add_option("--constant", sample_args.budget.constant,
                     "Sample bound constant")
      ->capture_default_str();
  add_seed(sample, sample_args.seed, sample_args.seed_given);
  sample->add_option("--out", sample_args.out_path, "Output path (default stdout)");

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "condorcet-search", "Search for an eps-Condorcet winner by sampling");
  search->add_option("--profile", search_args.profile_path, "Profile JSON")
      ->required();
  search->add_option("--eps", search_args.budget.eps,
                     "Target eps (0 = exact census)")
      ->capture_default_str();
  search->add_option("--delta", search_args.budget.delta,
                     "Failure probability")
      ->capture_default_str();
  search->add_option("--constant", search_args.budget.constant,
                     "Sample bound constant")
      ->capture_default_str();
  add_seed(search, search_args.seed, search_args.seed_given);
  search->add_option("--out", search_args.out_path, "Output path (default stdout)");

  ReplayArgs replay_args;
  auto* replay = app.add_subcommand(
      "replay", "Replay a log's comparisons as samples and track achieved eps");
  auto* replay_log =
      replay->add_option("--log", replay_args.log_path, "Comparisons CSV");
  auto* replay_profile = replay->add_option(
      "--profile", replay_args.profile_path, "Profile JSON (expanded to a log)");
  replay_log->excludes(replay_profile);
  replay->add_option("--topic", replay_args.topic,
                     "Topic id for an expanded profile")
      ->capture_default_str();
  replay->add_option("--repeats", replay_args.repeats, "Shuffle repeats")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  replay->add_option("--grid-size", replay_args.grid_size,
                     "Grid points up to the log size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  replay->add_option("--workers", replay_args.workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_seed(replay, replay_args.seed, replay_args.seed_given);
  replay->add_option("--target", replay_args.targets,
                     "Target eps for threshold crossings (repeatable)");
  replay->add_option("--out", replay_args.out_path, "Trajectory CSV path")
      ->required();
  replay->add_option("--points-out", replay_args.points_out,
                     "Crossing points CSV path (needs --target)");

  FitArgs fit_args;
  auto* fit = app.add_subcommand(
      "fit", "Least squares of crossing sample counts against idea count");
  fit->add_option("--points", fit_args.points_paths,
                  "Points CSV (repeatable)")
      ->required();
  fit->add_option("--target", fit_args.target,
                  "Keep only points with this target eps")
      ->each([&fit_args](const std::string&) { fit_args.target_given = true; });
  add_seed(fit, fit_args.seed, fit_args.seed_given);
  fit->add_option("--out", fit_args.out_path, "Output path (default stdout)");

  ExtrapolateArgs extra_args;
  auto* extrapolate = app.add_subcommand(
      "extrapolate", "Per-participant comparisons at scale: (a*m + b) / n");
  extra_args.a_opt =
      extrapolate->add_option("--a", extra_args.a, "Slope (comparisons per idea)");
  extra_args.b_opt = extrapolate->add_option("--b", extra_args.b, "Intercept");
  auto* extra_fit =
      extrapolate->add_option("--fit", extra_args.fit_path, "Fit JSON path");
  extra_fit->excludes(extra_args.a_opt);
  extra_fit->excludes(extra_args.b_opt);
  extrapolate->add_option("--m", extra_args.m, "Idea count")->required();
  extrapolate->add_option("--n", extra_args.n, "Participant count")->required();
  extrapolate->add_option("--out", extra_args.out_path,
                          "Output path (default stdout)");

  BiasArgs bias_args;
  auto* bias = app.add_subcommand(
      "bias", "First-order transition matrix of sequential star ratings");
  bias->add_option("--ratings", bias_args.ratings_path, "Ratings CSV")
      ->required();
  bias->add_option("--out", bias_args.out_path, "Output path (default stdout)");

  TimingArgs timing_args;
  auto* timing = app.add_subcommand(
      "timing", "Mean seconds per effective comparison by group size");
  timing->add_option("--timings", timing_args.timings_path, "Timings CSV")
      ->required();
  timing->add_option("--out", timing_args.out_path, "Output path (default stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic profile");
  gen->add_option("--mode", gen_args.mode, "ic or mallows")
      ->capture_default_str()
      ->check(CLI::IsMember({"ic", "mallows"}));
  gen->add_option("--m", gen_args.m, "Idea count")->required();
  gen->add_option("--n", gen_args.n, "Participant count")->required();
  gen->add_option("--phi", gen_args.phi, "Mallows dispersion in (0, 1]")
      ->capture_default_str();
  gen->add_option("--topic", gen_args.topic, "Topic id for --log-out")
      ->capture_default_str();
  add_seed(gen, gen_args.seed, gen_args.seed_given);
  gen->add_option("--out", gen_args.out_path, "Profile JSON path")->required();
  gen->add_option("--log-out", gen_args.log_out,
                  "Also write the expanded comparison log CSV");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "Parse and validate one input file");
  auto* v_profile =
      validate->add_option("--profile", validate_args.profile_path, "Profile JSON");
  auto* v_log = validate->add_option("--log", validate_args.log_path,
                                     "Comparisons CSV");
  auto* v_ratings =
      validate->add_option("--ratings", validate_args.ratings_path, "Ratings CSV");
  auto* v_timings =
      validate->add_option("--timings", validate_args.timings_path, "Timings CSV");
  auto* v_points =
      validate->add_option("--points", validate_args.points_path, "Points CSV");
  for (auto* a : {v_profile, v_log, v_ratings, v_timings, v_points}) {
    for (auto* b : {v_profile, v_log, v_ratings, v_timings, v_points}) {
      if (a != b) a->excludes(b);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (tally->parsed()) {
    if (tally_args.profile_path.empty() && tally_args.log_path.empty()) {
      throw agorank::ValidationError("tally needs --profile or --log");
    }
    return run_tally(tally_args);
  }
  if (sample->parsed()) return run_sample(sample_args);
  if (search->parsed()) return run_condorcet_search(search_args);
  if (replay->parsed()) {
    if (replay_args.log_path.empty() && replay_args.profile_path.empty()) {
      throw agorank::ValidationError("replay needs --log or --profile");
    }
    return run_replay(replay_args);
  }
  if (fit->parsed()) return run_fit(fit_args);
  if (extrapolate->parsed()) return run_extrapolate(extra_args);
  if (bias->parsed()) return run_bias(bias_args);
  if (timing->parsed()) return run_timing(timing_args);
  if (gen->parsed()) return run_gen(gen_args);
  if (validate->parsed()) {
    if (validate_args.profile_path.empty() && validate_args.log_path.empty() &&
        validate_args.ratings_path.empty() &&
        validate_args.timings_path.empty() &&
        validate_args.points_path.empty()) {
      throw agorank::ValidationError(
          "validate needs one of --profile, --log, --ratings, --timings, "
          "--points");
    }
    return run_validate(validate_args);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const agorank::IoError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const agorank::ValidationError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
}

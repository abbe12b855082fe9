#include "agorank/replay.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "agorank/errors.hpp"
#include "agorank/rng.hpp"

namespace agorank {

std::vector<std::int64_t> make_log_grid(std::int64_t size,
                                        std::int64_t points) {
  if (size < 1) throw ValidationError("log size must be at least 1");
  if (points < 1) throw ValidationError("grid needs at least 1 point");
  std::vector<std::int64_t> grid;
  if (points == 1 || size == 1) {
    grid.push_back(size);
    return grid;
  }
  const double log_size = std::log(static_cast<double>(size));
  for (std::int64_t i = 0; i < points; ++i) {
    const double fraction =
        static_cast<double>(i) / static_cast<double>(points - 1);
    auto value = static_cast<std::int64_t>(
        std::llround(std::exp(fraction * log_size)));
    value = std::clamp<std::int64_t>(value, 1, size);
    if (grid.empty() || value > grid.back()) grid.push_back(value);
  }
  if (grid.back() != size) grid.push_back(size);
  return grid;
}

namespace {

struct ReplayPlan {
  std::vector<int> winner_index;     // per record, index into sorted ideas
  std::vector<double> truth;         // normalized full-log counts
  std::vector<std::int64_t> grid;
  std::size_t idea_count = 0;
};

// Achieved eps of every grid prefix for one shuffled replay.
void run_one_repeat(const ReplayPlan& plan, std::uint64_t repeat_seed,
                    std::vector<double>& eps_out) {
  std::vector<int> order = plan.winner_index;
  rng::Engine gen = rng::make_engine(repeat_seed);
  rng::shuffle(order, gen);

  const double m = static_cast<double>(plan.idea_count);
  std::vector<std::int64_t> counts(plan.idea_count, 0);
  std::size_t consumed = 0;
  for (std::size_t g = 0; g < plan.grid.size(); ++g) {
    const auto t = static_cast<std::size_t>(plan.grid[g]);
    for (; consumed < t; ++consumed) ++counts[order[consumed]];
    double worst = 0.0;
    if (t == 0) {
      // Nothing sampled yet: estimate uniformly at 1/m.
      for (std::size_t x = 0; x < plan.idea_count; ++x) {
        worst = std::max(worst, std::abs(1.0 / m - plan.truth[x]));
      }
    } else {
      for (std::size_t x = 0; x < plan.idea_count; ++x) {
        const double estimate =
            static_cast<double>(counts[x]) / static_cast<double>(t);
        worst = std::max(worst, std::abs(estimate - plan.truth[x]));
      }
    }
    eps_out[g] = (m / 2.0) * worst;
  }
}

}  // namespace

ConvergenceTrajectory replay_trajectory(const ComparisonLog& log,
                                        const std::vector<IdeaId>& ideas,
                                        std::int64_t repeats,
                                        const std::vector<std::int64_t>& grid,
                                        std::uint64_t seed, int workers) {
  if (log.records.empty()) throw ValidationError("cannot replay an empty log");
  if (repeats < 1) throw ValidationError("repeats must be at least 1");
  if (grid.empty()) throw ValidationError("grid must not be empty");
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (grid[g] < 0) throw ValidationError("grid points must be non-negative");
    if (g > 0 && grid[g] <= grid[g - 1]) {
      throw ValidationError("grid must be strictly increasing");
    }
    if (grid[g] > static_cast<std::int64_t>(log.size())) {
      throw ValidationError("grid point " + std::to_string(grid[g]) +
                            " exceeds log size " + std::to_string(log.size()));
    }
  }

  // Ground truth: normalized win counts of the complete log.
  const ScoreVector full_counts = borda_scores_from_comparisons(log, ideas);
  const NormalizedScoreVector truth = normalize(full_counts);

  ReplayPlan plan;
  plan.grid = grid;
  plan.idea_count = truth.scores.size();
  std::vector<IdeaId> sorted;
  for (const auto& [idea, share] : truth.scores) {
    sorted.push_back(idea);
    plan.truth.push_back(share);
  }
  plan.winner_index.reserve(log.size());
  for (const auto& record : log.records) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(),
                                     record.winner);
    plan.winner_index.push_back(static_cast<int>(it - sorted.begin()));
  }

  // One slot per repeat; repeat r always uses derive_seed(seed, r), so the
  // trajectory is a pure function of (inputs, seed) however many workers run.
  const auto repeat_count = static_cast<std::size_t>(repeats);
  std::vector<std::vector<double>> slots(
      repeat_count, std::vector<double>(grid.size(), 0.0));
  const int pool = std::max(1, workers);
  if (pool == 1) {
    for (std::size_t r = 0; r < repeat_count; ++r) {
      run_one_repeat(plan, rng::derive_seed(seed, r), slots[r]);
    }
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int w = 0; w < pool; ++w) {
      threads.emplace_back([&plan, &slots, seed, repeat_count, pool, w] {
        for (std::size_t r = static_cast<std::size_t>(w); r < repeat_count;
             r += static_cast<std::size_t>(pool)) {
          run_one_repeat(plan, rng::derive_seed(seed, r), slots[r]);
        }
      });
    }
    for (auto& thread : threads) thread.join();
  }

  ConvergenceTrajectory trajectory;
  trajectory.grid = grid;
  trajectory.repeats = repeats;
  trajectory.eps_mean.resize(grid.size());
  trajectory.eps_std.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double sum = 0.0;
    for (std::size_t r = 0; r < repeat_count; ++r) sum += slots[r][g];
    const double mean = sum / static_cast<double>(repeat_count);
    double sq = 0.0;
    for (std::size_t r = 0; r < repeat_count; ++r) {
      const double d = slots[r][g] - mean;
      sq += d * d;
    }
    trajectory.eps_mean[g] = mean;
    trajectory.eps_std[g] = std::sqrt(sq / static_cast<double>(repeat_count));
  }
  return trajectory;
}

std::optional<std::int64_t> threshold_crossing(
    const ConvergenceTrajectory& trajectory, double target_eps) {
  if (!(target_eps > 0.0)) {
    throw ValidationError("target eps must be positive");
  }
  for (std::size_t g = 0; g < trajectory.grid.size(); ++g) {
    if (trajectory.eps_mean[g] <= target_eps) return trajectory.grid[g];
  }
  return std::nullopt;
}

std::optional<double> threshold_crossing_interpolated(
    const ConvergenceTrajectory& trajectory, double target_eps) {
  if (!(target_eps > 0.0)) {
    throw ValidationError("target eps must be positive");
  }
  for (std::size_t g = 0; g < trajectory.grid.size(); ++g) {
    if (trajectory.eps_mean[g] > target_eps) continue;
    if (g == 0) return static_cast<double>(trajectory.grid[0]);
    const double x0 = static_cast<double>(trajectory.grid[g - 1]);
    const double x1 = static_cast<double>(trajectory.grid[g]);
    const double y0 = trajectory.eps_mean[g - 1];
    const double y1 = trajectory.eps_mean[g];
    return x0 + (y0 - target_eps) * (x1 - x0) / (y0 - y1);
  }
  return std::nullopt;
}

LinearFit fit_linear(const std::vector<ThresholdPoint>& points) {
  std::vector<std::int64_t> distinct;
  for (const auto& point : points) distinct.push_back(point.m);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() < 2) {
    throw ValidationError(
        "linear fit needs at least 2 points with distinct idea counts");
  }

  const double count = static_cast<double>(points.size());
  double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
  for (const auto& point : points) {
    const double x = static_cast<double>(point.m);
    sum_x += x;
    sum_y += point.samples;
    sum_xx += x * x;
    sum_xy += x * point.samples;
  }
  const double denominator = count * sum_xx - sum_x * sum_x;
  const double slope = (count * sum_xy - sum_x * sum_y) / denominator;
  const double intercept = (sum_y - slope * sum_x) / count;

  const double mean_y = sum_y / count;
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& point : points) {
    const double predicted = slope * static_cast<double>(point.m) + intercept;
    ss_res += (point.samples - predicted) * (point.samples - predicted);
    ss_tot += (point.samples - mean_y) * (point.samples - mean_y);
  }

  LinearFit fit;
  fit.a = slope;
  fit.b = intercept;
  fit.r2 = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  fit.points = points;
  return fit;
}

double extrapolate_per_participant(double a, double b, std::int64_t m,
                                   std::int64_t n) {
  if (m < 1) throw ValidationError("idea count must be positive");
  if (n < 1) throw ValidationError("participant count must be positive");
  const double total = a * static_cast<double>(m) + b;
  if (!(total > 0.0)) {
    throw ValidationError(
        "fitted trend predicts a non-positive comparison total at m = " +
        std::to_string(m) + "; extrapolation is outside the fitted regime");
  }
  return total / static_cast<double>(n);
}

double extrapolate_per_participant(const LinearFit& fit, std::int64_t m,
                                   std::int64_t n) {
  return extrapolate_per_participant(fit.a, fit.b, m, n);
}

}  // namespace agorank

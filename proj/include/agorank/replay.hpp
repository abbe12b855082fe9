#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agorank/core.hpp"
#include "agorank/social_choice.hpp"

namespace agorank {

/// Averaged convergence curve of the achieved eps over replayed sample
/// prefixes. grid is strictly increasing; eps_mean/eps_std are per grid
/// point, aggregated over `repeats` independent shuffles.
struct ConvergenceTrajectory {
  std::vector<std::int64_t> grid;
  std::vector<double> eps_mean;
  std::vector<double> eps_std;  // population standard deviation
  std::int64_t repeats = 0;
};

/// The sample count at which a trajectory first reaches a target eps, for
/// one topic of m ideas.
struct ThresholdPoint {
  std::int64_t m = 0;
  double target_eps = 0.0;
  double samples = 0.0;  // a grid member, unless interpolation was requested
};

/// Ordinary least squares of crossing sample counts against idea count.
struct LinearFit {
  double a = 0.0;   // comparisons per idea
  double b = 0.0;   // intercept
  double r2 = 0.0;  // in [0, 1]; defined as 1 on exactly collinear input
  std::vector<ThresholdPoint> points;
};

/// Logarithmically spaced grid of `points` sample counts from 1 to `size`,
/// deduplicated (so short logs yield fewer points). First point is 1, last
/// is `size`.
std::vector<std::int64_t> make_log_grid(std::int64_t size,
                                        std::int64_t points = 50);

/// Replay a recorded log as if its comparisons were the samples of the
/// uniform estimator. Ground truth is the normalized win-count vector of the
/// full log. Each repeat shuffles the log with a seed derived from (seed,
/// repeat index) and scores the normalized prefix counts at every grid point
/// via achieved_epsilon; a prefix with no counts yet estimates uniformly at
/// 1/m. Mean and standard deviation are aggregated per grid point.
///
/// Repeats may run on `workers` threads; results are bitwise identical for
/// every worker count because each repeat writes a pre-allocated slot and
/// aggregation always walks slots in index order.
ConvergenceTrajectory replay_trajectory(const ComparisonLog& log,
                                        const std::vector<IdeaId>& ideas,
                                        std::int64_t repeats,
                                        const std::vector<std::int64_t>& grid,
                                        std::uint64_t seed, int workers = 1);

/// First grid point whose eps_mean is <= target_eps, if any. Crossing
/// resolution is quantized to the grid.
std::optional<std::int64_t> threshold_crossing(
    const ConvergenceTrajectory& trajectory, double target_eps);

/// Linear interpolation between the bracketing grid points; falls back to
/// the first grid point when the curve starts at or below target.
std::optional<double> threshold_crossing_interpolated(
    const ConvergenceTrajectory& trajectory, double target_eps);

/// OLS of samples against m. Requires at least two points with distinct m.
LinearFit fit_linear(const std::vector<ThresholdPoint>& points);

/// Expected comparisons per participant when the fitted trend is pushed to
/// m ideas and n participants: (a*m + b) / n. Rejects a non-positive
/// predicted total.
double extrapolate_per_participant(double a, double b, std::int64_t m,
                                   std::int64_t n);
double extrapolate_per_participant(const LinearFit& fit, std::int64_t m,
                                   std::int64_t n);

}  // namespace agorank

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "agorank/behavioral.hpp"
#include "agorank/core.hpp"
#include "agorank/replay.hpp"

namespace agorank::io {

/// Parsers attach `name` (usually the file path) plus line and column to
/// every error; no row is ever skipped silently. CSV inputs are UTF-8,
/// comma-delimited, header row required, LF or CRLF line endings, quoted
/// fields per the usual doubling convention.

/// Header: topic_id,participant_id,winner,loser,elapsed_ms
/// elapsed_ms may be empty. All rows must carry the same topic id.
ComparisonLog parse_comparisons_csv(std::istream& in, const std::string& name);

/// Object with "ideas": array of id strings and "rankings": participant id
/// to array of idea ids, best first. A duplicate ranking for the same
/// participant is an error, as is any profile failing validation.
PreferenceProfile parse_profile_json(std::istream& in, const std::string& name);

/// Header: participant_id,sequence_index,stars
std::vector<RatingEvent> parse_ratings_csv(std::istream& in,
                                           const std::string& name);

/// Header: participant_id,group_size,elapsed_ms
std::vector<TimingRecord> parse_timings_csv(std::istream& in,
                                            const std::string& name);

/// Header: m,target_eps,samples. Threshold crossings collected across
/// topics, the input of the linear fit.
std::vector<ThresholdPoint> parse_points_csv(std::istream& in,
                                             const std::string& name);

void write_comparisons_csv(std::ostream& out, const ComparisonLog& log);
void write_profile_json(std::ostream& out, const PreferenceProfile& profile);
void write_ratings_csv(std::ostream& out,
                       const std::vector<RatingEvent>& events);
void write_timings_csv(std::ostream& out,
                       const std::vector<TimingRecord>& records);
void write_points_csv(std::ostream& out,
                      const std::vector<ThresholdPoint>& points);

/// Header: samples,eps_mean,eps_std
void write_trajectory_csv(std::ostream& out,
                          const ConvergenceTrajectory& trajectory);

/// Object with a, b, r2, points (array of {m, target_eps, samples}), seed.
void write_fit_json(std::ostream& out, const LinearFit& fit,
                    std::uint64_t seed);

/// Shortest decimal representation that round-trips the exact double, so
/// serialized numbers are identical across runs.
std::string format_double(double value);

/// Whole-file reads/writes that raise IoError with the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace agorank::io

#include "agorank/behavioral.hpp"

#include <algorithm>

#include "agorank/errors.hpp"

namespace agorank {

TransitionMatrix rating_transition(const std::vector<RatingEvent>& events) {
  for (const auto& event : events) {
    if (event.stars < 1 || event.stars > 5) {
      throw ValidationError("stars must be in 1..5, got " +
                            std::to_string(event.stars));
    }
    if (event.sequence_index < 0) {
      throw ValidationError("sequence_index must be non-negative");
    }
  }

  // Group per participant, order each session by sequence_index.
  std::map<ParticipantId, std::vector<const RatingEvent*>> sessions;
  for (const auto& event : events) {
    sessions[event.participant].push_back(&event);
  }

  std::array<std::array<std::int64_t, 5>, 5> transitions{};
  for (auto& [participant, session] : sessions) {
    std::stable_sort(session.begin(), session.end(),
                     [](const RatingEvent* lhs, const RatingEvent* rhs) {
                       return lhs->sequence_index < rhs->sequence_index;
                     });
    for (std::size_t k = 0; k + 1 < session.size(); ++k) {
      if (session[k]->sequence_index == session[k + 1]->sequence_index) {
        throw ValidationError("participant '" + participant.value +
                              "' repeats sequence_index " +
                              std::to_string(session[k]->sequence_index));
      }
      ++transitions[session[k]->stars - 1][session[k + 1]->stars - 1];
    }
  }

  TransitionMatrix matrix;
  for (int prev = 0; prev < 5; ++prev) {
    std::int64_t row_total = 0;
    for (int next = 0; next < 5; ++next) row_total += transitions[prev][next];
    matrix.support[prev] = row_total;
    for (int next = 0; next < 5; ++next) {
      matrix.probs[prev][next] =
          row_total > 0 ? static_cast<double>(transitions[prev][next]) /
                              static_cast<double>(row_total)
                        : 0.0;
    }
  }
  return matrix;
}

CondorcetExistenceSummary condorcet_existence_summary(
    const std::vector<PairwiseTally>& topics) {
  CondorcetExistenceSummary summary;
  summary.topics_total = static_cast<std::int64_t>(topics.size());
  for (const auto& tally : topics) {
    summary.winners.push_back(condorcet_winner(tally));
    if (summary.winners.back()) {
      ++summary.with_winner;
    } else {
      ++summary.without_winner;
    }
  }
  return summary;
}

std::map<std::int64_t, double> time_per_comparison(
    const std::vector<TimingRecord>& records) {
  if (records.empty()) {
    throw ValidationError("timing records must not be empty");
  }
  std::map<std::int64_t, double> sums;
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& record : records) {
    if (record.group_size < 2) {
      throw ValidationError("group size must be at least 2, got " +
                            std::to_string(record.group_size));
    }
    if (record.elapsed_ms <= 0) {
      throw ValidationError("elapsed_ms must be positive");
    }
    const double comparisons = static_cast<double>(record.group_size) *
                               static_cast<double>(record.group_size - 1) /
                               2.0;
    sums[record.group_size] +=
        static_cast<double>(record.elapsed_ms) / 1000.0 / comparisons;
    ++counts[record.group_size];
  }
  std::map<std::int64_t, double> means;
  for (const auto& [group_size, sum] : sums) {
    means[group_size] = sum / static_cast<double>(counts.at(group_size));
  }
  return means;
}

}  // namespace agorank

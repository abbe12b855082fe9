#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "agorank/core.hpp"
#include "agorank/social_choice.hpp"

namespace agorank {

/// One star rating in a participant's session, ordered by sequence_index.
struct RatingEvent {
  ParticipantId participant;
  std::int64_t sequence_index = 0;  // non-negative, strictly increasing per participant
  int stars = 0;                    // 1..5
};

/// First-order transition frequencies between consecutive ratings of the
/// same participant. probs[p][q] is the conditional frequency of q stars
/// right after p stars (indices 0..4 for stars 1..5); support[p] counts the
/// transitions out of p. A row with zero support is empty, not zero-filled:
/// its probs are meaningless and row_defined(p) is false.
struct TransitionMatrix {
  std::array<std::array<double, 5>, 5> probs{};
  std::array<std::int64_t, 5> support{};

  bool row_defined(int prev_stars) const {
    return support[prev_stars - 1] > 0;
  }
  double prob(int prev_stars, int next_stars) const {
    return probs[prev_stars - 1][next_stars - 1];
  }
};

/// Elapsed time for one k-wise ranking task.
struct TimingRecord {
  ParticipantId participant;
  std::int64_t group_size = 0;  // k >= 2
  std::int64_t elapsed_ms = 0;  // positive
};

/// Condorcet existence across a collection of topics.
struct CondorcetExistenceSummary {
  std::int64_t topics_total = 0;
  std::int64_t with_winner = 0;
  std::int64_t without_winner = 0;
  std::vector<std::optional<IdeaId>> winners;  // per topic, input order
};

/// Count rating transitions between consecutive events of each participant
/// (events are grouped by participant and ordered by sequence_index; a
/// transition never crosses a participant boundary). Rejects duplicate
/// sequence indices and out-of-range stars.
TransitionMatrix rating_transition(const std::vector<RatingEvent>& events);

/// Tally exact Condorcet winners over many topics. with_winner +
/// without_winner always equals topics_total.
CondorcetExistenceSummary condorcet_existence_summary(
    const std::vector<PairwiseTally>& topics);

/// Mean seconds per effective comparison, per group size: each record
/// contributes elapsed / (k(k-1)/2) seconds to its k's mean. Rejects an
/// empty input.
std::map<std::int64_t, double> time_per_comparison(
    const std::vector<TimingRecord>& records);

}  // namespace agorank

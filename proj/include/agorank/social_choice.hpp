#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "agorank/core.hpp"

namespace agorank {

/// Per-idea Borda points (or sample counts). Integer-valued: the library
/// keeps exact arithmetic until normalization.
struct ScoreVector {
  std::map<IdeaId, std::int64_t> scores;

  std::size_t size() const { return scores.size(); }
  std::int64_t total() const;
};

/// Per-idea share of the total score; entries sum to 1 within 1e-9.
struct NormalizedScoreVector {
  std::map<IdeaId, double> scores;

  std::size_t size() const { return scores.size(); }
};

/// Head-to-head vote counts. wins(x, y) is the number of recorded
/// preferences for x over y. voters is the population size n: the number of
/// rankings for a profile source, the number of distinct participants for a
/// comparison-log source.
class PairwiseTally {
 public:
  PairwiseTally(std::vector<IdeaId> ideas, std::int64_t voters);

  std::int64_t wins(const IdeaId& x, const IdeaId& y) const;
  void add_win(const IdeaId& winner, const IdeaId& loser, std::int64_t k = 1);

  const std::vector<IdeaId>& ideas() const { return ideas_; }
  std::size_t idea_count() const { return ideas_.size(); }
  std::int64_t voters() const { return voters_; }

 private:
  std::size_t index_of(const IdeaId& id) const;

  std::vector<IdeaId> ideas_;          // sorted ascending
  std::vector<std::int64_t> counts_;   // m*m row-major, diagonal unused
  std::int64_t voters_;
};

/// Exact Borda scores of a complete profile: score(x) = sum over voters of
/// (m - rank of x). Rejects incomplete profiles, where exact Borda is
/// undefined; score a comparison log instead.
ScoreVector borda_scores(const PreferenceProfile& profile);

/// Scores from recorded comparisons: score(x) = number of records x won.
/// All record ids must belong to `ideas`; the result covers every idea,
/// including those that never won. Rejects an empty log.
ScoreVector borda_scores_from_comparisons(const ComparisonLog& log,
                                          const std::vector<IdeaId>& ideas);

/// Divide by the total. Rejects an all-zero vector.
NormalizedScoreVector normalize(const ScoreVector& scores);

/// Ideas by descending score, ties broken by ascending id so the result is
/// deterministic.
Ranking borda_ranking(const ScoreVector& scores);

/// True iff score(x) >= (1 - eps) * max score. eps must be in [0, 1].
bool is_epsilon_borda_winner(const IdeaId& x, const ScoreVector& scores,
                             double eps);

/// The smallest eps for which `estimate` certifies an eps-Borda ranking
/// against `truth`: (m/2) * max per-idea deviation. Requires matching idea
/// sets; symmetric in its arguments.
double achieved_epsilon(const NormalizedScoreVector& estimate,
                        const NormalizedScoreVector& truth);

/// Head-to-head counts from a profile. Only pairs ranked by a given
/// participant contribute; for complete profiles wins(x,y) + wins(y,x) = n
/// for every pair.
PairwiseTally pairwise_tally(const PreferenceProfile& profile);

/// Head-to-head counts from a comparison log.
PairwiseTally pairwise_tally(const ComparisonLog& log,
                             const std::vector<IdeaId>& ideas);

/// The idea beating every rival by strict majority, if one exists. At most
/// one can.
std::optional<IdeaId> condorcet_winner(const PairwiseTally& tally);

/// Denominator convention for the epsilon-Condorcet vote threshold. The
/// natural reading counts votes against the participant population
/// (threshold (1-eps) * n/2); the idea-count variant ((1-eps) * m/2) is kept
/// available because the definition is sometimes stated that way.
enum class CondorcetThresholdBase { Participants, Ideas };

/// True iff x receives at least (1-eps) * base/2 votes against at least
/// (1-eps) * (m-1) rivals. eps must be in [0, 1]. Comparisons carry a 1e-9
/// slack so exact-boundary cases pass despite rounding.
bool is_epsilon_condorcet_winner(
    const IdeaId& x, const PairwiseTally& tally, double eps,
    CondorcetThresholdBase base = CondorcetThresholdBase::Participants);

}  // namespace agorank

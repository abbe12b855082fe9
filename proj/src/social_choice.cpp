#include "agorank/social_choice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "agorank/errors.hpp"

namespace agorank {

namespace {

// Slack for comparing integer counts against real-valued thresholds like
// (1 - eps) * n / 2: a mathematically-equal boundary must not fail because
// the threshold product rounded up by an ulp.
constexpr double kThresholdSlack = 1e-9;

void check_eps_range(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw ValidationError("eps must be in [0, 1], got " + std::to_string(eps));
  }
}

std::vector<IdeaId> sorted_unique_ideas(std::vector<IdeaId> ideas) {
  std::sort(ideas.begin(), ideas.end());
  ideas.erase(std::unique(ideas.begin(), ideas.end()), ideas.end());
  return ideas;
}

}  // namespace

std::int64_t ScoreVector::total() const {
  std::int64_t sum = 0;
  for (const auto& [idea, score] : scores) sum += score;
  return sum;
}

PairwiseTally::PairwiseTally(std::vector<IdeaId> ideas, std::int64_t voters)
    : ideas_(sorted_unique_ideas(std::move(ideas))),
      counts_(ideas_.size() * ideas_.size(), 0),
      voters_(voters) {
  if (ideas_.size() < 2) {
    throw ValidationError("pairwise tally needs at least 2 ideas");
  }
}

std::size_t PairwiseTally::index_of(const IdeaId& id) const {
  const auto it = std::lower_bound(ideas_.begin(), ideas_.end(), id);
  if (it == ideas_.end() || *it != id) {
    throw ValidationError("idea '" + id.value + "' not in tally");
  }
  return static_cast<std::size_t>(it - ideas_.begin());
}

std::int64_t PairwiseTally::wins(const IdeaId& x, const IdeaId& y) const {
  if (x == y) throw ValidationError("wins(x, x) is undefined");
  return counts_[index_of(x) * ideas_.size() + index_of(y)];
}

void PairwiseTally::add_win(const IdeaId& winner, const IdeaId& loser,
                            std::int64_t k) {
  if (winner == loser) {
    throw ValidationError("winner and loser must differ");
  }
  counts_[index_of(winner) * ideas_.size() + index_of(loser)] += k;
}

ScoreVector borda_scores(const PreferenceProfile& profile) {
  require_valid(profile);
  if (!profile.complete()) {
    throw ValidationError(
        "exact Borda scores need a complete profile; score the comparison "
        "log instead (borda_scores_from_comparisons)");
  }
  const std::int64_t m = static_cast<std::int64_t>(profile.idea_count());
  ScoreVector result;
  for (const IdeaId& idea : profile.ideas) result.scores[idea] = 0;
  for (const auto& [participant, ranking] : profile.rankings) {
    for (std::size_t pos = 0; pos < ranking.ordered.size(); ++pos) {
      // 1-based rank r earns m - r points.
      result.scores[ranking.ordered[pos]] +=
          m - static_cast<std::int64_t>(pos + 1);
    }
  }
  return result;
}

ScoreVector borda_scores_from_comparisons(const ComparisonLog& log,
                                          const std::vector<IdeaId>& ideas) {
  if (log.records.empty()) {
    throw ValidationError("cannot score an empty comparison log");
  }
  ScoreVector result;
  for (const IdeaId& idea : ideas) result.scores[idea] = 0;
  for (const auto& record : log.records) {
    const auto it = result.scores.find(record.winner);
    if (it == result.scores.end() || !result.scores.count(record.loser)) {
      throw ValidationError("comparison log mentions idea outside the idea "
                            "set: '" +
                            (it == result.scores.end() ? record.winner.value
                                                       : record.loser.value) +
                            "'");
    }
    ++it->second;
  }
  return result;
}

NormalizedScoreVector normalize(const ScoreVector& scores) {
  const std::int64_t total = scores.total();
  if (total <= 0) {
    throw ValidationError("cannot normalize an all-zero score vector");
  }
  NormalizedScoreVector result;
  for (const auto& [idea, score] : scores.scores) {
    result.scores[idea] =
        static_cast<double>(score) / static_cast<double>(total);
  }
  return result;
}

Ranking borda_ranking(const ScoreVector& scores) {
  std::vector<IdeaId> order;
  order.reserve(scores.scores.size());
  for (const auto& [idea, score] : scores.scores) order.push_back(idea);
  // Descending score; the map already yields ascending ids, and stable_sort
  // keeps that order within ties.
  std::stable_sort(order.begin(), order.end(),
                   [&scores](const IdeaId& lhs, const IdeaId& rhs) {
                     return scores.scores.at(lhs) > scores.scores.at(rhs);
                   });
  return Ranking{std::move(order)};
}

bool is_epsilon_borda_winner(const IdeaId& x, const ScoreVector& scores,
                             double eps) {
  check_eps_range(eps);
  const auto it = scores.scores.find(x);
  if (it == scores.scores.end()) {
    throw ValidationError("idea '" + x.value + "' not in score vector");
  }
  std::int64_t best = 0;
  for (const auto& [idea, score] : scores.scores) best = std::max(best, score);
  return static_cast<double>(it->second) >=
         (1.0 - eps) * static_cast<double>(best) - kThresholdSlack;
}

double achieved_epsilon(const NormalizedScoreVector& estimate,
                        const NormalizedScoreVector& truth) {
  if (estimate.scores.size() != truth.scores.size()) {
    throw ValidationError("achieved_epsilon: idea sets differ in size");
  }
  double worst = 0.0;
  auto et = estimate.scores.begin();
  auto tt = truth.scores.begin();
  for (; et != estimate.scores.end(); ++et, ++tt) {
    if (et->first != tt->first) {
      throw ValidationError("achieved_epsilon: idea sets differ ('" +
                            et->first.value + "' vs '" + tt->first.value +
                            "')");
    }
    worst = std::max(worst, std::abs(et->second - tt->second));
  }
  const double m = static_cast<double>(truth.scores.size());
  return (m / 2.0) * worst;
}

PairwiseTally pairwise_tally(const PreferenceProfile& profile) {
  require_valid(profile);
  PairwiseTally tally(profile.ideas,
                      static_cast<std::int64_t>(profile.voter_count()));
  for (const auto& [participant, ranking] : profile.rankings) {
    const auto& order = ranking.ordered;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        tally.add_win(order[i], order[j]);
      }
    }
  }
  return tally;
}

PairwiseTally pairwise_tally(const ComparisonLog& log,
                             const std::vector<IdeaId>& ideas) {
  std::vector<ParticipantId> participants;
  for (const auto& record : log.records) participants.push_back(record.participant);
  std::sort(participants.begin(), participants.end());
  participants.erase(std::unique(participants.begin(), participants.end()),
                     participants.end());
  PairwiseTally tally(ideas, static_cast<std::int64_t>(participants.size()));
  for (const auto& record : log.records) {
    tally.add_win(record.winner, record.loser);
  }
  return tally;
}

std::optional<IdeaId> condorcet_winner(const PairwiseTally& tally) {
  for (const IdeaId& candidate : tally.ideas()) {
    bool beats_all = true;
    for (const IdeaId& rival : tally.ideas()) {
      if (rival == candidate) continue;
      if (tally.wins(candidate, rival) <= tally.wins(rival, candidate)) {
        beats_all = false;
        break;
      }
    }
    if (beats_all) return candidate;
  }
  return std::nullopt;
}

bool is_epsilon_condorcet_winner(const IdeaId& x, const PairwiseTally& tally,
                                 double eps, CondorcetThresholdBase base) {
  check_eps_range(eps);
  const double m = static_cast<double>(tally.idea_count());
  const double denominator =
      base == CondorcetThresholdBase::Participants
          ? static_cast<double>(tally.voters())
          : m;
  const double vote_threshold = (1.0 - eps) * denominator / 2.0;
  std::int64_t qualifying = 0;
  for (const IdeaId& rival : tally.ideas()) {
    if (rival == x) continue;
    if (static_cast<double>(tally.wins(x, rival)) >=
        vote_threshold - kThresholdSlack) {
      ++qualifying;
    }
  }
  return static_cast<double>(qualifying) >=
         (1.0 - eps) * (m - 1.0) - kThresholdSlack;
}

}  // namespace agorank

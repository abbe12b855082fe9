#include "agorank/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agorank/errors.hpp"

namespace agorank {

namespace {

constexpr double kThresholdSlack = 1e-9;

std::vector<IdeaId> checked_idea_set(std::vector<IdeaId> ideas) {
  std::sort(ideas.begin(), ideas.end());
  if (std::adjacent_find(ideas.begin(), ideas.end()) != ideas.end()) {
    throw ValidationError("idea set contains duplicates");
  }
  if (ideas.size() < 2) {
    throw ValidationError("need at least 2 ideas to sample comparisons");
  }
  return ideas;
}

// Fails when any unordered pair has no participant able to compare it.
void check_all_pairs_comparable(const ComparisonOracle& oracle,
                                const std::vector<IdeaId>& ideas) {
  for (std::size_t i = 0; i + 1 < ideas.size(); ++i) {
    for (std::size_t j = i + 1; j < ideas.size(); ++j) {
      if (oracle.comparers(ideas[i], ideas[j]).empty()) {
        throw ValidationError("pair {" + ideas[i].value + ", " +
                              ideas[j].value +
                              "} is comparable by no participant");
      }
    }
  }
}

std::size_t winner_index(const IdeaId& winner, const std::vector<IdeaId>& ideas,
                         std::size_t i, std::size_t j) {
  if (winner == ideas[i]) return i;
  if (winner == ideas[j]) return j;
  throw ValidationError("oracle returned '" + winner.value +
                        "', which is neither queried idea");
}

}  // namespace

void SampleBudget::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ValidationError("eps must be strictly inside (0, 1), got " +
                          std::to_string(eps));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("delta must be strictly inside (0, 1), got " +
                          std::to_string(delta));
  }
  if (!(constant > 0.0)) {
    throw ValidationError("constant must be positive, got " +
                          std::to_string(constant));
  }
}

std::int64_t suggested_samples(std::int64_t m, const SampleBudget& budget) {
  budget.validate();
  if (m < 2) throw ValidationError("need at least 2 ideas");
  const double raw = budget.constant *
                     (static_cast<double>(m) / (budget.eps * budget.eps)) *
                     std::log(static_cast<double>(m) / budget.delta);
  if (!(raw < 9.0e18)) {
    throw ValidationError("sample budget overflows a 64-bit count");
  }
  return static_cast<std::int64_t>(std::ceil(raw));
}

namespace detail {

std::pair<std::size_t, std::size_t> sample_unordered_pair(rng::Engine& gen,
                                                          std::size_t m) {
  const std::uint64_t pair_count =
      static_cast<std::uint64_t>(m) * (m - 1) / 2;
  std::uint64_t k = rng::uniform_below(gen, pair_count);
  // k-th pair in lexicographic order: row i holds m-1-i pairs.
  std::size_t i = 0;
  while (k >= m - 1 - i) {
    k -= m - 1 - i;
    ++i;
  }
  return {i, i + 1 + static_cast<std::size_t>(k)};
}

}  // namespace detail

SampledRanking algorithm1(const ComparisonOracle& oracle,
                          const std::vector<IdeaId>& ideas,
                          const std::vector<ParticipantId>& participants,
                          std::int64_t samples, std::uint64_t seed) {
  const std::vector<IdeaId> sorted = checked_idea_set(ideas);
  if (participants.empty()) {
    throw ValidationError("need at least 1 participant");
  }
  if (samples < 1) {
    throw ValidationError("sample count must be at least 1");
  }
  check_all_pairs_comparable(oracle, sorted);

  rng::Engine gen = rng::make_engine(seed);
  std::vector<std::int64_t> counts(sorted.size(), 0);
  for (std::int64_t step = 0; step < samples; ++step) {
    const auto [i, j] = detail::sample_unordered_pair(gen, sorted.size());
    const auto able = oracle.comparers(sorted[i], sorted[j]);
    const ParticipantId& voter =
        able[static_cast<std::size_t>(rng::uniform_below(gen, able.size()))];
    const IdeaId winner = oracle.winner(voter, sorted[i], sorted[j]);
    ++counts[winner_index(winner, sorted, i, j)];
  }

  SampledRanking result;
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    result.counts.scores[sorted[idx]] = counts[idx];
  }
  result.ranking = borda_ranking(result.counts);
  return result;
}

std::int64_t condorcet_pair_samples(std::int64_t m,
                                    const SampleBudget& budget) {
  budget.validate();
  if (m < 2) throw ValidationError("need at least 2 ideas");
  const double raw =
      budget.constant *
      std::log(static_cast<double>(m) * static_cast<double>(m) /
               budget.delta) /
      (budget.eps * budget.eps);
  if (!(raw < 9.0e18)) {
    throw ValidationError("per-pair sample budget overflows a 64-bit count");
  }
  return static_cast<std::int64_t>(std::ceil(raw));
}

std::optional<IdeaId> epsilon_condorcet_search(
    const ComparisonOracle& oracle, const std::vector<IdeaId>& ideas,
    const std::vector<ParticipantId>& participants, const SampleBudget& budget,
    std::uint64_t seed) {
  const std::vector<IdeaId> sorted = checked_idea_set(ideas);
  if (participants.empty()) {
    throw ValidationError("need at least 1 participant");
  }
  // eps == 0 selects the exact census mode, so validate the relaxed range
  // here instead of SampleBudget::validate().
  if (!(budget.eps >= 0.0 && budget.eps < 1.0)) {
    throw ValidationError("eps must be in [0, 1) for the Condorcet search");
  }
  if (!(budget.delta > 0.0 && budget.delta < 1.0)) {
    throw ValidationError("delta must be strictly inside (0, 1)");
  }
  if (!(budget.constant > 0.0)) {
    throw ValidationError("constant must be positive");
  }
  check_all_pairs_comparable(oracle, sorted);

  const std::size_t m = sorted.size();
  const bool census = budget.eps == 0.0;
  const std::int64_t per_pair =
      census ? 0 : condorcet_pair_samples(static_cast<std::int64_t>(m), budget);

  // Estimated probability that row idea beats column idea, among the voters
  // able to compare the pair.
  std::vector<std::vector<double>> win_fraction(m, std::vector<double>(m, 0.0));
  rng::Engine gen = rng::make_engine(seed);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto able = oracle.comparers(sorted[i], sorted[j]);
      std::int64_t wins_i = 0;
      std::int64_t queried = 0;
      if (census) {
        for (const ParticipantId& voter : able) {
          if (oracle.winner(voter, sorted[i], sorted[j]) == sorted[i]) {
            ++wins_i;
          }
        }
        queried = static_cast<std::int64_t>(able.size());
      } else {
        for (std::int64_t s = 0; s < per_pair; ++s) {
          const ParticipantId& voter = able[static_cast<std::size_t>(
              rng::uniform_below(gen, able.size()))];
          if (oracle.winner(voter, sorted[i], sorted[j]) == sorted[i]) {
            ++wins_i;
          }
        }
        queried = per_pair;
      }
      const double p = static_cast<double>(wins_i) /
                       static_cast<double>(queried);
      win_fraction[i][j] = p;
      win_fraction[j][i] = 1.0 - p;
    }
  }

  // eps-Condorcet predicate on estimated fractions: a rival counts when the
  // idea's estimated vote share against it reaches (1 - eps)/2, and the idea
  // qualifies when enough rivals count. Margin for tie-breaking: more
  // counting rivals first, then higher total estimated share.
  const double share_threshold = (1.0 - budget.eps) / 2.0;
  const double rivals_needed =
      (1.0 - budget.eps) * (static_cast<double>(m) - 1.0);
  std::optional<IdeaId> best;
  std::int64_t best_rivals = -1;
  double best_share = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t rivals = 0;
    double share_sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      share_sum += win_fraction[i][j];
      if (win_fraction[i][j] >= share_threshold - kThresholdSlack) ++rivals;
    }
    if (static_cast<double>(rivals) < rivals_needed - kThresholdSlack) {
      continue;
    }
    if (rivals > best_rivals ||
        (rivals == best_rivals && share_sum > best_share)) {
      best = sorted[i];
      best_rivals = rivals;
      best_share = share_sum;
    }
  }
  return best;
}

}  // namespace agorank

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "agorank/core.hpp"
#include "agorank/rng.hpp"
#include "agorank/social_choice.hpp"

namespace agorank {

/// Answers "does participant v prefer x or y" and knows which participants
/// are able to compare a given pair (relevant for partial rankings).
/// Implementations must be deterministic and antisymmetric, and safe for
/// concurrent read-only use.
class ComparisonOracle {
 public:
  virtual ~ComparisonOracle() = default;

  /// The winner of x vs y in participant v's preference. Throws
  /// ValidationError when x == y or v cannot compare the pair.
  virtual IdeaId winner(const ParticipantId& v, const IdeaId& x,
                        const IdeaId& y) const = 0;

  /// Participants able to compare {x, y}, sorted ascending.
  virtual std::span<const ParticipantId> comparers(const IdeaId& x,
                                                   const IdeaId& y) const = 0;
};

/// Approximation budget: target error eps, failure probability delta, and
/// the constant hidden by the asymptotic sample bound.
struct SampleBudget {
  double eps = 0.1;
  double delta = 0.1;
  double constant = 1.0;

  /// Enforces eps, delta strictly inside (0, 1) and constant > 0.
  void validate() const;
};

/// Sample count ceil(constant * (m / eps^2) * ln(m / delta)) that makes the
/// sampled ranking an eps-Borda ranking with probability at least 1 - delta
/// (for a large enough constant).
std::int64_t suggested_samples(std::int64_t m, const SampleBudget& budget);

struct SampledRanking {
  ScoreVector counts;  // per-idea sample wins; totals exactly N
  Ranking ranking;     // by descending count, ties ascending id
};

/// The uniform pair-sampling estimator of the Borda order. Each of the N
/// iterations draws an unordered pair of distinct ideas uniformly, then a
/// participant uniformly among those able to compare it, and credits the
/// winner. Fully deterministic given the seed.
///
/// Rejects inputs where some pair is comparable by no participant, naming
/// the offending pair.
SampledRanking algorithm1(const ComparisonOracle& oracle,
                          const std::vector<IdeaId>& ideas,
                          const std::vector<ParticipantId>& participants,
                          std::int64_t samples, std::uint64_t seed);

/// Search for an eps-Condorcet winner by estimating every pairwise win
/// fraction from t = ceil(constant * ln(m^2 / delta) / eps^2) sampled voters
/// per pair, then returning the qualifying idea with the largest margin
/// (most rivals passing the vote threshold, then highest mean estimated win
/// fraction, then ascending id), or nothing if no idea qualifies.
///
/// This construction is ours: estimate-everything-then-test, with no claim
/// of query-optimality. budget.eps == 0 is accepted as a degenerate exact
/// mode that censuses every comparable voter once per pair (the limit of
/// sampling forever) and applies the exact predicate.
std::optional<IdeaId> epsilon_condorcet_search(
    const ComparisonOracle& oracle, const std::vector<IdeaId>& ideas,
    const std::vector<ParticipantId>& participants, const SampleBudget& budget,
    std::uint64_t seed);

/// Per-pair voter budget used by epsilon_condorcet_search.
std::int64_t condorcet_pair_samples(std::int64_t m, const SampleBudget& budget);

namespace detail {

/// Decode a uniform draw into an unordered index pair (i, j), i < j, over m
/// items. Exposed so the uniformity of pair sampling is testable directly.
std::pair<std::size_t, std::size_t> sample_unordered_pair(rng::Engine& gen,
                                                          std::size_t m);

}  // namespace detail

}  // namespace agorank

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "agorank/core.hpp"
#include "agorank/sampler.hpp"

namespace agorank {

/// Dispersion phi in (0, 1] and the reference ranking mass concentrates
/// around. phi = 1 is the uniform distribution over rankings; phi -> 0
/// pins every voter to the reference. An empty reference means the
/// generated idea names in ascending order.
struct MallowsParams {
  double phi = 0.5;
  Ranking reference;
};

/// Profile of n independent uniformly random strict rankings over m ideas.
/// Idea ids are zero-padded ("i00", "i01", ...) so ascending id order equals
/// generation order; participants likewise ("p000", ...).
PreferenceProfile gen_impartial_culture(std::int64_t m, std::int64_t n,
                                        std::uint64_t seed);

/// Profile of n voters drawn from the Mallows distribution
/// P(ranking) proportional to phi^(Kendall tau distance to the reference),
/// sampled by sequential insertion: the reference's i-th idea lands j
/// positions above the bottom of the partial ranking with probability
/// proportional to phi^j.
PreferenceProfile gen_mallows(std::int64_t m, std::int64_t n,
                              const MallowsParams& params, std::uint64_t seed);

/// Oracle answering from a profile's stored rankings. Holds its own copy of
/// the data; queries on a pair the participant did not rank fail with
/// "incomparable".
class ProfileOracle final : public ComparisonOracle {
 public:
  explicit ProfileOracle(const PreferenceProfile& profile);

  IdeaId winner(const ParticipantId& v, const IdeaId& x,
                const IdeaId& y) const override;
  std::span<const ParticipantId> comparers(const IdeaId& x,
                                           const IdeaId& y) const override;

  const std::vector<IdeaId>& ideas() const { return ideas_; }
  const std::vector<ParticipantId>& participants() const {
    return participants_;
  }

 private:
  std::size_t idea_index(const IdeaId& id) const;

  std::vector<IdeaId> ideas_;                 // sorted ascending
  std::vector<ParticipantId> participants_;   // sorted ascending
  // rank of idea per participant, participants_ x ideas_; -1 = not ranked
  std::vector<std::vector<int>> rank_of_;
  // comparers per unordered pair index (i * m + j for i < j)
  std::map<std::size_t, std::vector<ParticipantId>> comparers_;
};

/// Convenience wrapper matching the profile-in, oracle-out shape.
ProfileOracle oracle_from_profile(const PreferenceProfile& profile);

}  // namespace agorank

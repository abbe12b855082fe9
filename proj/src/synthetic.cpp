#include "agorank/synthetic.hpp"

#include <algorithm>
#include <numeric>

#include "agorank/errors.hpp"

namespace agorank {

namespace {

std::string padded_token(const char* prefix, std::int64_t index,
                         std::int64_t max_index) {
  std::size_t width = 1;
  for (std::int64_t v = max_index; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  std::string token = prefix;
  token.append(width - digits.size(), '0');
  token += digits;
  return token;
}

std::vector<IdeaId> make_idea_names(std::int64_t m) {
  std::vector<IdeaId> ideas;
  ideas.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    ideas.push_back({padded_token("i", k, m - 1)});
  }
  return ideas;
}

void check_population(std::int64_t m, std::int64_t n) {
  if (m < 2) throw ValidationError("need at least 2 ideas, got " +
                                   std::to_string(m));
  if (n < 1) throw ValidationError("need at least 1 participant, got " +
                                   std::to_string(n));
}

}  // namespace

PreferenceProfile gen_impartial_culture(std::int64_t m, std::int64_t n,
                                        std::uint64_t seed) {
  check_population(m, n);
  PreferenceProfile profile;
  profile.ideas = make_idea_names(m);
  rng::Engine gen = rng::make_engine(seed);
  for (std::int64_t v = 0; v < n; ++v) {
    std::vector<IdeaId> order = profile.ideas;
    rng::shuffle(order, gen);
    profile.rankings[{padded_token("p", v, n - 1)}] = Ranking{std::move(order)};
  }
  return profile;
}

PreferenceProfile gen_mallows(std::int64_t m, std::int64_t n,
                              const MallowsParams& params, std::uint64_t seed) {
  check_population(m, n);
  if (!(params.phi > 0.0 && params.phi <= 1.0)) {
    throw ValidationError("phi must be in (0, 1], got " +
                          std::to_string(params.phi));
  }
  std::vector<IdeaId> reference = params.reference.ordered;
  if (reference.empty()) {
    reference = make_idea_names(m);
  } else if (static_cast<std::int64_t>(reference.size()) != m) {
    throw ValidationError("Mallows reference ranking must cover all " +
                          std::to_string(m) + " ideas");
  }
  std::vector<IdeaId> sorted = reference;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("Mallows reference ranking repeats an idea");
  }
  PreferenceProfile profile;
  profile.ideas = std::move(sorted);

  // Sequential-insertion sampling. After i reference ideas are placed, the
  // next one goes j positions above the bottom with weight phi^j; placing
  // it above an earlier (better-in-reference) idea costs one inversion, so
  // the finished ranking has probability proportional to phi^(Kendall tau
  // distance to the reference).
  const double phi = params.phi;
  rng::Engine gen = rng::make_engine(seed);
  for (std::int64_t v = 0; v < n; ++v) {
    std::vector<IdeaId> order;
    order.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < reference.size(); ++i) {
      // Cumulative weights for j = 0..i, built by repeated multiplication
      // to keep the arithmetic identical everywhere.
      double weight = 1.0;
      double total = 0.0;
      std::vector<double> cumulative(i + 1);
      for (std::size_t j = 0; j <= i; ++j) {
        total += weight;
        cumulative[j] = total;
        weight *= phi;
      }
      const double u = rng::uniform_unit(gen) * total;
      std::size_t above_bottom = i;  // fallback guards fp edge at u ~ total
      for (std::size_t j = 0; j <= i; ++j) {
        if (u < cumulative[j]) {
          above_bottom = j;
          break;
        }
      }
      order.insert(order.end() - static_cast<std::ptrdiff_t>(above_bottom),
                   reference[i]);
    }
    profile.rankings[{padded_token("p", v, n - 1)}] = Ranking{std::move(order)};
  }
  return profile;
}

ProfileOracle::ProfileOracle(const PreferenceProfile& profile) {
  require_valid(profile);
  ideas_ = profile.ideas;
  for (const auto& [participant, ranking] : profile.rankings) {
    participants_.push_back(participant);
  }
  const std::size_t m = ideas_.size();
  rank_of_.assign(participants_.size(), std::vector<int>(m, -1));
  std::size_t row = 0;
  for (const auto& [participant, ranking] : profile.rankings) {
    for (std::size_t pos = 0; pos < ranking.ordered.size(); ++pos) {
      rank_of_[row][idea_index(ranking.ordered[pos])] =
          static_cast<int>(pos);
    }
    ++row;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<ParticipantId> able;
      for (std::size_t p = 0; p < participants_.size(); ++p) {
        if (rank_of_[p][i] >= 0 && rank_of_[p][j] >= 0) {
          able.push_back(participants_[p]);
        }
      }
      comparers_[i * m + j] = std::move(able);
    }
  }
}

std::size_t ProfileOracle::idea_index(const IdeaId& id) const {
  const auto it = std::lower_bound(ideas_.begin(), ideas_.end(), id);
  if (it == ideas_.end() || *it != id) {
    throw ValidationError("idea '" + id.value + "' not in this topic");
  }
  return static_cast<std::size_t>(it - ideas_.begin());
}

IdeaId ProfileOracle::winner(const ParticipantId& v, const IdeaId& x,
                             const IdeaId& y) const {
  if (x == y) {
    throw ValidationError("cannot compare idea '" + x.value + "' to itself");
  }
  const auto pit =
      std::lower_bound(participants_.begin(), participants_.end(), v);
  if (pit == participants_.end() || *pit != v) {
    throw ValidationError("unknown participant '" + v.value + "'");
  }
  const std::size_t row =
      static_cast<std::size_t>(pit - participants_.begin());
  const int rank_x = rank_of_[row][idea_index(x)];
  const int rank_y = rank_of_[row][idea_index(y)];
  if (rank_x < 0 || rank_y < 0) {
    throw ValidationError("pair {" + x.value + ", " + y.value +
                          "} is incomparable for participant '" + v.value +
                          "'");
  }
  return rank_x < rank_y ? x : y;
}

std::span<const ParticipantId> ProfileOracle::comparers(
    const IdeaId& x, const IdeaId& y) const {
  if (x == y) {
    throw ValidationError("cannot compare idea '" + x.value + "' to itself");
  }
  std::size_t i = idea_index(x);
  std::size_t j = idea_index(y);
  if (i > j) std::swap(i, j);
  return comparers_.at(i * ideas_.size() + j);
}

ProfileOracle oracle_from_profile(const PreferenceProfile& profile) {
  return ProfileOracle(profile);
}

}  // namespace agorank

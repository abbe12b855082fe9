#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "agorank/core.hpp"

namespace fixtures {

inline agorank::Ranking ranking(std::vector<std::string> ids) {
  agorank::Ranking r;
  for (auto& id : ids) r.ordered.push_back({std::move(id)});
  return r;
}

inline agorank::PreferenceProfile make_profile(
    std::vector<std::string> ideas,
    std::map<std::string, std::vector<std::string>> rankings) {
  agorank::PreferenceProfile profile;
  for (auto& id : ideas) profile.ideas.push_back({std::move(id)});
  for (auto& [participant, order] : rankings) {
    profile.rankings[{participant}] = ranking(order);
  }
  return profile;
}

/// Three voters over {a, b, c} with scores 5/3/1 and Condorcet winner a.
inline agorank::PreferenceProfile p3() {
  return make_profile({"a", "b", "c"}, {{"v1", {"a", "b", "c"}},
                                        {"v2", {"a", "c", "b"}},
                                        {"v3", {"b", "a", "c"}}});
}

/// Majority cycle a > b > c > a; Borda three-way tie, no Condorcet winner.
inline agorank::PreferenceProfile cycle3() {
  return make_profile({"a", "b", "c"}, {{"v1", {"a", "b", "c"}},
                                        {"v2", {"b", "c", "a"}},
                                        {"v3", {"c", "a", "b"}}});
}

/// Borda scores by a different route than the library's: count, over every
/// voter and unordered pair, which side the voter ranks higher.
inline std::map<agorank::IdeaId, std::int64_t> brute_borda(
    const agorank::PreferenceProfile& profile) {
  std::map<agorank::IdeaId, std::int64_t> scores;
  for (const auto& idea : profile.ideas) scores[idea] = 0;
  for (const auto& [participant, r] : profile.rankings) {
    for (std::size_t i = 0; i < r.ordered.size(); ++i) {
      for (std::size_t j = i + 1; j < r.ordered.size(); ++j) {
        scores[r.ordered[i]] += 1;
      }
    }
  }
  return scores;
}

/// All 6^3 = 216 complete profiles of three voters over {a, b, c}.
inline std::vector<agorank::PreferenceProfile> all_3x3_profiles() {
  const std::vector<std::vector<std::string>> orders = {
      {"a", "b", "c"}, {"a", "c", "b"}, {"b", "a", "c"},
      {"b", "c", "a"}, {"c", "a", "b"}, {"c", "b", "a"}};
  std::vector<agorank::PreferenceProfile> profiles;
  for (const auto& o1 : orders) {
    for (const auto& o2 : orders) {
      for (const auto& o3 : orders) {
        profiles.push_back(make_profile(
            {"a", "b", "c"}, {{"v1", o1}, {"v2", o2}, {"v3", o3}}));
      }
    }
  }
  return profiles;
}

}  // namespace fixtures

#include "agorank/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "agorank/errors.hpp"

namespace agorank {

bool PreferenceProfile::complete() const {
  for (const auto& [participant, ranking] : rankings) {
    if (ranking.size() != ideas.size()) return false;
  }
  return true;
}

bool PreferenceProfile::contains_idea(const IdeaId& id) const {
  return std::binary_search(ideas.begin(), ideas.end(), id);
}

std::vector<IdeaId> ComparisonLog::idea_set() const {
  std::set<IdeaId> seen;
  for (const auto& record : records) {
    seen.insert(record.winner);
    seen.insert(record.loser);
  }
  return {seen.begin(), seen.end()};
}

std::vector<ComparisonRecord> expand_ranking_to_comparisons(
    const Ranking& ranking, const ParticipantId& participant) {
  const std::size_t k = ranking.ordered.size();
  if (k < 2) {
    throw ValidationError(
        "cannot expand a ranking of fewer than 2 ideas into comparisons");
  }
  std::vector<ComparisonRecord> records;
  records.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      records.push_back({participant, ranking.ordered[i], ranking.ordered[j],
                         std::nullopt});
    }
  }
  return records;
}

ValidationReport validate_profile(const PreferenceProfile& profile) {
  ValidationReport report;
  if (profile.ideas.size() < 2) {
    report.violations.push_back(
        {ViolationKind::TooFewIdeas, std::nullopt,
         "profile has " + std::to_string(profile.ideas.size()) +
             " ideas, need at least 2"});
  }
  if (profile.rankings.empty()) {
    report.violations.push_back(
        {ViolationKind::NoParticipants, std::nullopt, "profile has no rankings"});
  }
  for (const auto& [participant, ranking] : profile.rankings) {
    if (ranking.ordered.empty()) {
      report.violations.push_back(
          {ViolationKind::EmptyRanking, participant,
           "participant '" + participant.value + "' has an empty ranking"});
      continue;
    }
    std::set<IdeaId> seen;
    for (const IdeaId& idea : ranking.ordered) {
      if (!seen.insert(idea).second) {
        report.violations.push_back(
            {ViolationKind::DuplicateIdea, participant,
             "duplicate idea '" + idea.value + "' in ranking of participant '" +
                 participant.value + "'"});
      }
      if (!profile.contains_idea(idea)) {
        report.violations.push_back(
            {ViolationKind::UnknownIdea, participant,
             "unknown idea '" + idea.value + "' in ranking of participant '" +
                 participant.value + "'"});
      }
    }
  }
  return report;
}

void require_valid(const PreferenceProfile& profile) {
  const ValidationReport report = validate_profile(profile);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid profile:";
  for (const auto& violation : report.violations) {
    msg << "\n  - " << violation.detail;
  }
  throw ValidationError(msg.str());
}

}  // namespace agorank

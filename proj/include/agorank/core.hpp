#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agorank {

/// Opaque, non-empty identifier of an idea within one topic.
struct IdeaId {
  std::string value;
  auto operator<=>(const IdeaId&) const = default;
};

/// Opaque, non-empty identifier of a participant.
struct ParticipantId {
  std::string value;
  auto operator<=>(const ParticipantId&) const = default;
};

/// A strict ranking, best idea first. May cover only a subset of a topic's
/// ideas (a partial ranking). Position is 1-based when read as a rank.
struct Ranking {
  std::vector<IdeaId> ordered;

  bool operator==(const Ranking&) const = default;
  std::size_t size() const { return ordered.size(); }
};

/// The population input: a topic's idea set plus one strict ranking per
/// participant. Treat as immutable once built.
struct PreferenceProfile {
  std::vector<IdeaId> ideas;  // kept sorted ascending, no duplicates
  std::map<ParticipantId, Ranking> rankings;

  std::size_t idea_count() const { return ideas.size(); }
  std::size_t voter_count() const { return rankings.size(); }

  /// True when every participant ranked all ideas.
  bool complete() const;
  bool contains_idea(const IdeaId& id) const;
};

/// One recorded pairwise outcome. elapsed_ms is carried when the source data
/// timed the interaction; it is absent for comparisons implied by rankings.
struct ComparisonRecord {
  ParticipantId participant;
  IdeaId winner;
  IdeaId loser;
  std::optional<std::int64_t> elapsed_ms;

  bool operator==(const ComparisonRecord&) const = default;
};

/// An ordered sequence of pairwise outcomes for one topic.
struct ComparisonLog {
  std::string topic;
  std::vector<ComparisonRecord> records;

  std::size_t size() const { return records.size(); }
  /// All idea ids appearing as winner or loser, sorted ascending.
  std::vector<IdeaId> idea_set() const;
};

/// Why a profile failed validation.
enum class ViolationKind {
  DuplicateIdea,   // the same idea twice within one ranking
  UnknownIdea,     // ranking mentions an idea outside the profile's idea set
  EmptyRanking,    // a participant with an empty ranking
  TooFewIdeas,     // fewer than 2 ideas in the topic
  NoParticipants,  // no rankings at all
};

struct ProfileViolation {
  ViolationKind kind;
  std::optional<ParticipantId> participant;
  std::string detail;
};

struct ValidationReport {
  std::vector<ProfileViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Expand a strict ranking of k ideas into its k(k-1)/2 implied pairwise
/// outcomes. Emission order is pair-lexicographic over positions: (1,2),
/// (1,3), ..., (1,k), (2,3), ... The higher-ranked idea always wins.
/// Rejects rankings shorter than 2 items.
std::vector<ComparisonRecord> expand_ranking_to_comparisons(
    const Ranking& ranking, const ParticipantId& participant);

/// Report-style validation; never throws. A profile with an empty report
/// satisfies every invariant of PreferenceProfile.
ValidationReport validate_profile(const PreferenceProfile& profile);

/// Throwing variant used by operations that require a well-formed profile.
void require_valid(const PreferenceProfile& profile);

}  // namespace agorank

#include "agorank/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "agorank/errors.hpp"

namespace agorank::io {

namespace {

using nlohmann::json;

// ---- CSV primitives -------------------------------------------------------

// Split one physical line into fields. Fields may be double-quoted, with
// embedded quotes doubled; embedded newlines are not supported.
std::vector<std::string> split_csv_row(const std::string& line,
                                       const std::string& name,
                                       long line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        continue;
      }
      current.push_back(c);
      ++i;
      continue;
    }
    if (c == '"' && current.empty()) {
      quoted = true;
      ++i;
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      ++i;
      continue;
    }
    current.push_back(c);
    ++i;
  }
  if (quoted) {
    throw ParseError(name, line_number, static_cast<long>(line.size()),
                     "unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

// Read physical lines, tolerating CRLF and a missing final newline; strips a
// leading UTF-8 BOM from the first line.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty() && line.size() >= 3 && line[0] == '\xEF' &&
        line[1] == '\xBB' && line[2] == '\xBF') {
      line.erase(0, 3);
    }
    lines.push_back(line);
  }
  // Trailing blank lines are not rows.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

void expect_header(const std::vector<std::string>& lines,
                   const std::string& expected, const std::string& name) {
  if (lines.empty()) {
    throw ParseError(name, 1, 1, "empty file, expected header '" + expected +
                                     "'");
  }
  if (lines[0] != expected) {
    throw ParseError(name, 1, 1, "bad header: expected '" + expected +
                                     "', got '" + lines[0] + "'");
  }
}

void expect_field_count(const std::vector<std::string>& fields,
                        std::size_t expected, const std::string& name,
                        long line_number) {
  if (fields.size() != expected) {
    throw ParseError(name, line_number, 1,
                     "expected " + std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
  }
}

std::string non_empty(const std::string& field, const char* what,
                      const std::string& name, long line_number, long column) {
  if (field.empty()) {
    throw ParseError(name, line_number, column,
                     std::string(what) + " must not be empty");
  }
  return field;
}

std::int64_t parse_int(const std::string& field, const char* what,
                       const std::string& name, long line_number,
                       long column) {
  std::int64_t value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw ParseError(name, line_number, column,
                     std::string(what) + " is not an integer: '" + field +
                         "'");
  }
  return value;
}

double parse_real(const std::string& field, const char* what,
                  const std::string& name, long line_number, long column) {
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    throw ParseError(name, line_number, column,
                     std::string(what) + " is not a number: '" + field + "'");
  }
  return value;
}

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

void write_csv_field(std::ostream& out, const std::string& field) {
  if (!needs_quoting(field)) {
    out << field;
    return;
  }
  out << '"';
  for (const char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

// ---- JSON helpers ---------------------------------------------------------

std::pair<long, long> line_of_byte(const std::string& text, std::size_t byte) {
  long line = 1;
  long column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Locate a duplicate object key for error reporting: the second occurrence
// of `"key"` followed by a colon. Best effort; 0 when not found.
long line_of_second_key(const std::string& text, const std::string& key) {
  const std::string needle = "\"" + key + "\"";
  int seen = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    std::size_t after = pos + needle.size();
    while (after < text.size() &&
           (text[after] == ' ' || text[after] == '\t' || text[after] == '\n' ||
            text[after] == '\r')) {
      ++after;
    }
    if (after < text.size() && text[after] == ':') {
      ++seen;
      if (seen == 2) return line_of_byte(text, pos + 1).first;
    }
    pos += needle.size();
  }
  return 0;
}

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

// ---- parsers --------------------------------------------------------------

ComparisonLog parse_comparisons_csv(std::istream& in,
                                    const std::string& name) {
  const auto lines = read_lines(in);
  expect_header(lines, "topic_id,participant_id,winner,loser,elapsed_ms",
                name);
  ComparisonLog log;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const long line_number = static_cast<long>(row + 1);
    if (lines[row].empty()) {
      throw ParseError(name, line_number, 1, "blank row");
    }
    const auto fields = split_csv_row(lines[row], name, line_number);
    expect_field_count(fields, 5, name, line_number);
    const std::string topic =
        non_empty(fields[0], "topic_id", name, line_number, 1);
    if (log.records.empty()) {
      log.topic = topic;
    } else if (topic != log.topic) {
      throw ParseError(name, line_number, 1,
                       "mixed topics in one log: '" + topic + "' after '" +
                           log.topic + "'");
    }
    ComparisonRecord record;
    record.participant = {
        non_empty(fields[1], "participant_id", name, line_number, 2)};
    record.winner = {non_empty(fields[2], "winner", name, line_number, 3)};
    record.loser = {non_empty(fields[3], "loser", name, line_number, 4)};
    if (record.winner == record.loser) {
      throw ParseError(name, line_number, 4,
                       "winner and loser are both '" + record.winner.value +
                           "'");
    }
    if (!fields[4].empty()) {
      const std::int64_t elapsed =
          parse_int(fields[4], "elapsed_ms", name, line_number, 5);
      if (elapsed < 0) {
        throw ParseError(name, line_number, 5, "elapsed_ms must be >= 0");
      }
      record.elapsed_ms = elapsed;
    }
    log.records.push_back(std::move(record));
  }
  if (log.records.empty()) {
    throw ParseError(name, static_cast<long>(lines.size()), 1,
                     "comparison log has no records");
  }
  return log;
}

PreferenceProfile parse_profile_json(std::istream& in,
                                     const std::string& name) {
  const std::string text = slurp(in);

  // The default parser silently keeps the last of two identical keys, so
  // duplicates are tracked during the parse.
  std::vector<std::set<std::string>> key_stack;
  std::string duplicate_key;
  const json::parser_callback_t watch_keys =
      [&key_stack, &duplicate_key](int, json::parse_event_t event,
                                   json& parsed) {
        if (event == json::parse_event_t::object_start) {
          key_stack.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
          key_stack.pop_back();
        } else if (event == json::parse_event_t::key) {
          const auto key = parsed.get<std::string>();
          if (!key_stack.back().insert(key).second && duplicate_key.empty()) {
            duplicate_key = key;
          }
        }
        return true;
      };

  json doc;
  try {
    doc = json::parse(text, watch_keys);
  } catch (const json::parse_error& error) {
    const auto [line, column] = line_of_byte(text, error.byte);
    throw ParseError(name, line, column, error.what());
  }
  if (!duplicate_key.empty()) {
    throw ParseError(name, line_of_second_key(text, duplicate_key), 1,
                     "duplicate key '" + duplicate_key +
                         "' (one ranking per participant)");
  }

  if (!doc.is_object()) {
    throw ParseError(name, 1, 1, "profile must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "ideas" && key != "rankings") {
      throw ParseError(name, 1, 1, "unknown profile key '" + key + "'");
    }
  }
  if (!doc.contains("ideas") || !doc["ideas"].is_array()) {
    throw ParseError(name, 1, 1, "profile needs an 'ideas' array");
  }
  if (!doc.contains("rankings") || !doc["rankings"].is_object()) {
    throw ParseError(name, 1, 1, "profile needs a 'rankings' object");
  }

  PreferenceProfile profile;
  for (const auto& entry : doc["ideas"]) {
    if (!entry.is_string() || entry.get<std::string>().empty()) {
      throw ParseError(name, 1, 1, "idea ids must be non-empty strings");
    }
    profile.ideas.push_back({entry.get<std::string>()});
  }
  std::sort(profile.ideas.begin(), profile.ideas.end());
  if (std::adjacent_find(profile.ideas.begin(), profile.ideas.end()) !=
      profile.ideas.end()) {
    throw ParseError(name, 1, 1, "duplicate id in 'ideas'");
  }
  for (const auto& [participant, order] : doc["rankings"].items()) {
    if (participant.empty()) {
      throw ParseError(name, 1, 1, "participant ids must be non-empty");
    }
    if (!order.is_array()) {
      throw ParseError(name, 1, 1, "ranking of '" + participant +
                                       "' must be an array of idea ids");
    }
    Ranking ranking;
    for (const auto& entry : order) {
      if (!entry.is_string() || entry.get<std::string>().empty()) {
        throw ParseError(name, 1, 1, "ranking of '" + participant +
                                         "' contains a non-string entry");
      }
      ranking.ordered.push_back({entry.get<std::string>()});
    }
    profile.rankings[{participant}] = std::move(ranking);
  }

  const ValidationReport report = validate_profile(profile);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "invalid profile:";
    for (const auto& violation : report.violations) {
      msg << "\n  - " << violation.detail;
    }
    throw ParseError(name, 0, 0, msg.str());
  }
  return profile;
}

std::vector<RatingEvent> parse_ratings_csv(std::istream& in,
                                           const std::string& name) {
  const auto lines = read_lines(in);
  expect_header(lines, "participant_id,sequence_index,stars", name);
  std::vector<RatingEvent> events;
  std::map<std::string, std::int64_t> last_index;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const long line_number = static_cast<long>(row + 1);
    const auto fields = split_csv_row(lines[row], name, line_number);
    expect_field_count(fields, 3, name, line_number);
    RatingEvent event;
    event.participant = {
        non_empty(fields[0], "participant_id", name, line_number, 1)};
    event.sequence_index =
        parse_int(fields[1], "sequence_index", name, line_number, 2);
    if (event.sequence_index < 0) {
      throw ParseError(name, line_number, 2, "sequence_index must be >= 0");
    }
    const std::int64_t stars =
        parse_int(fields[2], "stars", name, line_number, 3);
    if (stars < 1 || stars > 5) {
      throw ParseError(name, line_number, 3, "stars must be in 1..5, got " +
                                                 fields[2]);
    }
    event.stars = static_cast<int>(stars);
    const auto it = last_index.find(event.participant.value);
    if (it != last_index.end() && event.sequence_index <= it->second) {
      throw ParseError(name, line_number, 2,
                       "sequence_index not strictly increasing for "
                       "participant '" +
                           event.participant.value + "'");
    }
    last_index[event.participant.value] = event.sequence_index;
    events.push_back(std::move(event));
  }
  return events;
}

std::vector<TimingRecord> parse_timings_csv(std::istream& in,
                                            const std::string& name) {
  const auto lines = read_lines(in);
  expect_header(lines, "participant_id,group_size,elapsed_ms", name);
  std::vector<TimingRecord> records;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const long line_number = static_cast<long>(row + 1);
    const auto fields = split_csv_row(lines[row], name, line_number);
    expect_field_count(fields, 3, name, line_number);
    TimingRecord record;
    record.participant = {
        non_empty(fields[0], "participant_id", name, line_number, 1)};
    record.group_size =
        parse_int(fields[1], "group_size", name, line_number, 2);
    if (record.group_size < 2) {
      throw ParseError(name, line_number, 2, "group_size must be >= 2");
    }
    record.elapsed_ms =
        parse_int(fields[2], "elapsed_ms", name, line_number, 3);
    if (record.elapsed_ms <= 0) {
      throw ParseError(name, line_number, 3, "elapsed_ms must be positive");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ThresholdPoint> parse_points_csv(std::istream& in,
                                             const std::string& name) {
  const auto lines = read_lines(in);
  expect_header(lines, "m,target_eps,samples", name);
  std::vector<ThresholdPoint> points;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const long line_number = static_cast<long>(row + 1);
    const auto fields = split_csv_row(lines[row], name, line_number);
    expect_field_count(fields, 3, name, line_number);
    ThresholdPoint point;
    point.m = parse_int(fields[0], "m", name, line_number, 1);
    if (point.m < 2) {
      throw ParseError(name, line_number, 1, "m must be >= 2");
    }
    point.target_eps =
        parse_real(fields[1], "target_eps", name, line_number, 2);
    if (!(point.target_eps > 0.0)) {
      throw ParseError(name, line_number, 2, "target_eps must be positive");
    }
    point.samples = parse_real(fields[2], "samples", name, line_number, 3);
    if (!(point.samples > 0.0)) {
      throw ParseError(name, line_number, 3, "samples must be positive");
    }
    points.push_back(point);
  }
  return points;
}

// ---- writers --------------------------------------------------------------

void write_comparisons_csv(std::ostream& out, const ComparisonLog& log) {
  out << "topic_id,participant_id,winner,loser,elapsed_ms\n";
  for (const auto& record : log.records) {
    write_csv_field(out, log.topic);
    out << ',';
    write_csv_field(out, record.participant.value);
    out << ',';
    write_csv_field(out, record.winner.value);
    out << ',';
    write_csv_field(out, record.loser.value);
    out << ',';
    if (record.elapsed_ms) out << *record.elapsed_ms;
    out << '\n';
  }
}

void write_profile_json(std::ostream& out, const PreferenceProfile& profile) {
  json doc;
  doc["ideas"] = json::array();
  for (const IdeaId& idea : profile.ideas) doc["ideas"].push_back(idea.value);
  doc["rankings"] = json::object();
  for (const auto& [participant, ranking] : profile.rankings) {
    json order = json::array();
    for (const IdeaId& idea : ranking.ordered) order.push_back(idea.value);
    doc["rankings"][participant.value] = std::move(order);
  }
  out << doc.dump(2) << '\n';
}

void write_ratings_csv(std::ostream& out,
                       const std::vector<RatingEvent>& events) {
  out << "participant_id,sequence_index,stars\n";
  for (const auto& event : events) {
    write_csv_field(out, event.participant.value);
    out << ',' << event.sequence_index << ',' << event.stars << '\n';
  }
}

void write_timings_csv(std::ostream& out,
                       const std::vector<TimingRecord>& records) {
  out << "participant_id,group_size,elapsed_ms\n";
  for (const auto& record : records) {
    write_csv_field(out, record.participant.value);
    out << ',' << record.group_size << ',' << record.elapsed_ms << '\n';
  }
}

void write_points_csv(std::ostream& out,
                      const std::vector<ThresholdPoint>& points) {
  out << "m,target_eps,samples\n";
  for (const auto& point : points) {
    out << point.m << ',' << format_double(point.target_eps) << ','
        << format_double(point.samples) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out,
                          const ConvergenceTrajectory& trajectory) {
  out << "samples,eps_mean,eps_std\n";
  for (std::size_t g = 0; g < trajectory.grid.size(); ++g) {
    out << trajectory.grid[g] << ',' << format_double(trajectory.eps_mean[g])
        << ',' << format_double(trajectory.eps_std[g]) << '\n';
  }
}

void write_fit_json(std::ostream& out, const LinearFit& fit,
                    std::uint64_t seed) {
  json doc;
  doc["a"] = fit.a;
  doc["b"] = fit.b;
  doc["r2"] = fit.r2;
  doc["seed"] = seed;
  doc["points"] = json::array();
  for (const auto& point : fit.points) {
    json entry;
    entry["m"] = point.m;
    entry["target_eps"] = point.target_eps;
    entry["samples"] = point.samples;
    doc["points"].push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed while reading '" + path.string() + "'");
  }
  return buffer.str();
}

void write_file(const std::filesystem::path& path,
                const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

}  // namespace agorank::io

#include "tagdyn/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "tagdyn/util.hpp"

namespace tagdyn {

static bool is_tag_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::vector<std::string> extract_hashtags(const std::string& text) {
  std::vector<std::string> tags;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (text[i] != '#') {
      ++i;
      continue;
    }
    size_t start = ++i;
    while (i < n && is_tag_char(text[i])) ++i;
    if (i > start) {
      std::string tag = text.substr(start, i - start);
      std::transform(tag.begin(), tag.end(), tag.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      tags.push_back(std::move(tag));
    }
  }
  return tags;
}

SeriesBuilder::SeriesBuilder(int64_t window_start, int window_days)
    : window_start_(window_start), window_days_(window_days) {
  if (window_days <= 0) throw DataError("window length must be positive");
}

void SeriesBuilder::add(const TweetRecord& tweet) {
  auto tags = extract_hashtags(tweet.text);
  if (tags.empty()) return;
  int64_t day = (tweet.timestamp - window_start_) / kSecondsPerDay;
  if (tweet.timestamp < window_start_) day = -1;  // floor for negatives
  for (auto& tag : tags) {
    HashtagOccurrence occ;
    occ.hashtag = std::move(tag);
    occ.tweet_id = tweet.tweet_id;
    occ.user_id = tweet.user_id;
    occ.day_index = static_cast<int>(day);
    add_occurrence(occ);
  }
}

void SeriesBuilder::add_occurrence(const HashtagOccurrence& occ) {
  if (occ.day_index < 0 || occ.day_index >= window_days_) {
    ++stats_.rejected_out_of_range;
    return;
  }
  auto& acc = accum_[occ.hashtag];
  if (acc.counts.empty()) acc.counts.assign(window_days_, 0);
  acc.counts[occ.day_index] += 1;
  acc.users.emplace(occ.user_id, 1);
  ++stats_.occurrences;
}

SeriesMap SeriesBuilder::finish() {
  SeriesMap out;
  for (auto& [tag, acc] : accum_) {
    ActivitySeries s;
    s.hashtag = tag;
    s.counts = std::move(acc.counts);
    s.distinct_users = static_cast<int64_t>(acc.users.size());
    out.emplace(tag, std::move(s));
  }
  accum_.clear();
  return out;
}

SeriesMap filter_popular(const SeriesMap& series, int64_t min_users) {
  if (min_users < 1) throw DataError("min_users must be positive");
  SeriesMap out;
  for (const auto& [tag, s] : series) {
    if (s.distinct_users >= min_users) out.emplace(tag, s);
  }
  return out;
}

void write_series_csv(const std::string& path, const SeriesMap& series, int window_days) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  out << "hashtag,day,count\n";
  for (const auto& [tag, s] : series) {
    if (static_cast<int>(s.counts.size()) != window_days) {
      throw InternalError("series length mismatch for hashtag " + tag);
    }
    for (int d = 0; d < window_days; ++d) {
      if (s.counts[d] != 0) out << tag << ',' << d << ',' << s.counts[d] << '\n';
    }
  }
  if (!out) throw DataError("error writing file: " + path);
}

SeriesMap read_series_csv(const std::string& path, int window_days) {
  CsvReader reader(path);
  if (reader.header() != "hashtag,day,count") {
    throw DataError("unexpected header in " + path + ": '" + reader.header() + "'");
  }
  SeriesMap out;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 3) {
      throw DataError(path + ": bad field count at line " + std::to_string(reader.line_number()));
    }
    int day;
    int64_t count;
    try {
      day = std::stoi(f[1]);
      count = std::stoll(f[2]);
    } catch (const std::exception&) {
      throw DataError(path + ": bad number at line " + std::to_string(reader.line_number()));
    }
    if (day < 0 || day >= window_days || count < 0) {
      throw DataError(path + ": day/count out of range at line " +
                      std::to_string(reader.line_number()));
    }
    auto& s = out[f[0]];
    if (s.counts.empty()) {
      s.hashtag = f[0];
      s.counts.assign(window_days, 0);
    }
    s.counts[day] += count;
  }
  return out;
}

void write_series_summary(const std::string& path, const SeriesMap& series,
                          int64_t window_start, int window_days,
                          const BuildStats& build_stats, const JsonlStats& input_stats) {
  nlohmann::json j;
  j["window_start"] = format_utc_instant(window_start);
  j["window_days"] = window_days;
  j["tweets_parsed"] = input_stats.parsed;
  j["tweets_malformed"] = input_stats.malformed;
  j["occurrences"] = build_stats.occurrences;
  j["occurrences_out_of_window"] = build_stats.rejected_out_of_range;
  nlohmann::json tags = nlohmann::json::object();
  for (const auto& [tag, s] : series) {
    int64_t total = 0;
    for (auto c : s.counts) total += c;
    tags[tag] = {{"distinct_users", s.distinct_users}, {"total", total}};
  }
  j["hashtags"] = tags;
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace tagdyn

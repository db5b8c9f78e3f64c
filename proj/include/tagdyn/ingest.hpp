// Hashtag extraction and daily activity series construction, with the
// minimum-distinct-users popularity filter.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tagdyn/tweet.hpp"

namespace tagdyn {

struct HashtagOccurrence {
  std::string hashtag;  // lowercased, no leading '#'
  std::string tweet_id;
  std::string user_id;
  int day_index = 0;  // days since observation start, UTC midnight binning
};

struct ActivitySeries {
  std::string hashtag;
  std::vector<int64_t> counts;  // one entry per day of the window
  int64_t distinct_users = 0;
};

using SeriesMap = std::map<std::string, ActivitySeries>;

// Every maximal match of '#' followed by [a-zA-Z0-9_]*, lowercased, without
// the '#', duplicates preserved in order of appearance. A '#' with an empty
// body yields nothing.
std::vector<std::string> extract_hashtags(const std::string& text);

struct BuildStats {
  size_t occurrences = 0;
  size_t rejected_out_of_range = 0;  // day_index outside [0, window_days)
};

class SeriesBuilder {
 public:
  SeriesBuilder(int64_t window_start, int window_days);

  // Extracts hashtags from one tweet and accumulates them. Tweets outside
  // the observation window are rejected and counted.
  void add(const TweetRecord& tweet);
  void add_occurrence(const HashtagOccurrence& occ);

  SeriesMap finish();
  const BuildStats& stats() const { return stats_; }
  int64_t window_start() const { return window_start_; }
  int window_days() const { return window_days_; }

 private:
  int64_t window_start_;
  int window_days_;
  BuildStats stats_;
  struct Accum {
    std::vector<int64_t> counts;
    std::map<std::string, char> users;
  };
  std::map<std::string, Accum> accum_;
};

// Keeps exactly the series with distinct_users >= min_users.
SeriesMap filter_popular(const SeriesMap& series, int64_t min_users);

// series.csv schema: hashtag,day,count (only non-zero days are written;
// window length comes from the summary).
void write_series_csv(const std::string& path, const SeriesMap& series, int window_days);
SeriesMap read_series_csv(const std::string& path, int window_days);

// summary.json: window parameters per run plus per-hashtag totals.
void write_series_summary(const std::string& path, const SeriesMap& series,
                          int64_t window_start, int window_days,
                          const BuildStats& build_stats, const JsonlStats& input_stats);

}  // namespace tagdyn

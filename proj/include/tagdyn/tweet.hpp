// Tweet records and the JSON-Lines exchange format shared by the ingest,
// semantics, diffusion and simulation stages.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tagdyn {

struct TweetRecord {
  std::string tweet_id;
  std::string user_id;
  int64_t timestamp = 0;  // UTC epoch seconds
  std::string text;
  bool is_retweet = false;
  std::optional<std::string> retweet_source_user;
  std::optional<std::string> reply_to;
};

struct JsonlStats {
  size_t parsed = 0;
  size_t malformed = 0;  // skipped lines, counted but never fatal
};

// Calls `sink` for each well-formed line. Accepts `ts` as integer epoch
// seconds or an ISO-8601 string. Lines that fail to parse are counted in
// the returned stats.
JsonlStats read_tweets_jsonl(const std::string& path,
                             const std::function<void(const TweetRecord&)>& sink);

std::vector<TweetRecord> load_tweets_jsonl(const std::string& path,
                                           JsonlStats* stats = nullptr);

// One JSON object per line, keys in fixed order so output is byte-stable.
void write_tweets_jsonl(const std::string& path,
                        const std::vector<TweetRecord>& tweets);

std::string tweet_to_json(const TweetRecord& t);

}  // namespace tagdyn

#include "tagdyn/tweet.hpp"

#include <fstream>

#include <json.hpp>

#include "tagdyn/util.hpp"

namespace tagdyn {

using nlohmann::json;

static bool parse_tweet_line(const std::string& line, TweetRecord& t) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  if (!j.contains("id") || !j.contains("user") || !j.contains("ts") ||
      !j.contains("text")) {
    return false;
  }
  try {
    t.tweet_id = j.at("id").get<std::string>();
    t.user_id = j.at("user").get<std::string>();
    t.text = j.at("text").get<std::string>();
    const auto& ts = j.at("ts");
    if (ts.is_number_integer()) {
      t.timestamp = ts.get<int64_t>();
    } else if (ts.is_string()) {
      t.timestamp = parse_utc_instant(ts.get<std::string>());
    } else {
      return false;
    }
    if (j.contains("rt_user") && j.at("rt_user").is_string()) {
      t.retweet_source_user = j.at("rt_user").get<std::string>();
      t.is_retweet = true;
    } else {
      t.retweet_source_user.reset();
      t.is_retweet = false;
    }
    if (j.contains("reply_to") && j.at("reply_to").is_string()) {
      t.reply_to = j.at("reply_to").get<std::string>();
    } else {
      t.reply_to.reset();
    }
  } catch (const std::exception&) {
    return false;
  }
  return t.tweet_id.size() > 0 && t.user_id.size() > 0;
}

JsonlStats read_tweets_jsonl(const std::string& path,
                             const std::function<void(const TweetRecord&)>& sink) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open tweet file: " + path);
  JsonlStats stats;
  std::string line;
  TweetRecord t;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (parse_tweet_line(line, t)) {
      ++stats.parsed;
      sink(t);
    } else {
      ++stats.malformed;
    }
  }
  return stats;
}

std::vector<TweetRecord> load_tweets_jsonl(const std::string& path, JsonlStats* stats) {
  std::vector<TweetRecord> out;
  JsonlStats s = read_tweets_jsonl(path, [&](const TweetRecord& t) { out.push_back(t); });
  if (stats) *stats = s;
  return out;
}

std::string tweet_to_json(const TweetRecord& t) {
  json j;
  j["id"] = t.tweet_id;
  j["user"] = t.user_id;
  j["ts"] = t.timestamp;
  j["text"] = t.text;
  if (t.retweet_source_user) j["rt_user"] = *t.retweet_source_user;
  if (t.reply_to) j["reply_to"] = *t.reply_to;
  return j.dump();
}

void write_tweets_jsonl(const std::string& path, const std::vector<TweetRecord>& tweets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file for writing: " + path);
  for (const auto& t : tweets) out << tweet_to_json(t) << '\n';
  if (!out) throw DataError("error writing file: " + path);
}

}  // namespace tagdyn

#include <doctest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tagdyn/ingest.hpp"
#include "tagdyn/tweet.hpp"
#include "tagdyn/util.hpp"

using namespace tagdyn;

namespace {

TweetRecord tweet(const std::string& id, const std::string& user, int64_t ts,
                  const std::string& text) {
  TweetRecord t;
  t.tweet_id = id;
  t.user_id = user;
  t.timestamp = ts;
  t.text = text;
  return t;
}

}  // namespace

TEST_CASE("hashtag extraction") {
  CHECK(extract_hashtags("").empty());
  CHECK(extract_hashtags("no tags here").empty());
  CHECK(extract_hashtags("Watching #Oscars with #oscars!") ==
        std::vector<std::string>{"oscars", "oscars"});
  CHECK(extract_hashtags("price is $#1 #a_b9") == std::vector<std::string>{"1", "a_b9"});
  CHECK(extract_hashtags("dangling # alone and #, punctuated").empty());
  CHECK(extract_hashtags("#a#b#c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(extract_hashtags("##double") == std::vector<std::string>{"double"});
  CHECK(extract_hashtags("ends with #tag") == std::vector<std::string>{"tag"});
  // Non-ASCII bytes terminate a tag rather than extending it.
  CHECK(extract_hashtags("#caf\xc3\xa9 time") == std::vector<std::string>{"caf"});

  SUBCASE("every extracted tag matches the pattern") {
    std::mt19937_64 gen(44);
    std::uniform_int_distribution<int> len(0, 60);
    std::uniform_int_distribution<int> ch(32, 126);
    for (int trial = 0; trial < 500; ++trial) {
      std::string text;
      int n = len(gen);
      for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(ch(gen)));
      for (const auto& tag : extract_hashtags(text)) {
        CHECK_FALSE(tag.empty());
        for (char c : tag) {
          bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
          CHECK(ok);
        }
      }
      // Deterministic.
      CHECK(extract_hashtags(text) == extract_hashtags(text));
    }
  }
}

TEST_CASE("daily series construction") {
  SUBCASE("no input, no series") {
    SeriesBuilder b(0, 10);
    CHECK(b.finish().empty());
  }

  SUBCASE("counts and distinct users per tag") {
    SeriesBuilder b(0, 10);
    b.add(tweet("1", "alice", 100, "#x morning"));
    b.add(tweet("2", "alice", 200, "#x again"));
    b.add(tweet("3", "bob", 86000, "#x evening"));
    b.add(tweet("4", "alice", 2 * kSecondsPerDay + 5, "#x later"));
    auto m = b.finish();
    REQUIRE(m.size() == 1);
    const auto& s = m.at("x");
    CHECK(s.counts[0] == 3);
    CHECK(s.counts[1] == 0);
    CHECK(s.counts[2] == 1);
    CHECK(s.distinct_users == 2);
    CHECK(b.stats().occurrences == 4);
  }

  SUBCASE("interleaved hashtags stay independent") {
    SeriesBuilder b(0, 5);
    b.add(tweet("1", "u1", 0, "#a #b"));
    b.add(tweet("2", "u2", kSecondsPerDay, "#b"));
    b.add(tweet("3", "u3", kSecondsPerDay, "#a #a"));
    auto m = b.finish();
    REQUIRE(m.size() == 2);
    int64_t ta = std::accumulate(m.at("a").counts.begin(), m.at("a").counts.end(), int64_t{0});
    int64_t tb = std::accumulate(m.at("b").counts.begin(), m.at("b").counts.end(), int64_t{0});
    CHECK(ta == 3);  // duplicate tags in one tweet count twice
    CHECK(tb == 2);
    CHECK(m.at("a").distinct_users == 2);
    CHECK(m.at("b").distinct_users == 2);
  }

  SUBCASE("out-of-window tweets are rejected and counted") {
    SeriesBuilder b(1000 * kSecondsPerDay, 3);
    b.add(tweet("1", "u", 999 * kSecondsPerDay, "#x"));        // before the window
    b.add(tweet("2", "u", 1003 * kSecondsPerDay, "#x"));       // first day past the end
    b.add(tweet("3", "u", 1000 * kSecondsPerDay + 10, "#x"));  // inside
    auto m = b.finish();
    CHECK(m.at("x").counts[0] == 1);
    CHECK(b.stats().occurrences == 1);
    CHECK(b.stats().rejected_out_of_range == 2);
  }

  SUBCASE("a pre-1970 tweet cannot wrap into the window") {
    SeriesBuilder b(0, 10);
    b.add(tweet("1", "u", -10, "#x"));
    CHECK(b.finish().empty());
    CHECK(b.stats().rejected_out_of_range == 1);
  }

  SUBCASE("window length must be positive") {
    CHECK_THROWS_AS(SeriesBuilder(0, 0), DataError);
  }

  SUBCASE("conservation: totals equal occurrence counts") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> day(0, 29);
    std::uniform_int_distribution<int> which(0, 2);
    SeriesBuilder b(0, 30);
    const char* tags[] = {"#alpha", "#beta", "#gamma"};
    size_t sent = 0;
    for (int i = 0; i < 400; ++i) {
      b.add(tweet(std::to_string(i), "u" + std::to_string(i % 17),
                  day(gen) * kSecondsPerDay + 60, tags[which(gen)]));
      ++sent;
    }
    auto m = b.finish();
    int64_t total = 0;
    for (const auto& [tag, s] : m) {
      total += std::accumulate(s.counts.begin(), s.counts.end(), int64_t{0});
    }
    CHECK(static_cast<size_t>(total) == sent);
    CHECK(b.stats().occurrences == sent);
  }
}

TEST_CASE("popularity filter") {
  SeriesBuilder b(0, 2);
  for (int u = 0; u < 500; ++u) {
    b.add(tweet("a" + std::to_string(u), "u" + std::to_string(u), 10, "#popular"));
  }
  for (int u = 0; u < 499; ++u) {
    b.add(tweet("b" + std::to_string(u), "v" + std::to_string(u), 10, "#niche"));
  }
  auto m = b.finish();

  auto kept = filter_popular(m, 500);
  CHECK(kept.size() == 1);
  CHECK(kept.count("popular") == 1);  // exactly 500 distinct users passes
  CHECK(kept.count("niche") == 0);    // 499 does not

  CHECK(filter_popular(m, 1).size() == m.size());

  // Idempotent, and a subset of the input.
  auto twice = filter_popular(kept, 500);
  CHECK(twice.size() == kept.size());
  for (const auto& [tag, s] : kept) CHECK(m.count(tag) == 1);

  CHECK_THROWS_AS(filter_popular(m, 0), DataError);
}

TEST_CASE("series CSV round-trip") {
  SeriesBuilder b(0, 7);
  b.add(tweet("1", "u1", 0, "#x"));
  b.add(tweet("2", "u2", 3 * kSecondsPerDay, "#x #y"));
  auto m = b.finish();
  write_series_csv("build/test_series.csv", m, 7);
  auto back = read_series_csv("build/test_series.csv", 7);
  REQUIRE(back.size() == 2);
  CHECK(back.at("x").counts == m.at("x").counts);
  CHECK(back.at("y").counts == m.at("y").counts);

  CHECK_THROWS_AS(read_series_csv("build/test_series.csv", 2), DataError);
}

TEST_CASE("tweet JSONL parsing") {
  std::string path = "build/test_tweets.jsonl";
  write_text_file(path,
                  "{\"id\":\"1\",\"user\":\"ann\",\"ts\":1000,\"text\":\"#x hi\"}\n"
                  "\n"
                  "{\"id\":\"2\",\"user\":\"bob\",\"ts\":\"2014-01-07T12:30:00Z\","
                  "\"text\":\"RT @ann: #x\",\"rt_user\":\"ann\"}\n"
                  "not json at all\n"
                  "{\"id\":\"3\",\"user\":\"cat\",\"ts\":2000}\n"
                  "{\"id\":\"\",\"user\":\"dan\",\"ts\":3000,\"text\":\"#y\"}\n"
                  "{\"id\":\"4\",\"user\":\"eve\",\"ts\":4000,\"text\":\"#y\","
                  "\"reply_to\":\"1\"}\n");
  JsonlStats stats;
  auto tweets = load_tweets_jsonl(path, &stats);
  CHECK(stats.parsed == 3);
  CHECK(stats.malformed == 3);  // bad JSON, missing text, empty id
  REQUIRE(tweets.size() == 3);
  CHECK(tweets[0].timestamp == 1000);
  CHECK_FALSE(tweets[0].is_retweet);
  CHECK(tweets[1].timestamp == 1389097800);
  CHECK(tweets[1].is_retweet);
  CHECK(tweets[1].retweet_source_user == "ann");
  CHECK(tweets[2].reply_to == "1");

  SUBCASE("writer output parses back identically") {
    write_tweets_jsonl("build/test_tweets_rt.jsonl", tweets);
    auto again = load_tweets_jsonl("build/test_tweets_rt.jsonl");
    REQUIRE(again.size() == tweets.size());
    for (size_t i = 0; i < tweets.size(); ++i) {
      CHECK(again[i].tweet_id == tweets[i].tweet_id);
      CHECK(again[i].timestamp == tweets[i].timestamp);
      CHECK(again[i].text == tweets[i].text);
      CHECK(again[i].is_retweet == tweets[i].is_retweet);
    }
  }

  CHECK_THROWS_AS(load_tweets_jsonl("build/missing.jsonl"), DataError);
}

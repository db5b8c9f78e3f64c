// Directed follower graph in information-flow orientation plus the
// per-hashtag epidemic estimators (retweet fraction, seeder fraction,
// adoption fraction, activity span) and their per-class summaries.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tagdyn/mixture.hpp"
#include "tagdyn/tweet.hpp"

namespace tagdyn {

// Edge u -> v means v follows u, so information flows along edges.
struct FollowerGraph {
  std::vector<std::string> user_names;
  std::unordered_map<std::string, int32_t> user_ids;
  std::vector<std::vector<int32_t>> followers_of;  // out-neighbors
  std::vector<std::vector<int32_t>> followees_of;  // in-neighbors

  size_t edges = 0;
  size_t self_loops_dropped = 0;
  size_t duplicates_dropped = 0;
  size_t malformed_lines = 0;

  int32_t intern(const std::string& name);
  std::optional<int32_t> find(const std::string& name) const;
  size_t node_count() const { return user_names.size(); }

  // Records (follower, followee) as followee -> follower. Self-loops are
  // dropped and counted. Call finish() once after the last edge.
  void add_edge(const std::string& follower, const std::string& followee);
  void finish();  // sorts adjacency, removes duplicates, fixes edge count

  double mean_out_degree() const;
};

// Reads CSV lines "follower,followee". A leading header line is accepted.
// Malformed lines are skipped and counted.
FollowerGraph load_graph(const std::string& path);
FollowerGraph graph_from_edges(
    const std::vector<std::pair<std::string, std::string>>& pairs);
void write_graph_csv(const FollowerGraph& graph, const std::string& path);

struct UserUse {
  int64_t first = 0;
  int64_t last = 0;
  int64_t count = 0;
};

struct AdoptionLog {
  std::string hashtag;
  std::map<std::string, UserUse> users;

  void add_use(const std::string& user, int64_t timestamp);
};

// Adoption logs and retweet tallies for every hashtag in one pass.
struct HashtagTweetStats {
  int64_t tweets = 0;
  int64_t retweets = 0;
};

struct CorpusScan {
  std::map<std::string, AdoptionLog> logs;
  std::map<std::string, HashtagTweetStats> stats;

  void add(const TweetRecord& tweet);  // one tweet, all its hashtags
};

// A tweet counts as a retweet when its metadata says so or its text starts
// with "RT " / "RT@" in any letter case.
bool is_retweet(const TweetRecord& tweet);

CorpusScan scan_corpus(const std::vector<TweetRecord>& tweets);

double retweet_fraction(const HashtagTweetStats& stats);  // error if no tweets

struct SeederResult {
  double gamma = 0.0;
  size_t seeders = 0;
  size_t adopters = 0;
  size_t off_graph_adopters = 0;  // treated as seeders
};

// A user is a seeder when no followee present in the log has a strictly
// earlier first use. Users following nobody are seeders.
SeederResult seeder_fraction(const FollowerGraph& graph,
                             const AdoptionLog& log);

struct AdoptionResult {
  double beta = 0.0;
  size_t contributing_users = 0;   // adopters with >= 1 follower
  size_t zero_degree_users = 0;    // excluded from the mean
};

// Mean over adopters with followers of the fraction of their followers that
// adopt strictly later. Throws DataError when no adopter has followers.
AdoptionResult adoption_fraction(const FollowerGraph& graph,
                                 const AdoptionLog& log);

// Mean per-user hours between first and last use; single posts count as 0.
double activity_span_hours(const AdoptionLog& log);

struct EpidemicEstimates {
  std::string hashtag;
  double retweet_fraction = 0.0;
  double gamma = 0.0;
  double beta = 0.0;          // NaN when undefined (no adopter has followers)
  double tau_hours = 0.0;
  std::string label;          // class label name, or "unlabeled"
  size_t adopters = 0;
  size_t tweets = 0;
};

// Estimates for every hashtag present in the scan; when labels are given,
// hashtags not in the map get label "unlabeled".
std::vector<EpidemicEstimates> estimate_all(
    const FollowerGraph& graph, const CorpusScan& scan,
    const std::map<std::string, ClassLabel>& labels);

struct FiveNumberSummary {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Linear-interpolation quantile of ascending values, p in [0,1].
double quantile(const std::vector<double>& sorted_values, double p);
FiveNumberSummary five_number_summary(std::vector<double> values);

struct ClassSummary {
  std::string label;
  size_t members = 0;
  // quantity name -> summary; quantities with no defined values are absent
  std::map<std::string, FiveNumberSummary> quantities;
};

// Per-class dispersion of the four estimated quantities. Classes with no
// members are omitted and listed in *omitted when given.
std::vector<ClassSummary> class_summaries(
    const std::vector<EpidemicEstimates>& estimates,
    std::vector<std::string>* omitted = nullptr);

void write_estimates_csv(const std::vector<EpidemicEstimates>& estimates,
                         const std::string& path);
void write_class_summaries_json(const std::vector<ClassSummary>& summaries,
                                const std::vector<std::string>& omitted,
                                const std::string& path);

}  // namespace tagdyn

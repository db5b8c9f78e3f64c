#include "tagdyn/diffusion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "tagdyn/ingest.hpp"
#include "tagdyn/util.hpp"

namespace tagdyn {

int32_t FollowerGraph::intern(const std::string& name) {
  auto it = user_ids.find(name);
  if (it != user_ids.end()) return it->second;
  int32_t id = static_cast<int32_t>(user_names.size());
  user_ids.emplace(name, id);
  user_names.push_back(name);
  followers_of.emplace_back();
  followees_of.emplace_back();
  return id;
}

std::optional<int32_t> FollowerGraph::find(const std::string& name) const {
  auto it = user_ids.find(name);
  if (it == user_ids.end()) return std::nullopt;
  return it->second;
}

void FollowerGraph::add_edge(const std::string& follower,
                             const std::string& followee) {
  if (follower == followee) {
    ++self_loops_dropped;
    return;
  }
  int32_t f = intern(follower);
  int32_t e = intern(followee);
  followers_of[static_cast<size_t>(e)].push_back(f);
  followees_of[static_cast<size_t>(f)].push_back(e);
}

void FollowerGraph::finish() {
  size_t before = 0, after = 0;
  for (auto& adj : followers_of) {
    before += adj.size();
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    after += adj.size();
  }
  for (auto& adj : followees_of) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  duplicates_dropped += before - after;
  edges = after;
}

double FollowerGraph::mean_out_degree() const {
  if (user_names.empty()) return 0.0;
  return static_cast<double>(edges) / static_cast<double>(user_names.size());
}

FollowerGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open graph file " + path);
  FollowerGraph g;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      if (to_lower(trim(line)) == "follower,followee") continue;
    }
    if (trim(line).empty()) continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos) {
      ++g.malformed_lines;
      continue;
    }
    std::string follower(trim(line.substr(0, comma)));
    std::string followee(trim(line.substr(comma + 1)));
    if (follower.empty() || followee.empty() ||
        followee.find(',') != std::string::npos) {
      ++g.malformed_lines;
      continue;
    }
    g.add_edge(follower, followee);
  }
  g.finish();
  return g;
}

FollowerGraph graph_from_edges(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  FollowerGraph g;
  for (const auto& [follower, followee] : pairs) g.add_edge(follower, followee);
  g.finish();
  return g;
}

void write_graph_csv(const FollowerGraph& graph, const std::string& path) {
  std::string body = "follower,followee\n";
  for (size_t u = 0; u < graph.followers_of.size(); ++u)
    for (int32_t f : graph.followers_of[u]) {
      body += graph.user_names[static_cast<size_t>(f)];
      body += ',';
      body += graph.user_names[u];
      body += '\n';
    }
  write_text_file(path, body);
}

void AdoptionLog::add_use(const std::string& user, int64_t timestamp) {
  auto [it, inserted] = users.try_emplace(user, UserUse{timestamp, timestamp, 1});
  if (inserted) return;
  UserUse& u = it->second;
  u.first = std::min(u.first, timestamp);
  u.last = std::max(u.last, timestamp);
  ++u.count;
}

bool is_retweet(const TweetRecord& tweet) {
  if (tweet.is_retweet) return true;
  const std::string& t = tweet.text;
  if (t.size() < 3) return false;
  char r = static_cast<char>(std::tolower(static_cast<unsigned char>(t[0])));
  char w = static_cast<char>(std::tolower(static_cast<unsigned char>(t[1])));
  if (r != 'r' || w != 't') return false;
  return t[2] == ' ' || t[2] == '@';
}

void CorpusScan::add(const TweetRecord& tweet) {
  bool rt = is_retweet(tweet);
  std::vector<std::string> tags = extract_hashtags(tweet.text);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  for (const std::string& tag : tags) {
    auto [lit, inserted] = logs.try_emplace(tag);
    if (inserted) lit->second.hashtag = tag;
    lit->second.add_use(tweet.user_id, tweet.timestamp);
    HashtagTweetStats& st = stats[tag];
    ++st.tweets;
    if (rt) ++st.retweets;
  }
}

CorpusScan scan_corpus(const std::vector<TweetRecord>& tweets) {
  CorpusScan scan;
  for (const TweetRecord& tweet : tweets) scan.add(tweet);
  return scan;
}

double retweet_fraction(const HashtagTweetStats& stats) {
  if (stats.tweets == 0)
    throw DataError("retweet fraction undefined without tweets");
  return static_cast<double>(stats.retweets) /
         static_cast<double>(stats.tweets);
}

namespace {

// First-use time per graph node for users present in the log, or the
// sentinel for absent users.
constexpr int64_t kAbsent = std::numeric_limits<int64_t>::min();

std::vector<int64_t> first_use_by_node(const FollowerGraph& graph,
                                       const AdoptionLog& log) {
  std::vector<int64_t> first(graph.node_count(), kAbsent);
  for (const auto& [name, use] : log.users) {
    auto id = graph.find(name);
    if (id) first[static_cast<size_t>(*id)] = use.first;
  }
  return first;
}

}  // namespace

SeederResult seeder_fraction(const FollowerGraph& graph,
                             const AdoptionLog& log) {
  SeederResult r;
  r.adopters = log.users.size();
  if (r.adopters == 0) return r;
  std::vector<int64_t> first = first_use_by_node(graph, log);
  for (const auto& [name, use] : log.users) {
    auto id = graph.find(name);
    if (!id) {
      ++r.off_graph_adopters;
      ++r.seeders;
      continue;
    }
    bool seeded = true;
    for (int32_t v : graph.followees_of[static_cast<size_t>(*id)]) {
      int64_t fv = first[static_cast<size_t>(v)];
      if (fv != kAbsent && fv < use.first) {
        seeded = false;
        break;
      }
    }
    if (seeded) ++r.seeders;
  }
  r.gamma = static_cast<double>(r.seeders) / static_cast<double>(r.adopters);
  return r;
}

AdoptionResult adoption_fraction(const FollowerGraph& graph,
                                 const AdoptionLog& log) {
  AdoptionResult r;
  if (log.users.empty())
    throw DataError("adoption fraction undefined on an empty log");
  std::vector<int64_t> first = first_use_by_node(graph, log);
  double total = 0.0;
  for (const auto& [name, use] : log.users) {
    auto id = graph.find(name);
    if (!id) continue;  // no follower information
    const auto& followers = graph.followers_of[static_cast<size_t>(*id)];
    if (followers.empty()) {
      ++r.zero_degree_users;
      continue;
    }
    size_t later = 0;
    for (int32_t f : followers) {
      int64_t ff = first[static_cast<size_t>(f)];
      if (ff != kAbsent && ff > use.first) ++later;
    }
    total += static_cast<double>(later) / static_cast<double>(followers.size());
    ++r.contributing_users;
  }
  if (r.contributing_users == 0)
    throw DataError("adoption fraction undefined: no adopter has followers");
  r.beta = total / static_cast<double>(r.contributing_users);
  return r;
}

double activity_span_hours(const AdoptionLog& log) {
  if (log.users.empty()) return 0.0;
  double total = 0.0;
  for (const auto& [name, use] : log.users)
    total += static_cast<double>(use.last - use.first) / 3600.0;
  return total / static_cast<double>(log.users.size());
}

std::vector<EpidemicEstimates> estimate_all(
    const FollowerGraph& graph, const CorpusScan& scan,
    const std::map<std::string, ClassLabel>& labels) {
  std::vector<EpidemicEstimates> out;
  for (const auto& [tag, log] : scan.logs) {
    EpidemicEstimates e;
    e.hashtag = tag;
    const HashtagTweetStats& st = scan.stats.at(tag);
    e.tweets = static_cast<size_t>(st.tweets);
    e.adopters = log.users.size();
    e.retweet_fraction = retweet_fraction(st);
    e.gamma = seeder_fraction(graph, log).gamma;
    try {
      e.beta = adoption_fraction(graph, log).beta;
    } catch (const DataError&) {
      e.beta = std::numeric_limits<double>::quiet_NaN();
    }
    e.tau_hours = activity_span_hours(log);
    auto lit = labels.find(tag);
    e.label = lit == labels.end() ? "unlabeled"
                                  : std::string(class_label_name(lit->second));
    out.push_back(std::move(e));
  }
  return out;
}

double quantile(const std::vector<double>& sorted_values, double p) {
  if (sorted_values.empty())
    throw DataError("quantile of an empty sample");
  if (p < 0.0 || p > 1.0) throw DataError("quantile fraction outside [0,1]");
  double h = p * static_cast<double>(sorted_values.size() - 1);
  size_t lo = static_cast<size_t>(h);
  if (lo + 1 >= sorted_values.size()) return sorted_values.back();
  double frac = h - static_cast<double>(lo);
  return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
  if (values.empty())
    throw DataError("five-number summary of an empty sample");
  std::sort(values.begin(), values.end());
  FiveNumberSummary s;
  s.min = values.front();
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  s.max = values.back();
  return s;
}

std::vector<ClassSummary> class_summaries(
    const std::vector<EpidemicEstimates>& estimates,
    std::vector<std::string>* omitted) {
  std::vector<std::string> order = {"Before", "After", "Symmetric", "PeakDay",
                                    "unlabeled"};
  std::vector<ClassSummary> out;
  if (omitted) omitted->clear();
  for (const std::string& label : order) {
    std::map<std::string, std::vector<double>> values;
    size_t members = 0;
    for (const EpidemicEstimates& e : estimates) {
      if (e.label != label) continue;
      ++members;
      values["retweet_fraction"].push_back(e.retweet_fraction);
      values["gamma"].push_back(e.gamma);
      if (std::isfinite(e.beta)) values["beta"].push_back(e.beta);
      values["tau_hours"].push_back(e.tau_hours);
    }
    if (members == 0) {
      if (label != "unlabeled" && omitted) omitted->push_back(label);
      continue;
    }
    ClassSummary cs;
    cs.label = label;
    cs.members = members;
    for (auto& [name, vals] : values)
      if (!vals.empty()) cs.quantities[name] = five_number_summary(vals);
    out.push_back(std::move(cs));
  }
  return out;
}

void write_estimates_csv(const std::vector<EpidemicEstimates>& estimates,
                         const std::string& path) {
  std::string body =
      "hashtag,label,retweet_fraction,gamma,beta,tau_hours,adopters,tweets\n";
  for (const EpidemicEstimates& e : estimates) {
    body += e.hashtag;
    body += ',';
    body += e.label;
    body += ',';
    body += format_double(e.retweet_fraction);
    body += ',';
    body += format_double(e.gamma);
    body += ',';
    body += std::isfinite(e.beta) ? format_double(e.beta) : std::string("nan");
    body += ',';
    body += format_double(e.tau_hours);
    body += ',';
    body += std::to_string(e.adopters);
    body += ',';
    body += std::to_string(e.tweets);
    body += '\n';
  }
  write_text_file(path, body);
}

void write_class_summaries_json(const std::vector<ClassSummary>& summaries,
                                const std::vector<std::string>& omitted,
                                const std::string& path) {
  nlohmann::json root;
  nlohmann::json classes = nlohmann::json::object();
  for (const ClassSummary& cs : summaries) {
    nlohmann::json entry;
    entry["members"] = cs.members;
    nlohmann::json quantities = nlohmann::json::object();
    for (const auto& [name, s] : cs.quantities) {
      quantities[name] = {{"min", s.min},
                          {"q1", s.q1},
                          {"median", s.median},
                          {"q3", s.q3},
                          {"max", s.max}};
    }
    entry["quantities"] = std::move(quantities);
    classes[cs.label] = std::move(entry);
  }
  root["classes"] = std::move(classes);
  root["omitted_classes"] = omitted;
  write_text_file(path, root.dump(2) + "\n");
}

}  // namespace tagdyn

#include "tagdyn/synthcascade.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>

#include <json.hpp>

#include "tagdyn/util.hpp"

namespace tagdyn {

FollowerGraph gen_graph(size_t n_nodes, double mean_out_degree,
                        uint64_t seed) {
  FollowerGraph g;
  if (n_nodes == 0) return g;
  if (mean_out_degree < 0.0 ||
      mean_out_degree >= static_cast<double>(n_nodes))
    throw DataError("mean out-degree must lie in [0, n_nodes)");
  Rng rng = Rng::derive(seed, "gen_graph");
  for (size_t i = 0; i < n_nodes; ++i) g.intern("u" + std::to_string(i));
  for (size_t u = 0; u < n_nodes; ++u) {
    size_t degree = static_cast<size_t>(rng.poisson(mean_out_degree));
    degree = std::min(degree, n_nodes - 1);
    // Rejection sampling of distinct followers; degree << n_nodes in
    // practice, so collisions are rare.
    std::set<size_t> picked;
    while (picked.size() < degree) {
      size_t f = rng.index(n_nodes);
      if (f == u) continue;
      picked.insert(f);
    }
    for (size_t f : picked) {
      g.followers_of[u].push_back(static_cast<int32_t>(f));
      g.followees_of[f].push_back(static_cast<int32_t>(u));
    }
  }
  g.finish();
  return g;
}

void CascadeConfig::validate(size_t n_nodes) const {
  if (window_days < 1) throw DataError("cascade: window_days must be >= 1");
  if (peak_day - kCascadeSpan < 0 ||
      peak_day + kCascadeSpan >= window_days)
    throw DataError("cascade: relative days -7..+7 must fit in the window");
  int64_t total = 0;
  for (int64_t s : seeding) {
    if (s < 0) throw DataError("cascade: negative seeding count");
    total += s;
  }
  if (total <= 0) throw DataError("cascade: seeding total must be positive");
  if (total > static_cast<int64_t>(n_nodes))
    throw DataError("cascade: seeding exceeds node count");
  if (beta_true < 0.0 || beta_true > 1.0)
    throw DataError("cascade: beta_true must lie in [0,1]");
  if (repeat_rate < 0.0) throw DataError("cascade: negative repeat rate");
  if (jitter_hours < 0.0) throw DataError("cascade: negative jitter");
  if (background_daily < 0.0)
    throw DataError("cascade: negative background rate");
  if (retweet_prob < 0.0 || retweet_prob > 1.0)
    throw DataError("cascade: retweet_prob must lie in [0,1]");
  if (words_per_tweet < 1)
    throw DataError("cascade: words_per_tweet must be >= 1");
  if (hashtag.empty()) throw DataError("cascade: empty hashtag");
}

double CascadeTruth::planted_gamma() const {
  if (first_use.empty()) return 0.0;
  return static_cast<double>(seeders.size()) /
         static_cast<double>(first_use.size());
}

namespace {

struct FirstPost {
  int64_t t = 0;
  uint64_t serial = 0;
  int32_t user = -1;
  int32_t exposer = -1;  // -1 for seeders
};

struct LaterFirst {
  bool operator()(const FirstPost& a, const FirstPost& b) const {
    if (a.t != b.t) return a.t > b.t;
    return a.serial > b.serial;
  }
};

}  // namespace

CascadeResult gen_cascade(const FollowerGraph& graph,
                          const CascadeConfig& config, Rng& rng) {
  config.validate(graph.node_count());
  const size_t n = graph.node_count();
  const int64_t window_end =
      config.window_start + static_cast<int64_t>(config.window_days) *
                                kSecondsPerDay;
  const std::vector<std::string>& vocab =
      config.vocab.empty() ? class_vocab(config.archetype) : config.vocab;

  CascadeResult result;
  CascadeTruth& truth = result.truth;
  truth.hashtag = config.hashtag;
  truth.archetype = config.archetype;
  truth.beta_true = config.beta_true;
  truth.peak_day = config.peak_day;

  std::vector<char> adopted(n, 0);
  size_t taken = 0;
  auto pick_free_user = [&]() -> int32_t {
    if (taken >= n) throw DataError("cascade: seeding exceeds node count");
    while (true) {
      size_t u = rng.index(n);
      if (!adopted[u]) {
        adopted[u] = 1;
        ++taken;
        return static_cast<int32_t>(u);
      }
    }
  };

  uint64_t tweet_serial = 0;
  auto make_text = [&](int32_t exposer, bool* is_rt) -> std::string {
    std::string body;
    for (int w = 0; w < config.words_per_tweet; ++w) {
      if (w > 0) body += ' ';
      body += vocab[rng.index(vocab.size())];
    }
    body += " #";
    body += config.hashtag;
    *is_rt = false;
    if (exposer >= 0 && rng.bernoulli(config.retweet_prob)) {
      *is_rt = true;
      body = "RT @" + graph.user_names[static_cast<size_t>(exposer)] + " " +
             body;
    }
    return body;
  };
  auto emit = [&](int32_t user, int64_t t, int32_t exposer) {
    TweetRecord tw;
    tw.tweet_id = "x" + std::to_string(tweet_serial++);
    tw.user_id = graph.user_names[static_cast<size_t>(user)];
    tw.timestamp = t;
    bool rt = false;
    tw.text = make_text(exposer, &rt);
    tw.is_retweet = rt;
    if (rt)
      tw.retweet_source_user =
          graph.user_names[static_cast<size_t>(exposer)];
    result.tweets.push_back(std::move(tw));
  };

  // Background uses of the hashtag across the whole window; posters are
  // withdrawn from the seed/conversion pool but not recorded as adopters.
  for (int day = 0; day < config.window_days; ++day) {
    long posts = rng.poisson(config.background_daily);
    int64_t day_start =
        config.window_start + static_cast<int64_t>(day) * kSecondsPerDay;
    for (long i = 0; i < posts; ++i) {
      int32_t u = pick_free_user();
      int64_t t =
          day_start + static_cast<int64_t>(rng.uniform(0.0, 86400.0));
      emit(u, t, -1);
      ++truth.background_posts;
    }
  }

  const double seed_spread_seconds =
      std::min(config.jitter_hours, 24.0) * 3600.0;
  const double repeat_spread_seconds = config.jitter_hours * 3600.0;

  std::priority_queue<FirstPost, std::vector<FirstPost>, LaterFirst> pending;
  uint64_t event_serial = 0;

  auto handle = [&](const FirstPost& ev) {
    const std::string& name = graph.user_names[static_cast<size_t>(ev.user)];
    emit(ev.user, ev.t, ev.exposer);
    truth.first_use[name] = ev.t;
    if (ev.exposer >= 0)
      truth.exposed_by[name] =
          graph.user_names[static_cast<size_t>(ev.exposer)];
    else
      truth.seeders.push_back(name);
    long repeats = rng.poisson(config.repeat_rate);
    for (long i = 0; i < repeats; ++i) {
      int64_t t =
          ev.t + static_cast<int64_t>(rng.uniform(0.0, repeat_spread_seconds));
      if (t < window_end) emit(ev.user, t, -1);
    }
    // A first post exposes each follower exactly once.
    for (int32_t f : graph.followers_of[static_cast<size_t>(ev.user)]) {
      if (adopted[static_cast<size_t>(f)]) continue;
      if (!rng.bernoulli(config.beta_true)) continue;
      adopted[static_cast<size_t>(f)] = 1;
      ++taken;
      int64_t t =
          ev.t + 1 +
          static_cast<int64_t>(rng.uniform(0.0, 24.0 * 3600.0 - 1.0));
      if (t < window_end)
        pending.push({t, event_serial++, f, ev.user});
    }
  };
  auto drain_until = [&](int64_t boundary) {
    while (!pending.empty() && pending.top().t < boundary) {
      FirstPost ev = pending.top();
      pending.pop();
      handle(ev);
    }
  };

  for (int rel = 0; rel < kCascadeDays; ++rel) {
    int day = config.peak_day - kCascadeSpan + rel;
    int64_t day_start =
        config.window_start + static_cast<int64_t>(day) * kSecondsPerDay;
    drain_until(day_start);
    for (int64_t i = 0; i < config.seeding[static_cast<size_t>(rel)]; ++i) {
      int32_t u = pick_free_user();
      int64_t t = day_start;
      if (seed_spread_seconds > 0.0)
        t += static_cast<int64_t>(rng.uniform(0.0, seed_spread_seconds));
      pending.push({t, event_serial++, u, -1});
    }
  }
  drain_until(window_end);

  std::sort(truth.seeders.begin(), truth.seeders.end());
  std::stable_sort(result.tweets.begin(), result.tweets.end(),
                   [](const TweetRecord& a, const TweetRecord& b) {
                     return a.timestamp < b.timestamp;
                   });
  for (size_t i = 0; i < result.tweets.size(); ++i)
    result.tweets[i].tweet_id = "t" + std::to_string(i);
  return result;
}

const std::array<int, kCascadeDays>& class_shape_weights(
    ClassLabel archetype) {
  // Flat shoulders keep every non-peak day safely under the outlier
  // threshold while still carrying enough mass for the labeling rule.
  static const std::array<int, kCascadeDays> before = {
      6, 6, 6, 6, 6, 6, 6, 30, 0, 0, 0, 0, 0, 0, 0};
  static const std::array<int, kCascadeDays> after = {
      0, 0, 0, 0, 0, 0, 0, 30, 6, 6, 6, 6, 6, 6, 6};
  static const std::array<int, kCascadeDays> symmetric = {
      4, 4, 4, 4, 4, 4, 4, 30, 4, 4, 4, 4, 4, 4, 4};
  static const std::array<int, kCascadeDays> peakday = {
      0, 0, 0, 0, 0, 0, 0, 60, 0, 0, 0, 0, 0, 0, 0};
  switch (archetype) {
    case ClassLabel::kBefore: return before;
    case ClassLabel::kAfter: return after;
    case ClassLabel::kSymmetric: return symmetric;
    case ClassLabel::kPeakDay: return peakday;
  }
  return peakday;
}

std::array<int64_t, kCascadeDays> default_seeding(ClassLabel archetype,
                                                  int64_t unit) {
  const auto& weights = class_shape_weights(archetype);
  std::array<int64_t, kCascadeDays> out{};
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = unit * static_cast<int64_t>(weights[i]);
  return out;
}

const std::vector<std::string>& class_vocab(ClassLabel archetype) {
  static const std::vector<std::string> before = {
      "game",    "match", "tournament", "championship", "race",
      "final",   "playoff", "derby",    "concert",      "premiere"};
  static const std::vector<std::string> after = {
      "earthquake", "flood", "crash",  "wreck", "accident",
      "scandal",    "outage", "riot",  "storm", "collapse"};
  static const std::vector<std::string> symmetric = {
      "computer", "laptop", "phone",  "gadget", "device",
      "keyboard", "screen", "server", "tablet", "camera"};
  static const std::vector<std::string> peakday = {
      "telecast", "episode",  "finale",  "airing",      "rerun",
      "bulletin", "newscast", "sitcom",  "documentary", "broadcast"};
  switch (archetype) {
    case ClassLabel::kBefore: return before;
    case ClassLabel::kAfter: return after;
    case ClassLabel::kSymmetric: return symmetric;
    case ClassLabel::kPeakDay: return peakday;
  }
  return peakday;
}

const std::string& class_planted_concept(ClassLabel archetype) {
  static const std::string before = "social_event";
  static const std::string after = "happening";
  static const std::string symmetric = "artifact";
  static const std::string peakday = "broadcast";
  switch (archetype) {
    case ClassLabel::kBefore: return before;
    case ClassLabel::kAfter: return after;
    case ClassLabel::kSymmetric: return symmetric;
    case ClassLabel::kPeakDay: return peakday;
  }
  return peakday;
}

std::string class_hashtag_name(ClassLabel archetype, size_t index) {
  // Naming vocabulary only; the events these tags once referred to play no
  // role here.
  static const std::vector<std::string> before = {
      "masters",   "easter",   "macworld", "sxswi",     "nfl",
      "twestival", "teaparty", "earthhour", "cparty",   "wbc",
      "asot400",   "poynterday", "rncchair", "mrtweet", "plurk"};
  static const std::vector<std::string> after = {
      "winnenden", "amazonfail", "g20",      "inaug09",  "macheist",
      "skittles",  "spectrial",  "safari4",  "mix09",    "happy09",
      "earthday",  "cricket",    "zombies",  "hoppusday", "starwarsday"};
  static const std::vector<std::string> symmetric = {
      "swineflu", "davos",   "cebit", "ces09", "25c3",
      "leweb",    "drupalcon", "hadopi", "h1n1", "bushfires",
      "ptavote",  "rp09",    "pman",  "glmagic", "toc"};
  static const std::vector<std::string> peakday = {
      "oscars",      "superbowl", "grammys",  "nsotu",     "gfail",
      "aprilfools",  "nfldraft",  "blackout", "schiphol",  "mikeyy",
      "snowmageddon", "googmayharm", "superads09", "bachelor", "budget"};
  const std::vector<std::string>* pool = &peakday;
  switch (archetype) {
    case ClassLabel::kBefore: pool = &before; break;
    case ClassLabel::kAfter: pool = &after; break;
    case ClassLabel::kSymmetric: pool = &symmetric; break;
    case ClassLabel::kPeakDay: pool = &peakday; break;
  }
  std::string name = (*pool)[index % pool->size()];
  size_t round = index / pool->size();
  if (round > 0) name += "_" + std::to_string(round + 1);
  return name;
}

std::vector<Archetype> default_archetypes() {
  return {{{0.45, 0.08}, ClassLabel::kBefore},
          {{0.08, 0.45}, ClassLabel::kAfter},
          {{0.30, 0.30}, ClassLabel::kSymmetric},
          {{0.04, 0.04}, ClassLabel::kPeakDay}};
}

std::vector<TriplePoint> gen_triple_dataset(
    const std::vector<Archetype>& archetypes, size_t per_class, double spread,
    uint64_t seed) {
  if (spread < 0.0) throw DataError("triple dataset: negative spread");
  for (const Archetype& a : archetypes)
    if (a.mean.b < 0.0 || a.mean.a < 0.0 || a.mean.b + a.mean.a > 1.0)
      throw DataError("triple dataset: archetype mean outside the simplex");
  Rng rng = Rng::derive(seed, "triples");
  std::vector<TriplePoint> out;
  out.reserve(archetypes.size() * per_class);
  for (const Archetype& a : archetypes) {
    for (size_t i = 0; i < per_class; ++i) {
      double b, fa;
      do {
        b = rng.normal(a.mean.b, spread);
        fa = rng.normal(a.mean.a, spread);
      } while (b < 0.0 || fa < 0.0 || b + fa > 1.0);
      out.push_back({{b, fa}, a.label});
    }
  }
  return out;
}

void CorpusConfig::validate() const {
  if (nodes == 0) throw DataError("corpus: nodes must be positive");
  if (classes.empty()) throw DataError("corpus: no classes requested");
  if (cascades_per_class == 0)
    throw DataError("corpus: cascades_per_class must be positive");
  if (seed_unit < 1) throw DataError("corpus: seed_unit must be >= 1");
}

CorpusResult gen_corpus(const CorpusConfig& config, uint64_t seed) {
  config.validate();
  CorpusResult result;
  result.graph = gen_graph(config.nodes, config.mean_out_degree, seed);

  struct Keyed {
    int64_t t;
    size_t cascade;
    size_t serial;
    TweetRecord tweet;
  };
  std::vector<Keyed> merged;
  for (ClassLabel cls : config.classes) {
    for (size_t i = 0; i < config.cascades_per_class; ++i) {
      CascadeConfig cc;
      cc.archetype = cls;
      cc.hashtag = class_hashtag_name(cls, i);
      cc.seeding = default_seeding(cls, config.seed_unit);
      cc.beta_true = config.beta_true;
      cc.repeat_rate = config.repeat_rate;
      cc.jitter_hours = config.jitter_hours;
      cc.background_daily = config.background_daily;
      cc.retweet_prob = config.retweet_prob;
      cc.peak_day = config.peak_day;
      cc.window_days = config.window_days;
      cc.window_start = config.window_start;
      cc.words_per_tweet = config.words_per_tweet;
      Rng rng = Rng::derive(seed, "cascade/" + cc.hashtag);
      CascadeResult cascade = gen_cascade(result.graph, cc, rng);
      size_t cascade_index = result.truths.size();
      for (size_t s = 0; s < cascade.tweets.size(); ++s)
        merged.push_back({cascade.tweets[s].timestamp, cascade_index, s,
                          std::move(cascade.tweets[s])});
      result.truths.push_back(std::move(cascade.truth));
    }
  }
  std::sort(merged.begin(), merged.end(), [](const Keyed& x, const Keyed& y) {
    if (x.t != y.t) return x.t < y.t;
    if (x.cascade != y.cascade) return x.cascade < y.cascade;
    return x.serial < y.serial;
  });
  result.tweets.reserve(merged.size());
  for (size_t i = 0; i < merged.size(); ++i) {
    merged[i].tweet.tweet_id = "t" + std::to_string(i);
    result.tweets.push_back(std::move(merged[i].tweet));
  }
  return result;
}

namespace {

std::map<std::string, std::string> parse_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string_view::npos)
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected key = value");
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    if (key.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": duplicate key '" + key + "'");
  }
  return kv;
}

double to_double(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw DataError("config: bad numeric value for '" + key + "': " + v);
  }
}

int64_t to_int(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw DataError("config: bad integer value for '" + key + "': " + v);
  }
}

}  // namespace

SimulateSpec load_simulate_spec(const std::string& path) {
  auto kv = parse_key_values(path);
  SimulateSpec spec;
  bool corpus_mode = kv.count("classes") > 0;
  bool single_mode = kv.count("class") > 0;
  if (corpus_mode == single_mode)
    throw DataError(
        "config: exactly one of 'class' (single cascade) or 'classes' "
        "(corpus) is required");

  CascadeConfig single;
  CorpusConfig corpus;
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  if (auto v = take("nodes")) spec.nodes = static_cast<size_t>(to_int(*v, "nodes"));
  if (auto v = take("mean_out_degree"))
    spec.mean_out_degree = to_double(*v, "mean_out_degree");
  corpus.nodes = spec.nodes;
  corpus.mean_out_degree = spec.mean_out_degree;

  auto apply_common = [&](auto& cfg) {
    if (auto v = take("beta")) cfg.beta_true = to_double(*v, "beta");
    if (auto v = take("repeat_rate"))
      cfg.repeat_rate = to_double(*v, "repeat_rate");
    if (auto v = take("jitter_hours"))
      cfg.jitter_hours = to_double(*v, "jitter_hours");
    if (auto v = take("background_daily"))
      cfg.background_daily = to_double(*v, "background_daily");
    if (auto v = take("retweet_prob"))
      cfg.retweet_prob = to_double(*v, "retweet_prob");
    if (auto v = take("peak_day"))
      cfg.peak_day = static_cast<int>(to_int(*v, "peak_day"));
    if (auto v = take("window_days"))
      cfg.window_days = static_cast<int>(to_int(*v, "window_days"));
    if (auto v = take("start_date")) cfg.window_start = parse_utc_date(*v);
    if (auto v = take("words_per_tweet"))
      cfg.words_per_tweet = static_cast<int>(to_int(*v, "words_per_tweet"));
  };

  if (corpus_mode) {
    apply_common(corpus);
    std::string classes = *take("classes");
    corpus.classes.clear();
    for (const std::string& part : split(classes, ',')) {
      std::string name(trim(part));
      if (!name.empty()) corpus.classes.push_back(class_label_from_name(name));
    }
    if (auto v = take("cascades_per_class"))
      corpus.cascades_per_class =
          static_cast<size_t>(to_int(*v, "cascades_per_class"));
    if (auto v = take("seed_unit")) corpus.seed_unit = to_int(*v, "seed_unit");
    spec.corpus = std::move(corpus);
  } else {
    apply_common(single);
    single.archetype = class_label_from_name(*take("class"));
    if (auto v = take("hashtag")) single.hashtag = *v;
    if (auto v = take("seeding")) {
      std::vector<std::string> parts = split(*v, ',');
      if (parts.size() != kCascadeDays)
        throw DataError("config: 'seeding' needs exactly 15 counts");
      for (size_t i = 0; i < parts.size(); ++i)
        single.seeding[i] = to_int(std::string(trim(parts[i])), "seeding");
    } else {
      if (auto u = take("seed_unit"))
        single.seeding = default_seeding(single.archetype, to_int(*u, "seed_unit"));
      else
        single.seeding = default_seeding(single.archetype, 8);
    }
    if (auto v = take("vocab")) {
      single.vocab.clear();
      for (const std::string& part : split(*v, ','))
        if (!trim(part).empty()) single.vocab.emplace_back(trim(part));
    }
    spec.single = std::move(single);
  }
  if (!kv.empty())
    throw DataError("config: unknown key '" + kv.begin()->first + "'");
  return spec;
}

void write_truths_json(const std::vector<CascadeTruth>& truths,
                       const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CascadeTruth& t : truths) {
    nlohmann::json entry;
    entry["hashtag"] = t.hashtag;
    entry["class"] = class_label_name(t.archetype);
    entry["beta_true"] = t.beta_true;
    entry["peak_day"] = t.peak_day;
    entry["seeders"] = t.seeders;
    entry["first_use"] = t.first_use;
    entry["exposed_by"] = t.exposed_by;
    entry["background_posts"] = t.background_posts;
    arr.push_back(std::move(entry));
  }
  write_text_file(path, arr.dump(2) + "\n");
}

std::vector<CascadeTruth> read_truths_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open truth file " + path);
  nlohmann::json arr;
  try {
    in >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("truth file " + path + ": " + e.what());
  }
  std::vector<CascadeTruth> out;
  try {
    for (const auto& entry : arr) {
      CascadeTruth t;
      t.hashtag = entry.at("hashtag").get<std::string>();
      t.archetype = class_label_from_name(entry.at("class").get<std::string>());
      t.beta_true = entry.at("beta_true").get<double>();
      t.peak_day = entry.at("peak_day").get<int>();
      t.seeders = entry.at("seeders").get<std::vector<std::string>>();
      t.first_use =
          entry.at("first_use").get<std::map<std::string, int64_t>>();
      t.exposed_by =
          entry.at("exposed_by").get<std::map<std::string, std::string>>();
      t.background_posts = entry.at("background_posts").get<size_t>();
      out.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError("truth file " + path + ": " + e.what());
  }
  return out;
}

}  // namespace tagdyn

#include "tagdyn/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include <json.hpp>

#include "tagdyn/diffusion.hpp"
#include "tagdyn/features.hpp"
#include "tagdyn/ingest.hpp"
#include "tagdyn/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tagdyn {

namespace {

std::string join_path(const std::string& a, const std::string& b) {
  return (fs::path(a) / b).string();
}

std::string stage_path(const PipelineConfig& c, const std::string& stage,
                       const std::string& file) {
  return (fs::path(c.out_dir) / stage / file).string();
}

void ensure_stage_dir(const PipelineConfig& c, const std::string& stage) {
  fs::create_directories(fs::path(c.out_dir) / stage);
}

const char* edge_policy_name(EdgePolicy p) {
  return p == EdgePolicy::kStrict ? "strict" : "truncated";
}

EdgePolicy edge_policy_from_name(const std::string& s) {
  if (s == "strict") return EdgePolicy::kStrict;
  if (s == "truncated") return EdgePolicy::kTruncated;
  throw DataError("unknown edge policy '" + s + "' (strict|truncated)");
}

// Strict object reader: every key must be consumed.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string where)
      : obj_(obj), where_(std::move(where)) {
    if (!obj.is_object())
      throw DataError(where_ + " must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) pending_.insert(it.key());
  }

  const json* take(const std::string& key) {
    auto it = obj_.find(key);
    if (it == obj_.end()) return nullptr;
    pending_.erase(key);
    return &*it;
  }

  void finish() const {
    if (!pending_.empty())
      throw DataError("unknown key '" + *pending_.begin() + "' in " + where_);
  }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> pending_;
};

template <typename T>
void read_into(const json* v, T& out, const std::string& key) {
  if (!v) return;
  try {
    out = v->get<T>();
  } catch (const json::exception&) {
    throw DataError("bad value for config key '" + key + "'");
  }
}

std::string labels_key(ClassLabel label) { return class_label_name(label); }

}  // namespace

void PipelineConfig::validate() const {
  if (tweets_path.empty()) throw DataError("config: tweets path required");
  if (out_dir.empty()) throw DataError("config: out_dir required");
  if (window_days <= 0) throw DataError("config: window_days must be positive");
  if (min_users < 1) throw DataError("config: min_users must be >= 1");
  peak_params.validate();
  if (half_span < 1) throw DataError("config: half_span must be >= 1");
  if (k_min < 1 || k_max < k_min)
    throw DataError("config: need 1 <= k_min <= k_max");
  if (restarts < 1 || cv_restarts < 1)
    throw DataError("config: restarts must be >= 1");
  if (folds < 2) throw DataError("config: folds must be >= 2");
  if (em.tolerance <= 0 || em.max_iterations < 1 || em.variance_floor <= 0)
    throw DataError("config: bad EM options");
  if (label_rules.peakday_sum <= 0 || label_rules.ratio <= 1)
    throw DataError("config: bad label rules");
  if (grounding.resolve_threshold < 0 || grounding.resolve_threshold > 1)
    throw DataError("config: resolve_threshold must be in [0,1]");
  if (grounding.language_top_n < 1)
    throw DataError("config: language_top_n must be >= 1");
  if (grounding.concept_depth < 1)
    throw DataError("config: concept_depth must be >= 1");
  if (top_concepts < 1) throw DataError("config: top_concepts must be >= 1");
  if (wordnet_dir.empty() || stopwords_path.empty() || profiles_dir.empty())
    throw DataError("config: wordnet_dir, stopwords and profiles_dir required");
}

PipelineConfig load_pipeline_config(const std::string& path) {
  json root;
  try {
    root = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw DataError("config " + path + ": " + e.what());
  }
  PipelineConfig c;
  ObjectReader top(root, "config");
  read_into(top.take("tweets"), c.tweets_path, "tweets");
  read_into(top.take("graph"), c.graph_path, "graph");
  read_into(top.take("wordnet_dir"), c.wordnet_dir, "wordnet_dir");
  read_into(top.take("stopwords"), c.stopwords_path, "stopwords");
  read_into(top.take("profiles_dir"), c.profiles_dir, "profiles_dir");
  read_into(top.take("out_dir"), c.out_dir, "out_dir");
  read_into(top.take("seed"), c.seed, "seed");
  if (const json* v = top.take("window_start")) {
    if (v->is_string())
      c.window_start = parse_utc_date(v->get<std::string>());
    else
      read_into(v, c.window_start, "window_start");
  }
  read_into(top.take("window_days"), c.window_days, "window_days");

  if (const json* v = top.take("ingest")) {
    ObjectReader o(*v, "config.ingest");
    read_into(o.take("min_users"), c.min_users, "min_users");
    o.finish();
  }
  if (const json* v = top.take("peaks")) {
    ObjectReader o(*v, "config.peaks");
    read_into(o.take("half_window"), c.peak_params.half_window, "half_window");
    read_into(o.take("min_activity"), c.peak_params.min_activity, "min_activity");
    read_into(o.take("threshold"), c.peak_params.threshold, "threshold");
    read_into(o.take("isolation_days"), c.peak_params.isolation_days,
              "isolation_days");
    if (const json* e = o.take("edge_policy"))
      c.peak_params.edge_policy = edge_policy_from_name(e->get<std::string>());
    read_into(o.take("half_span"), c.half_span, "half_span");
    o.finish();
  }
  if (const json* v = top.take("classify")) {
    ObjectReader o(*v, "config.classify");
    read_into(o.take("k_min"), c.k_min, "k_min");
    read_into(o.take("k_max"), c.k_max, "k_max");
    read_into(o.take("restarts"), c.restarts, "restarts");
    read_into(o.take("cv_restarts"), c.cv_restarts, "cv_restarts");
    read_into(o.take("folds"), c.folds, "folds");
    read_into(o.take("tolerance"), c.em.tolerance, "tolerance");
    read_into(o.take("max_iterations"), c.em.max_iterations, "max_iterations");
    read_into(o.take("variance_floor"), c.em.variance_floor, "variance_floor");
    read_into(o.take("peakday_sum"), c.label_rules.peakday_sum, "peakday_sum");
    read_into(o.take("ratio"), c.label_rules.ratio, "ratio");
    o.finish();
  }
  if (const json* v = top.take("semantics")) {
    ObjectReader o(*v, "config.semantics");
    read_into(o.take("concept_depth"), c.grounding.concept_depth, "concept_depth");
    read_into(o.take("resolve_threshold"), c.grounding.resolve_threshold,
              "resolve_threshold");
    read_into(o.take("language_top_n"), c.grounding.language_top_n,
              "language_top_n");
    read_into(o.take("stem_fallback"), c.grounding.stem_fallback, "stem_fallback");
    read_into(o.take("top_concepts"), c.top_concepts, "top_concepts");
    read_into(o.take("top_words"), c.top_words_k, "top_words");
    o.finish();
  }
  if (const json* v = top.take("report")) {
    ObjectReader o(*v, "config.report");
    read_into(o.take("raster_hashtags"), c.raster_hashtags, "raster_hashtags");
    o.finish();
  }
  top.finish();
  return c;
}

void run_ingest(const PipelineConfig& p, const std::string& tweets_jsonl,
                const std::string& out_dir) {
  if (p.window_days <= 0) throw DataError("ingest: window_days must be positive");
  if (p.min_users < 1) throw DataError("ingest: min_users must be >= 1");
  fs::create_directories(out_dir);
  SeriesBuilder builder(p.window_start, p.window_days);
  JsonlStats in_stats = read_tweets_jsonl(
      tweets_jsonl, [&](const TweetRecord& t) { builder.add(t); });
  if (in_stats.parsed == 0)
    throw DataError("no tweets parsed from " + tweets_jsonl);
  BuildStats build_stats = builder.stats();
  SeriesMap all = builder.finish();
  SeriesMap popular = filter_popular(all, p.min_users);
  write_series_csv(join_path(out_dir, "series.csv"), popular, p.window_days);
  write_series_summary(join_path(out_dir, "summary.json"), popular,
                       p.window_start, p.window_days, build_stats, in_stats);
}

namespace {

// The series file carries no length; take it from the config or from the
// summary written next to it.
int resolve_window_days(const PipelineConfig& p, const std::string& series_csv) {
  if (p.window_days > 0) return p.window_days;
  std::string summary =
      (fs::path(series_csv).parent_path() / "summary.json").string();
  if (!fs::exists(summary))
    throw DataError("window length unknown: pass --days or keep summary.json "
                    "beside " + series_csv);
  try {
    json j = json::parse(read_text_file(summary));
    return j.at("window_days").get<int>();
  } catch (const json::exception& e) {
    throw DataError("summary " + summary + ": " + e.what());
  }
}

}  // namespace

void run_peaks(const PipelineConfig& p, const std::string& series_csv,
               const std::string& out_dir) {
  p.peak_params.validate();
  if (p.half_span < 1) throw DataError("peaks: half_span must be >= 1");
  fs::create_directories(out_dir);
  int days = resolve_window_days(p, series_csv);
  SeriesMap popular = read_series_csv(series_csv, days);
  std::vector<PeakRecord> records;
  for (const auto& [tag, series] : popular)
    if (auto rec = select_peak(series, p.peak_params, p.half_span))
      records.push_back(std::move(*rec));
  write_peaks_csv(join_path(out_dir, "peaks.csv"), records);
  write_aligned_csv(join_path(out_dir, "aligned.csv"), records);
}

void run_features(const PipelineConfig&, const std::string& peaks_dir,
                  const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::vector<PeakRecord> records = read_peaks_dir(peaks_dir);
  std::vector<FeatureTriple> triples;
  triples.reserve(records.size());
  for (const PeakRecord& rec : records) triples.push_back(compute_triple(rec));
  write_features_csv(join_path(out_dir, "features.csv"), triples);
  write_simplex_csv(join_path(out_dir, "simplex.csv"), triples);
}

void run_classify(const PipelineConfig& c, const std::string& features_csv,
                  const std::string& out_dir) {
  if (c.k_min < 1 || c.k_max < c.k_min)
    throw DataError("classify: need 1 <= k_min <= k_max");
  if (c.restarts < 1 || c.cv_restarts < 1)
    throw DataError("classify: restarts must be >= 1");
  if (c.folds < 2) throw DataError("classify: folds must be >= 2");
  fs::create_directories(out_dir);
  std::vector<FeatureTriple> triples = read_features_csv(features_csv);
  if (triples.empty())
    throw DataError("no feature triples to classify; did any hashtag peak?");
  std::vector<Vec2> points;
  points.reserve(triples.size());
  for (const FeatureTriple& t : triples) points.push_back({t.before, t.after});

  SelectionResult sel =
      select_model(points, c.k_min, c.k_max, c.restarts, c.seed, c.em);
  std::vector<CvRow> cv = cross_validate(points, c.k_min, c.k_max, c.folds,
                                         c.cv_restarts, c.seed, c.em);
  Labeling labeling = label_components(sel.best, c.label_rules);

  std::vector<Assignment> assignments;
  assignments.reserve(triples.size());
  for (size_t i = 0; i < triples.size(); ++i) {
    Assignment a = classify(sel.best, labeling, points[i]);
    a.hashtag = triples[i].hashtag;
    assignments.push_back(std::move(a));
  }
  write_model_json(join_path(out_dir, "model.json"), sel.best, labeling);
  write_assignments_csv(join_path(out_dir, "assignments.csv"), assignments);
  write_bic_csv(join_path(out_dir, "bic.csv"), sel.table);
  write_cv_csv(join_path(out_dir, "cv.csv"), cv);
}

void run_semantics(const PipelineConfig& c, const std::string& tweets_jsonl,
                   const std::string& labels_csv, const std::string& out_dir) {
  if (c.wordnet_dir.empty() || c.stopwords_path.empty() || c.profiles_dir.empty())
    throw DataError("semantics: wordnet_dir, stopwords and profiles_dir required");
  if (c.grounding.concept_depth < 1)
    throw DataError("semantics: concept_depth must be >= 1");
  if (c.top_concepts < 1) throw DataError("semantics: top_concepts must be >= 1");
  fs::create_directories(out_dir);
  Taxonomy taxonomy = Taxonomy::load(c.wordnet_dir);
  std::vector<LanguageProfile> profiles = load_profiles(c.profiles_dir);
  StopwordSet stopwords = load_stopwords(c.stopwords_path);
  std::vector<Assignment> assignments = read_assignments_csv(labels_csv);

  std::map<std::string, ClassLabel> labels;
  std::map<std::string, ConceptCounts> counts_by_tag;
  for (const Assignment& a : assignments) {
    labels[a.hashtag] = a.label;
    counts_by_tag[a.hashtag].hashtag = a.hashtag;
  }

  std::map<ClassLabel, std::map<std::string, int64_t>> class_token_counts;
  read_tweets_jsonl(tweets_jsonl, [&](const TweetRecord& t) {
    std::vector<std::string> tags = extract_hashtags(t.text);
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    std::vector<std::string> studied;
    for (const std::string& tag : tags)
      if (labels.count(tag)) studied.push_back(tag);
    if (studied.empty()) return;

    GroundedTweet grounded =
        ground_tweet(t.text, taxonomy, profiles, stopwords, c.grounding);
    for (const std::string& tag : studied)
      counts_by_tag[tag].add(grounded, taxonomy, c.grounding.concept_depth);
    if (grounded.discarded) return;

    std::set<ClassLabel> tweet_classes;
    for (const std::string& tag : studied) tweet_classes.insert(labels.at(tag));
    std::vector<std::string> tokens = preprocess(t.text, stopwords);
    for (ClassLabel label : tweet_classes)
      for (const std::string& tok : tokens) ++class_token_counts[label][tok];
  });

  std::vector<ConceptCounts> all_counts;
  all_counts.reserve(counts_by_tag.size());
  for (const auto& [tag, counts] : counts_by_tag) all_counts.push_back(counts);

  bool short_flagged = false;
  std::vector<std::string> top =
      select_top_concepts(all_counts, c.top_concepts, &short_flagged);
  std::vector<ConceptVector> vectors;
  vectors.reserve(all_counts.size());
  for (const ConceptCounts& counts : all_counts)
    vectors.push_back(normalize_counts(counts));

  std::vector<ClassFingerprint> fingerprints =
      class_fingerprints(labels, vectors, top);
  write_concept_vectors_csv(vectors, join_path(out_dir, "concept_vectors.csv"));
  write_fingerprints_json(fingerprints, top, short_flagged,
                          join_path(out_dir, "fingerprints.json"));

  std::string out = "class,word,count\n";
  for (ClassLabel label : {ClassLabel::kBefore, ClassLabel::kAfter,
                           ClassLabel::kSymmetric, ClassLabel::kPeakDay}) {
    auto it = class_token_counts.find(label);
    if (it == class_token_counts.end()) continue;
    std::vector<WordCount> rows;
    rows.reserve(it->second.size());
    for (const auto& [word, n] : it->second) rows.push_back({word, n});
    std::sort(rows.begin(), rows.end(), [](const WordCount& x, const WordCount& y) {
      if (x.count != y.count) return x.count > y.count;
      return x.word < y.word;
    });
    if (rows.size() > c.top_words_k) rows.resize(c.top_words_k);
    for (const WordCount& row : rows)
      out += labels_key(label) + "," + row.word + "," + std::to_string(row.count) +
             "\n";
  }
  write_text_file(join_path(out_dir, "top_words.csv"), out);
}

void run_diffusion(const PipelineConfig&, const std::string& graph_csv,
                   const std::string& tweets_jsonl, const std::string& labels_csv,
                   const std::string& out_dir) {
  if (graph_csv.empty())
    throw DataError("diffusion stage needs a follower graph");
  fs::create_directories(out_dir);
  FollowerGraph graph = load_graph(graph_csv);
  std::vector<Assignment> assignments = read_assignments_csv(labels_csv);
  std::map<std::string, ClassLabel> labels;
  for (const Assignment& a : assignments) labels[a.hashtag] = a.label;

  CorpusScan scan;
  read_tweets_jsonl(tweets_jsonl,
                    [&](const TweetRecord& t) { scan.add(t); });
  // Only the studied hashtags are estimated.
  for (auto it = scan.logs.begin(); it != scan.logs.end();) {
    if (labels.count(it->first)) {
      ++it;
    } else {
      scan.stats.erase(it->first);
      it = scan.logs.erase(it);
    }
  }

  std::vector<EpidemicEstimates> estimates = estimate_all(graph, scan, labels);
  write_estimates_csv(estimates, join_path(out_dir, "estimates.csv"));
  std::vector<std::string> omitted;
  std::vector<ClassSummary> summaries = class_summaries(estimates, &omitted);
  write_class_summaries_json(summaries, omitted,
                             join_path(out_dir, "class_quartiles.json"));
}

void stage_ingest(const PipelineConfig& c) {
  run_ingest(c, c.tweets_path, join_path(c.out_dir, "ingest"));
}

void stage_peaks(const PipelineConfig& c) {
  run_peaks(c, stage_path(c, "ingest", "series.csv"),
            join_path(c.out_dir, "peaks"));
}

void stage_features(const PipelineConfig& c) {
  run_features(c, join_path(c.out_dir, "peaks"),
               join_path(c.out_dir, "features"));
}

void stage_classify(const PipelineConfig& c) {
  run_classify(c, stage_path(c, "features", "features.csv"),
               join_path(c.out_dir, "classify"));
}

void stage_semantics(const PipelineConfig& c) {
  run_semantics(c, c.tweets_path, stage_path(c, "classify", "assignments.csv"),
                join_path(c.out_dir, "semantics"));
}

void stage_diffusion(const PipelineConfig& c) {
  run_diffusion(c, c.graph_path, c.tweets_path,
                stage_path(c, "classify", "assignments.csv"),
                join_path(c.out_dir, "diffusion"));
}

void stage_report(const PipelineConfig& c) {
  ensure_stage_dir(c, "report");
  int64_t window_start = c.window_start;
  int window_days = c.window_days;
  if (window_days <= 0) {
    std::string summary = stage_path(c, "ingest", "summary.json");
    if (!fs::exists(summary))
      throw DataError("window geometry unknown: pass --start/--days or keep " +
                      summary);
    try {
      json j = json::parse(read_text_file(summary));
      window_days = j.at("window_days").get<int>();
      window_start = parse_utc_instant(j.at("window_start").get<std::string>());
    } catch (const json::exception& e) {
      throw DataError("summary " + summary + ": " + e.what());
    }
  }
  SeriesMap popular =
      read_series_csv(stage_path(c, "ingest", "series.csv"), window_days);
  std::vector<PeakRecord> records = read_peaks_dir(join_path(c.out_dir, "peaks"));

  // Daily activity for every analyzed hashtag, dense over the window.
  std::string activity = "hashtag,day,count\n";
  for (const PeakRecord& rec : records) {
    auto it = popular.find(rec.hashtag);
    if (it == popular.end())
      throw InternalError("peaked hashtag missing from series: " + rec.hashtag);
    for (int day = 0; day < window_days; ++day)
      activity += rec.hashtag + "," + std::to_string(day) + "," +
                  std::to_string(it->second.counts[static_cast<size_t>(day)]) +
                  "\n";
  }
  write_text_file(stage_path(c, "report", "activity.csv"), activity);

  // User-by-day raster around the strongest peaks.
  std::vector<const PeakRecord*> ranked;
  ranked.reserve(records.size());
  for (const PeakRecord& rec : records) ranked.push_back(&rec);
  std::sort(ranked.begin(), ranked.end(),
            [](const PeakRecord* x, const PeakRecord* y) {
              if (x->outlier_fraction != y->outlier_fraction)
                return x->outlier_fraction > y->outlier_fraction;
              return x->hashtag < y->hashtag;
            });
  if (ranked.size() > c.raster_hashtags) ranked.resize(c.raster_hashtags);
  std::map<std::string, const PeakRecord*> chosen;
  for (const PeakRecord* rec : ranked) chosen[rec->hashtag] = rec;

  struct UserTrace {
    int64_t first_ts = 0;
    std::set<int> days;
  };
  std::map<std::string, std::map<std::string, UserTrace>> traces;
  read_tweets_jsonl(c.tweets_path, [&](const TweetRecord& t) {
    std::vector<std::string> tags = extract_hashtags(t.text);
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    for (const std::string& tag : tags) {
      auto it = chosen.find(tag);
      if (it == chosen.end()) continue;
      int64_t day = (t.timestamp - window_start) / kSecondsPerDay;
      if (t.timestamp < window_start || day >= window_days) continue;
      int rel = static_cast<int>(day) - it->second->peak_day;
      if (rel < -c.half_span || rel > c.half_span) continue;
      UserTrace& trace = traces[tag][t.user_id];
      if (trace.days.empty() || t.timestamp < trace.first_ts)
        trace.first_ts = t.timestamp;
      trace.days.insert(rel);
    }
  });
  std::string raster = "hashtag,user_rank,rel_day\n";
  for (const PeakRecord* rec : ranked) {
    auto& users = traces[rec->hashtag];
    std::vector<std::pair<std::string, const UserTrace*>> order;
    order.reserve(users.size());
    for (const auto& [user, trace] : users) order.emplace_back(user, &trace);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      if (x.second->first_ts != y.second->first_ts)
        return x.second->first_ts < y.second->first_ts;
      return x.first < y.first;
    });
    for (size_t rank = 0; rank < order.size(); ++rank)
      for (int rel : order[rank].second->days)
        raster += rec->hashtag + "," + std::to_string(rank + 1) + "," +
                  std::to_string(rel) + "\n";
  }
  write_text_file(stage_path(c, "report", "raster.csv"), raster);

  // Class-by-concept fingerprint matrix, plot-ready.
  json fp = json::parse(
      read_text_file(stage_path(c, "semantics", "fingerprints.json")));
  std::string matrix = "class,concept,frequency\n";
  std::vector<std::string> concepts =
      fp.at("concepts").get<std::vector<std::string>>();
  for (ClassLabel label : {ClassLabel::kBefore, ClassLabel::kAfter,
                           ClassLabel::kSymmetric, ClassLabel::kPeakDay}) {
    const json& cls = fp.at("classes").at(class_label_name(label));
    if (cls.at("members").get<size_t>() == 0) continue;
    const json& freq = cls.at("mean_frequencies");
    for (const std::string& name : concepts) {
      double v = freq.contains(name) ? freq.at(name).get<double>() : 0.0;
      matrix += std::string(class_label_name(label)) + "," + name + "," +
                format_double(v) + "\n";
    }
  }
  write_text_file(stage_path(c, "report", "fingerprint_matrix.csv"), matrix);

  // Per-class quartiles of the diffusion quantities, when that stage ran.
  std::string quartiles_json = stage_path(c, "diffusion", "class_quartiles.json");
  if (fs::exists(quartiles_json)) {
    json q = json::parse(read_text_file(quartiles_json));
    std::string rows = "class,quantity,min,q1,median,q3,max\n";
    const json& classes = q.at("classes");
    for (auto cit = classes.begin(); cit != classes.end(); ++cit) {
      const std::string& label = cit.key();
      const json& quantities = cit.value().at("quantities");
      for (auto it = quantities.begin(); it != quantities.end(); ++it) {
        const json& s = it.value();
        rows += label + "," + it.key() + "," +
                format_double(s.at("min").get<double>()) + "," +
                format_double(s.at("q1").get<double>()) + "," +
                format_double(s.at("median").get<double>()) + "," +
                format_double(s.at("q3").get<double>()) + "," +
                format_double(s.at("max").get<double>()) + "\n";
      }
    }
    write_text_file(stage_path(c, "report", "quartiles.csv"), rows);
  }
}

namespace {

json config_json(const PipelineConfig& c) {
  json j;
  j["tweets"] = c.tweets_path;
  j["graph"] = c.graph_path;
  j["wordnet_dir"] = c.wordnet_dir;
  j["stopwords"] = c.stopwords_path;
  j["profiles_dir"] = c.profiles_dir;
  j["out_dir"] = c.out_dir;
  j["seed"] = c.seed;
  j["window_start"] = c.window_start;
  j["window_days"] = c.window_days;
  j["ingest"] = {{"min_users", c.min_users}};
  j["peaks"] = {{"half_window", c.peak_params.half_window},
                {"min_activity", c.peak_params.min_activity},
                {"threshold", c.peak_params.threshold},
                {"isolation_days", c.peak_params.isolation_days},
                {"edge_policy", edge_policy_name(c.peak_params.edge_policy)},
                {"half_span", c.half_span}};
  j["classify"] = {{"k_min", c.k_min},
                   {"k_max", c.k_max},
                   {"restarts", c.restarts},
                   {"cv_restarts", c.cv_restarts},
                   {"folds", c.folds},
                   {"tolerance", c.em.tolerance},
                   {"max_iterations", c.em.max_iterations},
                   {"variance_floor", c.em.variance_floor},
                   {"peakday_sum", c.label_rules.peakday_sum},
                   {"ratio", c.label_rules.ratio}};
  j["semantics"] = {{"concept_depth", c.grounding.concept_depth},
                    {"resolve_threshold", c.grounding.resolve_threshold},
                    {"language_top_n", c.grounding.language_top_n},
                    {"stem_fallback", c.grounding.stem_fallback},
                    {"top_concepts", c.top_concepts},
                    {"top_words", c.top_words_k}};
  j["report"] = {{"raster_hashtags", c.raster_hashtags}};
  return j;
}

// Digest of a directory: each regular file directly inside, sorted by name.
uint64_t digest_dir(const std::string& dir) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  uint64_t h = fnv1a64("dir");
  for (const std::string& name : names) {
    h = fnv1a64(name, h);
    h = fnv1a64(hex64(digest_file(join_path(dir, name))), h);
  }
  return h;
}

void write_failure_marker(const PipelineConfig& c, const std::string& stage,
                          const std::string& what) {
  try {
    write_text_file(join_path(c.out_dir, "FAILED"),
                    "stage: " + stage + "\nerror: " + what + "\n");
  } catch (...) {
    // The marker is best-effort; the original error still propagates.
  }
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& c, bool verbose) {
  c.validate();
  fs::create_directories(c.out_dir);
  fs::remove(join_path(c.out_dir, "FAILED"));

  struct StageSpec {
    std::string name;
    void (*run)(const PipelineConfig&);
    std::vector<std::string> outputs;  // relative to out_dir
  };
  std::vector<StageSpec> specs = {
      {"ingest", stage_ingest, {"ingest/series.csv", "ingest/summary.json"}},
      {"peaks", stage_peaks, {"peaks/peaks.csv", "peaks/aligned.csv"}},
      {"features", stage_features,
       {"features/features.csv", "features/simplex.csv"}},
      {"classify", stage_classify,
       {"classify/model.json", "classify/assignments.csv", "classify/bic.csv",
        "classify/cv.csv"}},
      {"semantics", stage_semantics,
       {"semantics/concept_vectors.csv", "semantics/fingerprints.json",
        "semantics/top_words.csv"}},
  };
  if (!c.graph_path.empty())
    specs.push_back({"diffusion", stage_diffusion,
                     {"diffusion/estimates.csv", "diffusion/class_quartiles.json"}});
  std::vector<std::string> report_outputs = {
      "report/activity.csv", "report/raster.csv", "report/fingerprint_matrix.csv"};
  if (!c.graph_path.empty()) report_outputs.push_back("report/quartiles.csv");
  specs.push_back({"report", stage_report, report_outputs});

  PipelineResult result;
  for (const StageSpec& spec : specs) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      spec.run(c);
    } catch (const std::exception& e) {
      write_failure_marker(c, spec.name, e.what());
      throw;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                t0)
                      .count();
    if (verbose)
      std::fprintf(stderr, "[pipeline] %-9s done in %.2fs\n", spec.name.c_str(),
                   secs);
    result.stages.push_back({spec.name, spec.outputs, secs});
  }

  json manifest;
  manifest["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
  manifest["parameters"] = config_json(c);
  json inputs;
  inputs["tweets"] = hex64(digest_file(c.tweets_path));
  if (!c.graph_path.empty()) inputs["graph"] = hex64(digest_file(c.graph_path));
  inputs["stopwords"] = hex64(digest_file(c.stopwords_path));
  inputs["wordnet"] = hex64(digest_dir(c.wordnet_dir));
  inputs["profiles"] = hex64(digest_dir(c.profiles_dir));
  manifest["inputs"] = inputs;
  json stages = json::array();
  for (const StageOutcome& stage : result.stages) {
    json outputs;
    for (const std::string& rel : stage.outputs) {
      std::string full = join_path(c.out_dir, rel);
      if (!fs::exists(full))
        throw InternalError("stage " + stage.name + " missing output " + rel);
      outputs[rel] = hex64(digest_file(full));
    }
    stages.push_back({{"name", stage.name}, {"outputs", outputs}});
  }
  manifest["stages"] = stages;
  result.manifest_path = join_path(c.out_dir, "manifest.json");
  write_text_file(result.manifest_path, manifest.dump(2) + "\n");
  return result;
}

}  // namespace tagdyn

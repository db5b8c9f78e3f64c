// Synthetic follower graphs and hashtag cascades with known ground truth,
// plus clustered feature-triple datasets. Validation data for the whole
// pipeline; nothing here touches real Twitter data.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tagdyn/diffusion.hpp"
#include "tagdyn/mixture.hpp"
#include "tagdyn/rng.hpp"
#include "tagdyn/tweet.hpp"

namespace tagdyn {

// Directed random graph: out-degrees (follower counts) Poisson-distributed
// around the requested mean, targets sampled without replacement.
FollowerGraph gen_graph(size_t n_nodes, double mean_out_degree, uint64_t seed);

inline constexpr int kCascadeSpan = 7;  // relative days -7..+7
inline constexpr int kCascadeDays = 2 * kCascadeSpan + 1;

struct CascadeConfig {
  ClassLabel archetype = ClassLabel::kPeakDay;
  std::string hashtag = "tag";
  // New exogenous seeders per relative day -7..+7 (exact counts).
  std::array<int64_t, kCascadeDays> seeding{};
  double beta_true = 0.0;        // conversion probability per exposure
  double repeat_rate = 0.0;      // expected extra posts per adopter
  double jitter_hours = 24.0;    // spread of seed posts within their day
                                 // and of repeat posts after the first
  double background_daily = 0.0; // expected unrelated uses per window day
  double retweet_prob = 0.0;     // converted first posts marked as retweets
  int peak_day = 37;             // absolute day index of relative day 0
  int window_days = 75;
  int64_t window_start = 1230768000;  // 2009-01-01T00:00:00Z
  int words_per_tweet = 3;
  std::vector<std::string> vocab;  // empty -> class default pool

  void validate(size_t n_nodes) const;
};

struct CascadeTruth {
  std::string hashtag;
  ClassLabel archetype = ClassLabel::kPeakDay;
  double beta_true = 0.0;
  int peak_day = 0;
  std::vector<std::string> seeders;
  std::map<std::string, int64_t> first_use;  // every adopter, incl. seeders
  std::map<std::string, std::string> exposed_by;  // convert -> followee
  size_t background_posts = 0;

  double planted_gamma() const;
};

struct CascadeResult {
  std::vector<TweetRecord> tweets;  // sorted by (timestamp, id)
  CascadeTruth truth;
};

// Event-driven cascade: per-day seeders post, every first post exposes the
// poster's followers exactly once, exposures convert with beta_true to a
// first post 1 s..24 h later, adopters add Poisson(repeat_rate) extra posts.
CascadeResult gen_cascade(const FollowerGraph& graph,
                          const CascadeConfig& config, Rng& rng);

// Per-day seeding counts for a class shape, scaled so the quietest active
// day expects `unit` seeders. See class_shape_weights for the geometry.
std::array<int64_t, kCascadeDays> default_seeding(ClassLabel archetype,
                                                  int64_t unit);
const std::array<int, kCascadeDays>& class_shape_weights(ClassLabel archetype);

// Word pool whose lexicon roll-up concentrates on one depth-4 concept per
// class, and the concept name it concentrates on.
const std::vector<std::string>& class_vocab(ClassLabel archetype);
const std::string& class_planted_concept(ClassLabel archetype);

// Hashtag naming pool per class; names beyond the pool get _2, _3, ...
std::string class_hashtag_name(ClassLabel archetype, size_t index);

struct TriplePoint {
  Vec2 point;
  ClassLabel label = ClassLabel::kPeakDay;
};

struct Archetype {
  Vec2 mean;
  ClassLabel label = ClassLabel::kPeakDay;
};

std::vector<Archetype> default_archetypes();

// Gaussian clouds around the archetype means, rejection-sampled into the
// valid region f_b >= 0, f_a >= 0, f_b + f_a <= 1.
std::vector<TriplePoint> gen_triple_dataset(
    const std::vector<Archetype>& archetypes, size_t per_class, double spread,
    uint64_t seed);

// A full 4-class corpus: one shared graph, cascades_per_class cascades per
// class with default shapes, vocabularies and hashtag names.
struct CorpusConfig {
  size_t nodes = 4000;
  double mean_out_degree = 8.0;
  std::vector<ClassLabel> classes = {ClassLabel::kBefore, ClassLabel::kAfter,
                                     ClassLabel::kSymmetric,
                                     ClassLabel::kPeakDay};
  size_t cascades_per_class = 50;
  int64_t seed_unit = 8;          // per-day seeder unit (users/day)
  double beta_true = 0.01;
  double repeat_rate = 0.2;
  double jitter_hours = 24.0;
  double background_daily = 8.0;
  double retweet_prob = 0.4;
  int peak_day = 37;
  int window_days = 75;
  int64_t window_start = 1230768000;
  int words_per_tweet = 3;

  void validate() const;
};

struct CorpusResult {
  FollowerGraph graph;
  std::vector<TweetRecord> tweets;  // globally time-sorted
  std::vector<CascadeTruth> truths;
};

CorpusResult gen_corpus(const CorpusConfig& config, uint64_t seed);

// Key-value config file ("key = value" lines, '#' comments). Either a
// single cascade (key "class") or a corpus (key "classes").
struct SimulateSpec {
  std::optional<CascadeConfig> single;
  std::optional<CorpusConfig> corpus;
  size_t nodes = 4000;            // used when generating a graph for single
  double mean_out_degree = 8.0;
};

SimulateSpec load_simulate_spec(const std::string& path);

void write_truths_json(const std::vector<CascadeTruth>& truths,
                       const std::string& path);
std::vector<CascadeTruth> read_truths_json(const std::string& path);

}  // namespace tagdyn

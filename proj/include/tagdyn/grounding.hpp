// Semantic grounding: token cleanup, synset resolution with a language
// gate, per-hashtag concept vectors and per-class fingerprints.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tagdyn/mixture.hpp"
#include "tagdyn/textcat.hpp"
#include "tagdyn/wordnet.hpp"

namespace tagdyn {

using StopwordSet = std::set<std::string, std::less<>>;

StopwordSet load_stopwords(const std::string& path);

// Removes @-mentions, #-tags and URL tokens, strips punctuation, lowercases
// and drops stop words. Idempotent on its own output.
std::vector<std::string> preprocess(std::string_view text,
                                    const StopwordSet& stopwords);

struct GroundingOptions {
  double resolve_threshold = 0.5;  // below this, the language gate applies
  size_t language_top_n = 10;
  bool stem_fallback = true;       // try the Porter stem as a lookup key
  int concept_depth = 4;
};

struct GroundedTweet {
  std::vector<SynsetId> synsets;       // first sense per resolved token
  std::vector<std::string> resolved;   // the tokens that resolved
  size_t total_tokens = 0;
  bool discarded = false;              // failed the language gate
};

GroundedTweet ground_tweet(std::string_view text, const Taxonomy& taxonomy,
                           const std::vector<LanguageProfile>& profiles,
                           const StopwordSet& stopwords,
                           const GroundingOptions& opts = {});

// Raw depth-target concept counts for one hashtag: every resolved token
// adds 1 to each of its rollup concepts.
struct ConceptCounts {
  std::string hashtag;
  std::map<std::string, int64_t> counts;  // concept name -> count
  size_t tweets_seen = 0;
  size_t tweets_discarded = 0;
  size_t tokens_resolved = 0;

  void add(const GroundedTweet& grounded, const Taxonomy& taxonomy,
           int target_depth);
};

struct ConceptVector {
  std::string hashtag;
  std::map<std::string, double> frequencies;  // sums to 1 when non-empty
};

ConceptVector normalize_counts(const ConceptCounts& counts);

// The k concepts with the highest total unnormalized count across all
// hashtags; ties broken lexicographically. Sets *short_flagged when fewer
// than k concepts exist.
std::vector<std::string> select_top_concepts(
    const std::vector<ConceptCounts>& all, size_t k,
    bool* short_flagged = nullptr);

// Restriction of a vector to the chosen concepts, renormalized. Empty when
// the hashtag uses none of them.
ConceptVector restrict_vector(const ConceptVector& vec,
                              const std::vector<std::string>& concepts);

struct ClassFingerprint {
  ClassLabel label = ClassLabel::kBefore;
  std::map<std::string, double> mean_frequencies;
  size_t members = 0;          // vectors contributing to the mean
  size_t empty_members = 0;    // members with no mass on the concepts
};

// Unweighted mean of member vectors per class, after restriction to the
// selected concepts. Classes with no contributing member come back with
// members == 0.
std::vector<ClassFingerprint> class_fingerprints(
    const std::map<std::string, ClassLabel>& labels_by_hashtag,
    const std::vector<ConceptVector>& vectors,
    const std::vector<std::string>& concepts);

struct WordCount {
  std::string word;
  int64_t count = 0;
};

// k most frequent preprocessed tokens, ties lexicographic.
std::vector<WordCount> top_words(const std::vector<std::string>& tokens,
                                 size_t k);

void write_concept_vectors_csv(const std::vector<ConceptVector>& vectors,
                               const std::string& path);
void write_fingerprints_json(const std::vector<ClassFingerprint>& fingerprints,
                             const std::vector<std::string>& concepts,
                             bool short_flagged, const std::string& path);

}  // namespace tagdyn

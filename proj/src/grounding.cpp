#include "tagdyn/grounding.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "tagdyn/porter.hpp"
#include "tagdyn/util.hpp"

namespace tagdyn {
namespace {

bool looks_like_url(const std::string& token) {
  if (token.find("://") != std::string::npos) return true;
  std::string low = to_lower(token);
  return low.rfind("www.", 0) == 0;
}

// First sense for the word across parts of speech, nouns first. Checks the
// raw form, then lemmatized candidates.
std::optional<SynsetId> resolve_token(const std::string& token,
                                      const Taxonomy& taxonomy) {
  static const Pos kOrder[] = {Pos::kNoun, Pos::kVerb, Pos::kAdj, Pos::kAdv};
  for (Pos pos : kOrder) {
    std::vector<std::string> lemmas = taxonomy.lemmatize(token, pos);
    if (!lemmas.empty()) return taxonomy.senses(lemmas.front(), pos).front();
  }
  return std::nullopt;
}

}  // namespace

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stop-word list " + path);
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = to_lower(trim(line));
    if (!w.empty()) words.insert(std::move(w));
  }
  return words;
}

std::vector<std::string> preprocess(std::string_view text,
                                    const StopwordSet& stopwords) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) break;
    std::string raw(text.substr(start, i - start));
    if (raw[0] == '@' || raw[0] == '#') continue;
    if (looks_like_url(raw)) continue;
    std::string clean;
    clean.reserve(raw.size());
    for (char ch : raw) {
      unsigned char c = static_cast<unsigned char>(ch);
      if (std::isalnum(c)) clean.push_back(static_cast<char>(std::tolower(c)));
    }
    if (clean.empty()) continue;
    if (stopwords.count(clean)) continue;
    out.push_back(std::move(clean));
  }
  return out;
}

GroundedTweet ground_tweet(std::string_view text, const Taxonomy& taxonomy,
                           const std::vector<LanguageProfile>& profiles,
                           const StopwordSet& stopwords,
                           const GroundingOptions& opts) {
  GroundedTweet result;
  std::vector<std::string> tokens = preprocess(text, stopwords);
  result.total_tokens = tokens.size();
  if (tokens.empty()) return result;

  for (const std::string& token : tokens) {
    std::optional<SynsetId> syn = resolve_token(token, taxonomy);
    if (!syn && opts.stem_fallback) {
      std::string stem = porter_stem(token);
      if (stem != token) syn = resolve_token(stem, taxonomy);
    }
    if (syn) {
      result.synsets.push_back(*syn);
      result.resolved.push_back(token);
    }
  }

  double fraction = static_cast<double>(result.resolved.size()) /
                    static_cast<double>(result.total_tokens);
  if (fraction < opts.resolve_threshold && !profiles.empty()) {
    bool english_ok = false;
    try {
      auto ranking = identify_language(text, profiles);
      english_ok = language_in_top(ranking, "english", opts.language_top_n);
    } catch (const DataError&) {
      english_ok = false;  // nothing identifiable in the text
    }
    if (!english_ok) {
      result.synsets.clear();
      result.resolved.clear();
      result.discarded = true;
    }
  }
  return result;
}

void ConceptCounts::add(const GroundedTweet& grounded,
                        const Taxonomy& taxonomy, int target_depth) {
  ++tweets_seen;
  if (grounded.discarded) {
    ++tweets_discarded;
    return;
  }
  tokens_resolved += grounded.synsets.size();
  for (SynsetId syn : grounded.synsets)
    for (SynsetId rolled : taxonomy.rollup(syn, target_depth))
      ++counts[taxonomy.concept_name(rolled)];
}

ConceptVector normalize_counts(const ConceptCounts& counts) {
  ConceptVector vec;
  vec.hashtag = counts.hashtag;
  int64_t total = 0;
  for (const auto& [name, c] : counts.counts) total += c;
  if (total == 0) return vec;
  for (const auto& [name, c] : counts.counts)
    vec.frequencies[name] =
        static_cast<double>(c) / static_cast<double>(total);
  return vec;
}

std::vector<std::string> select_top_concepts(
    const std::vector<ConceptCounts>& all, size_t k, bool* short_flagged) {
  std::map<std::string, int64_t> totals;
  for (const ConceptCounts& cc : all)
    for (const auto& [name, c] : cc.counts) totals[name] += c;
  std::vector<std::pair<std::string, int64_t>> order(totals.begin(),
                                                     totals.end());
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (short_flagged) *short_flagged = order.size() < k;
  if (order.size() > k) order.resize(k);
  std::vector<std::string> out;
  out.reserve(order.size());
  for (auto& [name, c] : order) out.push_back(std::move(name));
  return out;
}

ConceptVector restrict_vector(const ConceptVector& vec,
                              const std::vector<std::string>& concepts) {
  ConceptVector out;
  out.hashtag = vec.hashtag;
  double total = 0.0;
  for (const std::string& name : concepts) {
    auto it = vec.frequencies.find(name);
    if (it != vec.frequencies.end()) total += it->second;
  }
  if (total <= 0.0) return out;
  for (const std::string& name : concepts) {
    auto it = vec.frequencies.find(name);
    if (it != vec.frequencies.end())
      out.frequencies[name] = it->second / total;
  }
  return out;
}

std::vector<ClassFingerprint> class_fingerprints(
    const std::map<std::string, ClassLabel>& labels_by_hashtag,
    const std::vector<ConceptVector>& vectors,
    const std::vector<std::string>& concepts) {
  std::map<ClassLabel, ClassFingerprint> acc;
  for (ClassLabel label : {ClassLabel::kBefore, ClassLabel::kAfter,
                           ClassLabel::kSymmetric, ClassLabel::kPeakDay})
    acc[label].label = label;

  for (const ConceptVector& vec : vectors) {
    auto lit = labels_by_hashtag.find(vec.hashtag);
    if (lit == labels_by_hashtag.end()) continue;
    ClassFingerprint& fp = acc[lit->second];
    ConceptVector restricted = restrict_vector(vec, concepts);
    if (restricted.frequencies.empty()) {
      ++fp.empty_members;
      continue;
    }
    ++fp.members;
    for (const auto& [name, f] : restricted.frequencies)
      fp.mean_frequencies[name] += f;
  }
  std::vector<ClassFingerprint> out;
  for (auto& [label, fp] : acc) {
    if (fp.members > 0)
      for (auto& [name, f] : fp.mean_frequencies)
        f /= static_cast<double>(fp.members);
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<WordCount> top_words(const std::vector<std::string>& tokens,
                                 size_t k) {
  std::map<std::string, int64_t> counts;
  for (const std::string& t : tokens) ++counts[t];
  std::vector<WordCount> order;
  order.reserve(counts.size());
  for (auto& [word, c] : counts) order.push_back({word, c});
  std::sort(order.begin(), order.end(),
            [](const WordCount& x, const WordCount& y) {
              if (x.count != y.count) return x.count > y.count;
              return x.word < y.word;
            });
  if (order.size() > k) order.resize(k);
  return order;
}

void write_concept_vectors_csv(const std::vector<ConceptVector>& vectors,
                               const std::string& path) {
  std::string body = "hashtag,concept,frequency\n";
  for (const ConceptVector& vec : vectors)
    for (const auto& [name, f] : vec.frequencies) {
      body += vec.hashtag;
      body += ',';
      body += name;
      body += ',';
      body += format_double(f);
      body += '\n';
    }
  write_text_file(path, body);
}

void write_fingerprints_json(const std::vector<ClassFingerprint>& fingerprints,
                             const std::vector<std::string>& concepts,
                             bool short_flagged, const std::string& path) {
  nlohmann::json root;
  root["concepts"] = concepts;
  root["concept_list_short"] = short_flagged;
  nlohmann::json classes = nlohmann::json::object();
  for (const ClassFingerprint& fp : fingerprints) {
    nlohmann::json entry;
    entry["members"] = fp.members;
    entry["empty_members"] = fp.empty_members;
    nlohmann::json freq = nlohmann::json::object();
    for (const auto& [name, f] : fp.mean_frequencies) freq[name] = f;
    entry["mean_frequencies"] = std::move(freq);
    classes[std::string(class_label_name(fp.label))] = std::move(entry);
  }
  root["classes"] = std::move(classes);
  write_text_file(path, root.dump(2) + "\n");
}

}  // namespace tagdyn

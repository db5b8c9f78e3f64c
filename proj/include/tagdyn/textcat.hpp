// Character n-gram language identification (Cavnar & Trenkle style):
// rank profiles of 1..5-grams compared by out-of-place distance.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tagdyn {

struct LanguageProfile {
  std::string name;
  std::vector<std::string> grams;                 // rank order, best first
  std::unordered_map<std::string, size_t> rank;   // gram -> 0-based rank

  size_t size() const { return grams.size(); }
};

inline constexpr size_t kDefaultProfileSize = 400;

// Counts padded character n-grams (n = 1..5) of the text. Letters and
// non-ASCII bytes form tokens; every other byte separates them. Tokens are
// padded with a single '_' on each side; all-underscore grams are skipped.
std::unordered_map<std::string, int64_t> count_ngrams(std::string_view text);

// Top max_grams n-grams by descending count, ties broken lexicographically.
LanguageProfile build_profile(std::string name, std::string_view text,
                              size_t max_grams = kDefaultProfileSize);

LanguageProfile profile_from_grams(std::string name,
                                   std::vector<std::string> grams);

void save_profile(const LanguageProfile& profile, const std::string& path);
LanguageProfile load_profile(std::string name, const std::string& path);

// Loads every "<language>.profile" file in dir; result sorted by language
// name so the set is independent of directory iteration order.
std::vector<LanguageProfile> load_profiles(const std::string& dir);

// Out-of-place distance between a text profile and a language profile.
// Grams missing from the language profile cost the penalty (the language
// profile's size).
int64_t out_of_place_distance(const LanguageProfile& text,
                              const LanguageProfile& language);

struct LanguageScore {
  std::string name;
  int64_t distance = 0;
};

// All languages ordered by ascending distance, ties by name. Throws
// DataError when the text yields no n-grams or no profiles are given.
std::vector<LanguageScore> identify_language(
    std::string_view text, const std::vector<LanguageProfile>& profiles);

// True when `language` appears within the first top_n entries of ranking.
bool language_in_top(const std::vector<LanguageScore>& ranking,
                     std::string_view language, size_t top_n);

}  // namespace tagdyn

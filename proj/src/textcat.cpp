#include "tagdyn/textcat.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "tagdyn/util.hpp"

namespace tagdyn {
namespace {

// Letters and non-ASCII bytes carry language signal; everything else
// separates tokens.
bool is_word_byte(unsigned char c) {
  return std::isalpha(c) || c >= 0x80;
}

bool all_underscores(std::string_view s) {
  return s.find_first_not_of('_') == std::string_view::npos;
}

}  // namespace

std::unordered_map<std::string, int64_t> count_ngrams(std::string_view text) {
  std::unordered_map<std::string, int64_t> counts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string padded = "_" + token + "_";
    for (size_t n = 1; n <= 5; ++n) {
      if (padded.size() < n) break;
      for (size_t i = 0; i + n <= padded.size(); ++i) {
        std::string_view gram(padded.data() + i, n);
        if (all_underscores(gram)) continue;
        ++counts[std::string(gram)];
      }
    }
    token.clear();
  };
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (is_word_byte(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return counts;
}

LanguageProfile build_profile(std::string name, std::string_view text,
                              size_t max_grams) {
  auto counts = count_ngrams(text);
  std::vector<std::pair<std::string, int64_t>> order(counts.begin(),
                                                     counts.end());
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (order.size() > max_grams) order.resize(max_grams);
  std::vector<std::string> grams;
  grams.reserve(order.size());
  for (auto& [gram, cnt] : order) grams.push_back(std::move(gram));
  return profile_from_grams(std::move(name), std::move(grams));
}

LanguageProfile profile_from_grams(std::string name,
                                   std::vector<std::string> grams) {
  LanguageProfile p;
  p.name = std::move(name);
  p.grams = std::move(grams);
  p.rank.reserve(p.grams.size());
  for (size_t i = 0; i < p.grams.size(); ++i) {
    auto [it, inserted] = p.rank.emplace(p.grams[i], i);
    if (!inserted)
      throw DataError("profile '" + p.name + "': duplicate n-gram '" +
                      p.grams[i] + "'");
  }
  return p;
}

void save_profile(const LanguageProfile& profile, const std::string& path) {
  std::string body;
  for (const std::string& g : profile.grams) {
    body += g;
    body += '\n';
  }
  write_text_file(path, body);
}

LanguageProfile load_profile(std::string name, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open profile " + path);
  std::vector<std::string> grams;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    grams.push_back(line);
  }
  if (grams.empty()) throw DataError("empty profile " + path);
  return profile_from_grams(std::move(name), std::move(grams));
}

std::vector<LanguageProfile> load_profiles(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw DataError("profile directory not found: " + dir);
  std::vector<LanguageProfile> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    fs::path p = entry.path();
    if (p.extension() != ".profile") continue;
    out.push_back(load_profile(p.stem().string(), p.string()));
  }
  if (out.empty()) throw DataError("no .profile files in " + dir);
  std::sort(out.begin(), out.end(),
            [](const LanguageProfile& x, const LanguageProfile& y) {
              return x.name < y.name;
            });
  return out;
}

int64_t out_of_place_distance(const LanguageProfile& text,
                              const LanguageProfile& language) {
  const int64_t penalty = static_cast<int64_t>(language.size());
  int64_t total = 0;
  for (size_t i = 0; i < text.grams.size(); ++i) {
    auto it = language.rank.find(text.grams[i]);
    if (it == language.rank.end()) {
      total += penalty;
    } else {
      int64_t delta = static_cast<int64_t>(i) - static_cast<int64_t>(it->second);
      total += delta < 0 ? -delta : delta;
    }
  }
  return total;
}

std::vector<LanguageScore> identify_language(
    std::string_view text, const std::vector<LanguageProfile>& profiles) {
  if (profiles.empty()) throw DataError("no language profiles loaded");
  LanguageProfile doc = build_profile("", text);
  if (doc.grams.empty())
    throw DataError("no n-grams extractable from text");
  std::vector<LanguageScore> scores;
  scores.reserve(profiles.size());
  for (const LanguageProfile& lang : profiles)
    scores.push_back({lang.name, out_of_place_distance(doc, lang)});
  std::sort(scores.begin(), scores.end(),
            [](const LanguageScore& x, const LanguageScore& y) {
              if (x.distance != y.distance) return x.distance < y.distance;
              return x.name < y.name;
            });
  return scores;
}

bool language_in_top(const std::vector<LanguageScore>& ranking,
                     std::string_view language, size_t top_n) {
  size_t limit = std::min(top_n, ranking.size());
  for (size_t i = 0; i < limit; ++i)
    if (ranking[i].name == language) return true;
  return false;
}

}  // namespace tagdyn

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tagdyn/textcat.hpp"
#include "tagdyn/util.hpp"

using namespace tagdyn;

namespace {

// Shipped with the repo; tests run from the source root.
const char* kProfilesDir = "data/profiles";
const char* kEnglishSample = "data/lang_samples/english.txt";

const char* kEnglishParagraph =
    "The committee will meet on Thursday to review the annual budget and "
    "discuss plans for the new library building, which residents have "
    "requested for years and which the council finally approved last month.";

const char* kSpanishTweet =
    "menuda tormenta está cayendo ahora mismo, llueve a cántaros y también "
    "graniza, jamás vi lluvia igual, id con cuidado si salís a la calle, "
    "árboles caídos y señales rotas por cada esquina, según anuncian "
    "seguirán los relámpagos durante la madrugada";

}  // namespace

TEST_CASE("n-gram counts of a tiny text, by hand") {
  auto counts = count_ngrams("Go go!");
  // Both tokens lower-case to "go": padded "_go_" twice.
  std::unordered_map<std::string, int64_t> want = {
      {"g", 2},   {"o", 2},   {"_g", 2},  {"go", 2},
      {"o_", 2},  {"_go", 2}, {"go_", 2}, {"_go_", 2},
  };
  CHECK(counts == want);
}

TEST_CASE("multi-byte characters are counted bytewise") {
  auto counts = count_ngrams("\xc3\xa9");  // a single two-byte letter
  CHECK(counts.size() == 8);
  CHECK(counts.at("\xc3") == 1);
  CHECK(counts.at("\xc3\xa9") == 1);
  CHECK(counts.at("_\xc3\xa9_") == 1);
  CHECK(counts.count("_") == 0);
}

TEST_CASE("digits and punctuation separate tokens") {
  auto counts = count_ngrams("ab1ab");
  CHECK(counts.at("ab") == 2);
  CHECK(counts.at("_ab_") == 2);
  CHECK(counts.count("1") == 0);
  CHECK(counts.count("b1a") == 0);
}

TEST_CASE("profile order: count desc, then gram bytes asc") {
  // "ba" once, "ab" twice -> grams of "ab" dominate; ties broken by bytes.
  LanguageProfile p = build_profile("t", "ab ab ba", 6);
  REQUIRE(p.size() == 6);
  CHECK(p.grams[0] == "a");  // a and b appear 3 times each; 'a' sorts first
  CHECK(p.grams[1] == "b");
  // The remaining 2-counts in byte order ('_' sorts before letters):
  // _a, _ab, _ab_, ab, ab_, b_ — truncated at six.
  CHECK(p.grams[2] == "_a");
  CHECK(p.grams[3] == "_ab");
  CHECK(p.grams[4] == "_ab_");
  CHECK(p.grams[5] == "ab");
  CHECK(p.rank.at("a") == 0);
}

TEST_CASE("truncation keeps exactly max_grams") {
  LanguageProfile p = build_profile("t", "the quick brown fox", 10);
  CHECK(p.size() == 10);
}

TEST_CASE("out-of-place distance, by hand") {
  LanguageProfile lang = profile_from_grams("l", {"a", "b", "c"});
  LanguageProfile doc = profile_from_grams("", {"b", "d"});
  // b: |0-1| = 1; d unknown: penalty 3.
  CHECK(out_of_place_distance(doc, lang) == 4);
  CHECK(out_of_place_distance(doc, doc) == 0);
}

TEST_CASE("duplicate gram in a profile is rejected") {
  CHECK_THROWS_AS(profile_from_grams("x", {"a", "a"}), DataError);
}

TEST_CASE("save and load round-trip") {
  LanguageProfile p = build_profile("roundtrip", "some sample text here");
  std::string path = "build/test_roundtrip.profile";
  save_profile(p, path);
  LanguageProfile q = load_profile("roundtrip", path);
  CHECK(p.grams == q.grams);
  std::remove(path.c_str());
}

TEST_CASE("bundled profile directory loads sorted and complete") {
  std::vector<LanguageProfile> profiles = load_profiles(kProfilesDir);
  REQUIRE(profiles.size() >= 20);
  CHECK(std::is_sorted(profiles.begin(), profiles.end(),
                       [](const LanguageProfile& x, const LanguageProfile& y) {
                         return x.name < y.name;
                       }));
  for (const LanguageProfile& p : profiles) CHECK(p.size() == 400);
  bool has_english = false;
  for (const LanguageProfile& p : profiles) has_english |= p.name == "english";
  CHECK(has_english);
}

TEST_CASE("English paragraph identifies as english") {
  std::vector<LanguageProfile> profiles = load_profiles(kProfilesDir);
  auto ranking = identify_language(kEnglishParagraph, profiles);
  REQUIRE(!ranking.empty());
  CHECK(ranking[0].name == "english");
  CHECK(language_in_top(ranking, "english", 1));
}

TEST_CASE("text identical to a training corpus wins with minimal distance") {
  std::vector<LanguageProfile> profiles = load_profiles(kProfilesDir);
  std::string corpus = read_text_file(kEnglishSample);
  auto ranking = identify_language(corpus, profiles);
  REQUIRE(!ranking.empty());
  CHECK(ranking[0].name == "english");
  // The corpus reproduces its own profile exactly, so distance is zero.
  CHECK(ranking[0].distance == 0);
  CHECK(ranking[1].distance > 0);
}

TEST_CASE("Spanish tweet leaves english outside the top ten") {
  std::vector<LanguageProfile> profiles = load_profiles(kProfilesDir);
  auto ranking = identify_language(kSpanishTweet, profiles);
  CHECK(ranking[0].name == "spanish");
  CHECK(!language_in_top(ranking, "english", 10));
}

TEST_CASE("single shared character ties break on language name") {
  std::vector<LanguageProfile> profiles = {
      profile_from_grams("bb", {"x", "p"}),
      profile_from_grams("aa", {"x", "q"}),
      profile_from_grams("cc", {"x", "r"}),
  };
  auto ranking = identify_language("x", profiles);
  REQUIRE(ranking.size() == 3);
  // Doc profile is {x, _x, x_, _x_}; every language scores identically.
  CHECK(ranking[0].distance == ranking[2].distance);
  CHECK(ranking[0].name == "aa");
  CHECK(ranking[1].name == "bb");
  CHECK(ranking[2].name == "cc");
}

TEST_CASE("ranking is invariant under profile order") {
  std::vector<LanguageProfile> profiles = load_profiles(kProfilesDir);
  auto base = identify_language(kEnglishParagraph, profiles);
  std::mt19937 rng(7);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(profiles.begin(), profiles.end(), rng);
    auto shuffled = identify_language(kEnglishParagraph, profiles);
    REQUIRE(shuffled.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) {
      CHECK(shuffled[i].name == base[i].name);
      CHECK(shuffled[i].distance == base[i].distance);
    }
  }
}

TEST_CASE("degenerate inputs throw") {
  std::vector<LanguageProfile> profiles = {profile_from_grams("l", {"a"})};
  CHECK_THROWS_AS(identify_language("1234 ...", profiles), DataError);
  CHECK_THROWS_AS(identify_language("abc", {}), DataError);
}

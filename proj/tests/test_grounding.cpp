#include <doctest.h>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "tagdyn/grounding.hpp"
#include "tagdyn/util.hpp"

using namespace tagdyn;

namespace {

const char* kWordnetDir = "data/wordnet";
const char* kStopwords = "data/stopwords.txt";
const char* kProfilesDir = "data/profiles";

// Same Spanish text the language-identification tests pin down: english is
// far outside the top 10 against the bundled profiles.
const char* kSpanishTweet =
    "menuda tormenta está cayendo ahora mismo, llueve a cántaros y también "
    "graniza, jamás vi lluvia igual, id con cuidado si salís a la calle, "
    "árboles caídos y señales rotas por cada esquina, según anuncian "
    "seguirán los relámpagos durante la madrugada";

const Taxonomy& taxonomy() {
  static Taxonomy t = Taxonomy::load(kWordnetDir);
  return t;
}

const StopwordSet& stopwords() {
  static StopwordSet s = load_stopwords(kStopwords);
  return s;
}

const std::vector<LanguageProfile>& profiles() {
  static std::vector<LanguageProfile> p = load_profiles(kProfilesDir);
  return p;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("stop-word list loading") {
  const auto& sw = stopwords();
  CHECK(sw.size() > 100);
  CHECK(sw.count("the") == 1);
  CHECK(sw.count("rt") == 1);
  CHECK(sw.count("committee") == 0);
  CHECK_THROWS_AS(load_stopwords("data/no_such_list.txt"), DataError);
}

TEST_CASE("tweet preprocessing") {
  const auto& sw = stopwords();

  CHECK(preprocess("RT @bob check http://x.io #oscars tonight", sw) ==
        std::vector<std::string>{"check", "tonight"});
  CHECK(preprocess("@a @b #c", sw).empty());
  CHECK(preprocess("The the THE", sw).empty());
  CHECK(preprocess("", sw).empty());
  CHECK(preprocess("visit www.example.com or HTTPS://y.z now", sw) ==
        std::vector<std::string>{"visit"});
  CHECK(preprocess("Don't STOP-me!!!", sw) == std::vector<std::string>{"stopme"});
  CHECK(preprocess("season2 finale", sw) ==
        std::vector<std::string>{"season2", "finale"});

  SUBCASE("idempotent on its own output") {
    const char* texts[] = {
        "RT @bob check http://x.io #oscars tonight",
        "Mixed CASE words, punctuation; and @names #tags",
        "plain simple words only",
        "12 numbers 34 and www.links.org",
    };
    for (const char* text : texts) {
      auto once = preprocess(text, sw);
      CHECK(preprocess(join(once), sw) == once);
    }
  }
}

TEST_CASE("tweet grounding") {
  GroundingOptions opts;

  SUBCASE("stop words only") {
    auto g = ground_tweet("the and of", taxonomy(), profiles(), stopwords(), opts);
    CHECK(g.total_tokens == 0);
    CHECK(g.synsets.empty());
    CHECK_FALSE(g.discarded);
  }

  SUBCASE("everyday english resolves across parts of speech") {
    auto g = ground_tweet("watching the concert with my dog tonight", taxonomy(),
                          profiles(), stopwords(), opts);
    CHECK(g.total_tokens == 4);
    CHECK(g.resolved ==
          std::vector<std::string>{"watching", "concert", "dog", "tonight"});
    REQUIRE(g.synsets.size() == 4);
    CHECK(taxonomy().concept_name(g.synsets[2]) == "dog");
    CHECK_FALSE(g.discarded);
  }

  SUBCASE("exactly half resolving stays below the gate") {
    auto g = ground_tweet("dog zzzzqqq", taxonomy(), profiles(), stopwords(), opts);
    CHECK(g.total_tokens == 2);
    CHECK(g.resolved == std::vector<std::string>{"dog"});
    CHECK_FALSE(g.discarded);
  }

  SUBCASE("the stem fallback rescues inflections morphology misses") {
    auto g = ground_tweet("dogged", taxonomy(), profiles(), stopwords(), opts);
    REQUIRE(g.synsets.size() == 1);
    CHECK(taxonomy().concept_name(g.synsets[0]) == "dog");

    GroundingOptions no_stem = opts;
    no_stem.stem_fallback = false;
    auto h = ground_tweet("dogged", taxonomy(), {}, stopwords(), no_stem);
    CHECK(h.synsets.empty());
    CHECK_FALSE(h.discarded);  // no profiles, no gate
  }

  SUBCASE("a spanish tweet is discarded by the language gate") {
    auto g = ground_tweet(kSpanishTweet, taxonomy(), profiles(), stopwords(), opts);
    CHECK(g.discarded);
    CHECK(g.synsets.empty());
  }

  SUBCASE("unresolved but english text passes the gate") {
    auto g = ground_tweet(
        "crowd budget library resident year month plan review reviews dog",
        taxonomy(), profiles(), stopwords(), opts);
    CHECK(g.total_tokens == 10);
    CHECK(g.resolved == std::vector<std::string>{"dog"});
    CHECK_FALSE(g.discarded);
  }

  SUBCASE("without profiles the gate never fires") {
    auto g = ground_tweet(kSpanishTweet, taxonomy(), {}, stopwords(), opts);
    CHECK_FALSE(g.discarded);
  }

  SUBCASE("unidentifiable text is discarded when unresolved") {
    auto g = ground_tweet("12345 67890", taxonomy(), profiles(), stopwords(), opts);
    CHECK(g.total_tokens == 2);
    CHECK(g.discarded);
  }

  SUBCASE("a zero-language budget discards anything below the threshold") {
    GroundingOptions strict = opts;
    strict.language_top_n = 0;
    auto g = ground_tweet("crowd budget library plan", taxonomy(), profiles(),
                          stopwords(), strict);
    CHECK(g.discarded);
  }
}

TEST_CASE("concept counting and normalization") {
  GroundingOptions opts;
  ConceptCounts cc;
  cc.hashtag = "show";

  auto g1 = ground_tweet("watching the concert with my dog tonight", taxonomy(),
                         profiles(), stopwords(), opts);
  cc.add(g1, taxonomy(), 4);
  // concert -> social_event, dog -> living_thing; the verb and adverb senses
  // carry no noun ancestry here.
  CHECK(cc.counts.at("social_event") == 1);
  CHECK(cc.counts.at("living_thing") == 1);
  CHECK(cc.counts.size() == 2);
  CHECK(cc.tweets_seen == 1);
  CHECK(cc.tokens_resolved == 4);

  // A verb with a derivational noun link contributes through it.
  auto g2 = ground_tweet("announce", taxonomy(), profiles(), stopwords(), opts);
  REQUIRE(g2.synsets.size() == 1);
  cc.add(g2, taxonomy(), 4);
  CHECK(cc.counts.at("message") == 1);

  // Discarded tweets are tallied but contribute nothing.
  auto g3 = ground_tweet(kSpanishTweet, taxonomy(), profiles(), stopwords(), opts);
  cc.add(g3, taxonomy(), 4);
  CHECK(cc.tweets_discarded == 1);
  CHECK(cc.counts.size() == 3);

  auto vec = normalize_counts(cc);
  CHECK(vec.hashtag == "show");
  double sum = 0.0;
  for (const auto& [name, f] : vec.frequencies) sum += f;
  CHECK(std::abs(sum - 1.0) <= 1e-9);
  CHECK(vec.frequencies.at("social_event") == doctest::Approx(1.0 / 3.0));

  ConceptCounts empty;
  CHECK(normalize_counts(empty).frequencies.empty());
}

TEST_CASE("top concept selection") {
  auto counts_of = [](const char* tag,
                      std::initializer_list<std::pair<const char*, int64_t>> cs) {
    ConceptCounts cc;
    cc.hashtag = tag;
    for (const auto& [name, c] : cs) cc.counts[name] = c;
    return cc;
  };

  SUBCASE("descending totals across hashtags") {
    std::vector<ConceptCounts> all = {
        counts_of("t1", {{"act", 6}, {"food", 9}, {"part", 2}}),
        counts_of("t2", {{"act", 4}, {"quality", 8}, {"part", 1}}),
    };
    bool flagged = true;
    auto top = select_top_concepts(all, 3, &flagged);
    CHECK_FALSE(flagged);
    CHECK(top == std::vector<std::string>{"act", "food", "quality"});
  }

  SUBCASE("tie at the cut goes to the lexicographic winner") {
    std::vector<ConceptCounts> all = {
        counts_of("t", {{"zeta", 5}, {"alpha", 5}, {"mid", 9}})};
    auto top = select_top_concepts(all, 2, nullptr);
    CHECK(top == std::vector<std::string>{"mid", "alpha"});
  }

  SUBCASE("short corpora are flagged") {
    std::vector<ConceptCounts> all = {counts_of("t", {{"only", 1}})};
    bool flagged = false;
    auto top = select_top_concepts(all, 15, &flagged);
    CHECK(flagged);
    CHECK(top == std::vector<std::string>{"only"});
  }
}

TEST_CASE("vector restriction") {
  ConceptVector v;
  v.hashtag = "t";
  v.frequencies = {{"x", 0.5}, {"y", 0.3}, {"z", 0.2}};

  auto r = restrict_vector(v, {"x", "y"});
  CHECK(r.frequencies.at("x") == doctest::Approx(0.625));
  CHECK(r.frequencies.at("y") == doctest::Approx(0.375));
  CHECK(r.frequencies.count("z") == 0);
  double sum = 0.0;
  for (const auto& [name, f] : r.frequencies) sum += f;
  CHECK(std::abs(sum - 1.0) <= 1e-12);

  CHECK(restrict_vector(v, {"absent"}).frequencies.empty());
}

TEST_CASE("class fingerprints") {
  auto vec = [](const char* tag,
                std::initializer_list<std::pair<const char*, double>> fs) {
    ConceptVector v;
    v.hashtag = tag;
    for (const auto& [name, f] : fs) v.frequencies[name] = f;
    return v;
  };
  std::map<std::string, ClassLabel> labels = {
      {"b1", ClassLabel::kBefore},
      {"b2", ClassLabel::kBefore},
      {"a1", ClassLabel::kAfter},
      {"p1", ClassLabel::kPeakDay},
  };
  std::vector<ConceptVector> vectors = {
      vec("b1", {{"x", 0.8}, {"y", 0.2}}),
      vec("b2", {{"x", 0.4}, {"y", 0.6}}),
      vec("a1", {{"y", 1.0}}),
      vec("p1", {{"z", 1.0}}),       // no mass on the selected concepts
      vec("stray", {{"x", 1.0}}),    // unlabeled, ignored
  };
  auto fps = class_fingerprints(labels, vectors, {"x", "y"});
  REQUIRE(fps.size() == 4);

  auto find = [&](ClassLabel want) -> const ClassFingerprint& {
    for (const auto& fp : fps)
      if (fp.label == want) return fp;
    throw std::logic_error("label missing");
  };

  const auto& before = find(ClassLabel::kBefore);
  CHECK(before.members == 2);
  CHECK(before.mean_frequencies.at("x") == doctest::Approx(0.6));
  CHECK(before.mean_frequencies.at("y") == doctest::Approx(0.4));

  const auto& after = find(ClassLabel::kAfter);
  CHECK(after.members == 1);
  CHECK(after.mean_frequencies.at("y") == doctest::Approx(1.0));

  const auto& peak = find(ClassLabel::kPeakDay);
  CHECK(peak.members == 0);
  CHECK(peak.empty_members == 1);

  const auto& sym = find(ClassLabel::kSymmetric);
  CHECK(sym.members == 0);
  CHECK(sym.empty_members == 0);
}

TEST_CASE("frequent-word ranking") {
  std::vector<std::string> tokens = {"z", "y", "y", "x", "x", "x"};
  auto top = top_words(tokens, 2);
  REQUIRE(top.size() == 2);
  CHECK(top[0].word == "x");
  CHECK(top[0].count == 3);
  CHECK(top[1].word == "y");

  auto tied = top_words({"beta", "alpha"}, 5);
  REQUIRE(tied.size() == 2);
  CHECK(tied[0].word == "alpha");  // equal counts, lexicographic

  CHECK(top_words({}, 10).empty());
}

TEST_CASE("semantic output files") {
  ConceptVector v;
  v.hashtag = "t";
  v.frequencies = {{"act", 0.25}, {"food", 0.75}};
  write_concept_vectors_csv({v}, "build/test_concepts.csv");
  CsvReader reader("build/test_concepts.csv");
  CHECK(reader.header() == "hashtag,concept,frequency");
  std::vector<std::string> f;
  size_t rows = 0;
  while (reader.next(f)) {
    REQUIRE(f.size() == 3);
    CHECK(f[0] == "t");
    ++rows;
  }
  CHECK(rows == 2);

  ClassFingerprint fp;
  fp.label = ClassLabel::kBefore;
  fp.members = 1;
  fp.mean_frequencies = {{"act", 1.0}};
  write_fingerprints_json({fp}, {"act"}, false, "build/test_fingerprints.json");
  auto text = read_text_file("build/test_fingerprints.json");
  CHECK(text.find("\"Before\"") != std::string::npos);
  CHECK(text.find("\"act\"") != std::string::npos);
}

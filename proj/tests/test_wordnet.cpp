#include "tagdyn/wordnet.hpp"

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "tagdyn/util.hpp"

using namespace tagdyn;
namespace fs = std::filesystem;

namespace {

const Taxonomy& bundled() {
  static Taxonomy t = Taxonomy::load("data/wordnet");
  return t;
}

struct TempLexicon {
  fs::path dir;
  TempLexicon() {
    dir = fs::temp_directory_path() /
          ("wn_fixture_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter()++));
    fs::create_directories(dir);
  }
  ~TempLexicon() { fs::remove_all(dir); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  void file(const std::string& name, const std::string& content) {
    std::ofstream out(dir / name);
    out << content;
  }
  std::string path() const { return dir.string(); }
};

// A 3-synset noun chain: alpha <- beta <- gamma.
void write_tiny(TempLexicon& lex) {
  lex.file("data.noun",
           "00000001 03 n 01 alpha 0 000 | the top\n"
           "00000002 03 n 01 beta 0 001 @ 00000001 n 0000 | the middle\n"
           "00000003 03 n 02 gamma 0 gam 1 001 @ 00000002 n 0000 | the leaf\n");
  lex.file("index.noun",
           "alpha n 1 0 1 0 00000001\n"
           "beta n 1 1 @ 1 0 00000002\n"
           "gamma n 1 1 @ 1 0 00000003\n"
           "gam n 1 1 @ 1 0 00000003\n");
}

}  // namespace

TEST_CASE("tiny fixture loads and resolves") {
  TempLexicon lex;
  write_tiny(lex);
  Taxonomy t = Taxonomy::load(lex.path());
  CHECK(t.stats().synsets == 3);
  CHECK(t.depth({Pos::kNoun, 1}) == 1);
  CHECK(t.depth({Pos::kNoun, 2}) == 2);
  CHECK(t.depth({Pos::kNoun, 3}) == 3);
  CHECK(t.senses("gamma", Pos::kNoun).size() == 1);
  CHECK(t.senses("gam", Pos::kNoun).front().offset == 3);
  CHECK(t.concept_name({Pos::kNoun, 3}) == "gamma");
  auto roll = t.rollup({Pos::kNoun, 3}, 2);
  REQUIRE(roll.size() == 1);
  CHECK(roll[0].offset == 2);
  // Roll-up to the synset's own depth is the synset itself.
  roll = t.rollup({Pos::kNoun, 3}, 3);
  REQUIRE(roll.size() == 1);
  CHECK(roll[0].offset == 3);
  // Deeper than the synset: nothing.
  CHECK(t.rollup({Pos::kNoun, 1}, 2).empty());
}

TEST_CASE("header lines and glosses") {
  TempLexicon lex;
  lex.file("data.noun",
           "  1 preamble line one\n"
           "  2 preamble line two\n"
           "00000001 03 n 01 alpha 0 000 | a gloss | with a bar\n");
  lex.file("index.noun",
           "  1 preamble\n"
           "alpha n 1 0 1 0 00000001\n");
  Taxonomy t = Taxonomy::load(lex.path());
  CHECK(t.require({Pos::kNoun, 1}).gloss == "a gloss | with a bar");
}

TEST_CASE("duplicate offsets rejected") {
  TempLexicon lex;
  lex.file("data.noun",
           "00000001 03 n 01 alpha 0 000 | one\n"
           "00000001 03 n 01 beta 0 000 | two\n");
  lex.file("index.noun", "alpha n 1 0 1 0 00000001\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
}

TEST_CASE("dangling hypernym rejected") {
  TempLexicon lex;
  lex.file("data.noun",
           "00000001 03 n 01 alpha 0 001 @ 00000099 n 0000 | points nowhere\n");
  lex.file("index.noun", "alpha n 1 1 @ 1 0 00000001\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
}

TEST_CASE("hypernym cycle rejected") {
  TempLexicon lex;
  lex.file("data.noun",
           "00000001 03 n 01 alpha 0 001 @ 00000002 n 0000 | a\n"
           "00000002 03 n 01 beta 0 001 @ 00000001 n 0000 | b\n");
  lex.file("index.noun",
           "alpha n 1 1 @ 1 0 00000001\n"
           "beta n 1 1 @ 1 0 00000002\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
}

TEST_CASE("index referencing a missing synset rejected") {
  TempLexicon lex;
  lex.file("data.noun", "00000001 03 n 01 alpha 0 000 | one\n");
  lex.file("index.noun", "alpha n 2 0 2 0 00000001 00000042\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
}

TEST_CASE("noun database is mandatory") {
  TempLexicon lex;
  lex.file("data.verb", "00000001 30 v 01 walk 0 000 01 + 02 00 | move\n");
  lex.file("index.verb", "walk v 1 0 1 0 00000001\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
  TempLexicon empty;
  CHECK_THROWS_AS(Taxonomy::load(empty.path()), DataError);
}

TEST_CASE("truncated synset line rejected") {
  TempLexicon lex;
  lex.file("data.noun", "00000001 03 n 02 alpha 0 000 | claims two words\n");
  lex.file("index.noun", "alpha n 1 0 1 0 00000001\n");
  CHECK_THROWS_AS(Taxonomy::load(lex.path()), DataError);
}

TEST_CASE("depth is a noun-only notion") {
  CHECK_THROWS_AS(bundled().depth(bundled().senses("walk", Pos::kVerb).front()),
                  DataError);
}

TEST_CASE("bundled lexicon loads with sane stats") {
  const Taxonomy& t = bundled();
  CHECK(t.stats().synsets == 826);
  CHECK(t.stats().noun_synsets == 714);
  CHECK(t.stats().max_noun_depth >= 6);
  CHECK(t.senses("entity", Pos::kNoun).size() == 1);
}

TEST_CASE("bundled noun depths match the generator's traversal") {
  const Taxonomy& t = bundled();
  std::ifstream in("tests/data/wordnet_depths.tsv");
  REQUIRE(in.good());
  std::string line;
  size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    uint32_t offset;
    int expected;
    std::string lemma;
    ss >> offset >> expected >> lemma;
    REQUIRE(ss);
    SynsetId id{Pos::kNoun, offset};
    CHECK(t.depth(id) == expected);
    CHECK(t.concept_name(id) == lemma);
    ++rows;
  }
  CHECK(rows == 714);
}

TEST_CASE("bundled depth-4 roll-ups match the generator's closure") {
  const Taxonomy& t = bundled();
  std::ifstream in("tests/data/wordnet_rollup4.tsv");
  REQUIRE(in.good());
  std::string line;
  size_t rows = 0;
  while (std::getline(in, line)) {
    size_t tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    uint32_t offset = static_cast<uint32_t>(std::stoul(line.substr(0, tab)));
    std::string want = line.substr(tab + 1);
    std::vector<SynsetId> roll = t.rollup({Pos::kNoun, offset}, 4);
    std::string got;
    std::vector<std::string> names;
    for (SynsetId id : roll) names.push_back(t.concept_name(id));
    std::sort(names.begin(), names.end());
    for (size_t i = 0; i < names.size(); ++i)
      got += (i ? "," : "") + names[i];
    CHECK(got == want);
    ++rows;
  }
  CHECK(rows == 714);
}

TEST_CASE("every bundled noun reaches the root") {
  // load() would have thrown otherwise; check the bookkeeping agrees.
  const Taxonomy& t = bundled();
  CHECK(t.stats().noun_synsets == 714);
  for (const auto& [id, syn] : t.synsets()) {
    if (id.pos != Pos::kNoun) continue;
    CHECK(t.depth(id) >= 1);
  }
}

TEST_CASE("lemmatizer: identity, exceptions, detachment") {
  const Taxonomy& t = bundled();
  CHECK(t.lemmatize("dog", Pos::kNoun) == std::vector<std::string>{"dog"});
  CHECK(t.lemmatize("dogs", Pos::kNoun) == std::vector<std::string>{"dog"});
  CHECK(t.lemmatize("children", Pos::kNoun) == std::vector<std::string>{"child"});
  CHECK(t.lemmatize("feet", Pos::kNoun) == std::vector<std::string>{"foot"});
  CHECK(t.lemmatize("boxes", Pos::kNoun) == std::vector<std::string>{"box"});
  CHECK(t.lemmatize("ladies", Pos::kNoun) == std::vector<std::string>{"lady"});
  CHECK(t.lemmatize("axes", Pos::kNoun) ==
        std::vector<std::string>{"ax", "axe"});
  CHECK(t.lemmatize("wolves", Pos::kNoun) == std::vector<std::string>{"wolf"});
  CHECK(t.lemmatize("men", Pos::kNoun) == std::vector<std::string>{"man"});
  CHECK(t.lemmatize("xyzzy", Pos::kNoun).empty());
  // The candidate must exist in the index to be kept.
  CHECK(t.lemmatize("blisses", Pos::kNoun).empty());

  CHECK(t.lemmatize("ran", Pos::kVerb) == std::vector<std::string>{"run"});
  CHECK(t.lemmatize("running", Pos::kVerb) == std::vector<std::string>{"run"});
  CHECK(t.lemmatize("watches", Pos::kVerb) == std::vector<std::string>{"watch"});
  CHECK(t.lemmatize("announced", Pos::kVerb) ==
        std::vector<std::string>{"announce"});
  CHECK(t.lemmatize("plays", Pos::kVerb) == std::vector<std::string>{"play"});

  CHECK(t.lemmatize("better", Pos::kAdj) == std::vector<std::string>{"good"});
  CHECK(t.lemmatize("faster", Pos::kAdj) == std::vector<std::string>{"fast"});
  CHECK(t.lemmatize("biggest", Pos::kAdj).empty());  // doubled consonant
}

TEST_CASE("sense order puts planted senses first") {
  const Taxonomy& t = bundled();
  auto first_rollup = [&](const std::string& lemma) {
    const auto& senses = t.senses(lemma, Pos::kNoun);
    REQUIRE(!senses.empty());
    std::vector<SynsetId> roll = t.rollup(senses.front(), 4);
    REQUIRE(roll.size() == 1);
    return t.concept_name(roll[0]);
  };
  CHECK(first_rollup("broadcast") == "broadcast");
  CHECK(t.senses("broadcast", Pos::kNoun).size() == 3);
  CHECK(first_rollup("storm") == "happening");
  CHECK(first_rollup("game") == "social_event");
  CHECK(first_rollup("screen") == "artifact");
  CHECK(first_rollup("laptop") == "artifact");
  CHECK(first_rollup("telecast") == "broadcast");
  CHECK(first_rollup("earthquake") == "happening");
}

TEST_CASE("multi-parent nouns use the shortest path and merged roll-ups") {
  const Taxonomy& t = bundled();
  // crossover: device (depth 6) and program (depth 5) as parents.
  SynsetId crossover = t.senses("crossover", Pos::kNoun).front();
  CHECK(t.depth(crossover) == 6);
  std::vector<std::string> names;
  for (SynsetId id : t.rollup(crossover, 4)) names.push_back(t.concept_name(id));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"artifact", "broadcast"});

  SynsetId newsflash = t.senses("newsflash", Pos::kNoun).front();
  names.clear();
  for (SynsetId id : t.rollup(newsflash, 4)) names.push_back(t.concept_name(id));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"broadcast", "message"});
}

TEST_CASE("non-noun roll-up goes through derivational links") {
  const Taxonomy& t = bundled();
  SynsetId broadcast_v = t.senses("broadcast", Pos::kVerb).front();
  std::vector<SynsetId> roll = t.rollup(broadcast_v, 4);
  REQUIRE(roll.size() == 1);
  CHECK(t.concept_name(roll[0]) == "broadcast");
  // A verb without noun links rolls up to nothing.
  SynsetId go_v = t.senses("go", Pos::kVerb).front();
  CHECK(t.rollup(go_v, 4).empty());
}

// Reader for WordNet-3.0 database files plus the taxonomy queries the
// semantic layer needs: shortest-path depth from the noun root, ancestor
// rollup at a fixed depth, and morphological lemma lookup.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tagdyn {

enum class Pos { kNoun, kVerb, kAdj, kAdv };

char pos_tag(Pos pos);                     // 'n', 'v', 'a', 'r'
std::optional<Pos> pos_from_tag(char c);   // accepts 's' as adjective
std::string_view pos_name(Pos pos);

struct SynsetId {
  Pos pos = Pos::kNoun;
  uint32_t offset = 0;

  friend bool operator==(const SynsetId&, const SynsetId&) = default;
  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;       // order as listed in the data file
  std::vector<SynsetId> hypernyms;       // @ and @i pointers
  std::vector<SynsetId> noun_links;      // derivational '+' links into nouns
  std::string gloss;
};

struct TaxonomyStats {
  size_t synsets = 0;
  size_t noun_synsets = 0;
  size_t lemmas = 0;
  size_t exception_forms = 0;
  int max_noun_depth = 0;
};

class Taxonomy {
 public:
  // Reads index.{noun,verb,adj,adv}, data.{...} and {pos}.exc from dir.
  // Validates that noun hypernym links are acyclic and that every noun
  // synset reaches the (virtual) root.
  static Taxonomy load(const std::string& dir);

  const Synset* find(SynsetId id) const;
  const Synset& require(SynsetId id) const;

  // Sense-ordered synsets for an exact lemma, empty if the lemma is not in
  // the index for that part of speech.
  const std::vector<SynsetId>& senses(const std::string& lemma, Pos pos) const;
  bool has_lemma(const std::string& lemma, Pos pos) const;

  // Morphological candidates: the word itself when indexed, exception-list
  // lemmas, then detachment-rule results, deduplicated in that order. Only
  // forms present in the index are returned.
  std::vector<std::string> lemmatize(const std::string& word, Pos pos) const;

  // Depth of a noun synset measured from the virtual root node, which sits
  // above every top-level (hypernym-less) noun synset. Top-level synsets
  // are at depth 1.
  int depth(SynsetId id) const;

  // All ancestors of the synset (including itself) whose depth is exactly
  // target_depth. Nouns walk their own hypernym closure; other parts of
  // speech delegate through their noun_links. Sorted, unique.
  std::vector<SynsetId> rollup(SynsetId id, int target_depth) const;

  // First lemma of the synset; display name for concept reporting.
  const std::string& concept_name(SynsetId id) const;

  TaxonomyStats stats() const;
  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }

 private:
  std::map<SynsetId, Synset> synsets_;
  std::map<std::pair<char, std::string>, std::vector<SynsetId>> index_;
  std::map<std::pair<char, std::string>, std::vector<std::string>> exceptions_;
  std::unordered_map<uint64_t, int> noun_depth_;  // keyed by offset
  size_t exception_forms_ = 0;
  int max_noun_depth_ = 0;

  void parse_data_file(const std::string& path, Pos pos);
  void parse_index_file(const std::string& path, Pos pos);
  void parse_exception_file(const std::string& path, Pos pos);
  void compute_depths();
  void validate();
};

}  // namespace tagdyn

#include "tagdyn/wordnet.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>

#include "tagdyn/util.hpp"

namespace tagdyn {
namespace {

struct DetachRule {
  const char* suffix;
  const char* replacement;
};

// Standard detachment rules, applied in order.
const std::vector<DetachRule>& rules_for(Pos pos) {
  static const std::vector<DetachRule> noun_rules = {
      {"s", ""},     {"ses", "s"},  {"xes", "x"},  {"zes", "z"},
      {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
  };
  static const std::vector<DetachRule> verb_rules = {
      {"s", ""},  {"ies", "y"}, {"es", "e"},  {"es", ""},
      {"ed", "e"}, {"ed", ""},  {"ing", "e"}, {"ing", ""},
  };
  static const std::vector<DetachRule> adj_rules = {
      {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"},
  };
  static const std::vector<DetachRule> adv_rules;
  switch (pos) {
    case Pos::kNoun: return noun_rules;
    case Pos::kVerb: return verb_rules;
    case Pos::kAdj: return adj_rules;
    case Pos::kAdv: return adv_rules;
  }
  return adv_rules;
}

bool is_header_line(const std::string& line) {
  return line.rfind("  ", 0) == 0;
}

uint32_t parse_offset(const std::string& tok, const std::string& path) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos, 10);
  } catch (const std::exception&) {
    throw DataError(path + ": bad synset offset '" + tok + "'");
  }
  if (pos != tok.size())
    throw DataError(path + ": bad synset offset '" + tok + "'");
  return static_cast<uint32_t>(v);
}

long parse_int(const std::string& tok, int base, const std::string& path,
               const char* what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos, base);
  } catch (const std::exception&) {
    throw DataError(path + ": bad " + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw DataError(path + ": bad " + what + " '" + tok + "'");
  return v;
}

std::vector<std::string> space_tokens(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

uint64_t offset_key(uint32_t offset) { return offset; }

}  // namespace

char pos_tag(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return 'n';
    case Pos::kVerb: return 'v';
    case Pos::kAdj: return 'a';
    case Pos::kAdv: return 'r';
  }
  return '?';
}

std::optional<Pos> pos_from_tag(char c) {
  switch (c) {
    case 'n': return Pos::kNoun;
    case 'v': return Pos::kVerb;
    case 'a': return Pos::kAdj;
    case 's': return Pos::kAdj;
    case 'r': return Pos::kAdv;
    default: return std::nullopt;
  }
}

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "noun";
    case Pos::kVerb: return "verb";
    case Pos::kAdj: return "adj";
    case Pos::kAdv: return "adv";
  }
  return "?";
}

void Taxonomy::parse_data_file(const std::string& path, Pos pos) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_header_line(line)) continue;
    std::string fields = line;
    std::string gloss;
    size_t bar = line.find(" | ");
    if (bar != std::string::npos) {
      fields = line.substr(0, bar);
      gloss = line.substr(bar + 3);
      while (!gloss.empty() && (gloss.back() == ' ' || gloss.back() == '\r'))
        gloss.pop_back();
    } else if (!fields.empty() && fields.back() == '\r') {
      fields.pop_back();
    }
    std::vector<std::string> tok = space_tokens(fields);
    if (tok.size() < 5) throw DataError(path + ": truncated synset line");

    Synset syn;
    syn.id.offset = parse_offset(tok[0], path);
    // tok[1] is the lexicographer file number; unused here.
    auto ss = pos_from_tag(tok[2].empty() ? '?' : tok[2][0]);
    if (!ss) throw DataError(path + ": unknown synset type '" + tok[2] + "'");
    syn.id.pos = *ss == Pos::kAdj ? Pos::kAdj : *ss;
    if (syn.id.pos != pos && !(pos == Pos::kAdj && *ss == Pos::kAdj))
      throw DataError(path + ": synset type does not match file");
    syn.id.pos = pos;
    syn.gloss = gloss;

    size_t i = 3;
    long w_cnt = parse_int(tok[i++], 16, path, "word count");
    if (w_cnt < 1) throw DataError(path + ": synset with no words");
    for (long w = 0; w < w_cnt; ++w) {
      if (i + 2 > tok.size()) throw DataError(path + ": truncated word list");
      syn.lemmas.push_back(tok[i++]);
      parse_int(tok[i++], 16, path, "lex_id");  // validated, unused
    }
    if (i >= tok.size()) throw DataError(path + ": missing pointer count");
    long p_cnt = parse_int(tok[i++], 10, path, "pointer count");
    for (long p = 0; p < p_cnt; ++p) {
      if (i + 4 > tok.size()) throw DataError(path + ": truncated pointer");
      const std::string& symbol = tok[i];
      uint32_t target = parse_offset(tok[i + 1], path);
      auto tpos = pos_from_tag(tok[i + 2].empty() ? '?' : tok[i + 2][0]);
      if (!tpos) throw DataError(path + ": bad pointer pos '" + tok[i + 2] + "'");
      // tok[i + 3] is the source/target word field; link kinds we keep are
      // used at synset granularity.
      if (symbol == "@" || symbol == "@i") {
        syn.hypernyms.push_back({*tpos, target});
      } else if (symbol == "+" && *tpos == Pos::kNoun) {
        SynsetId link{Pos::kNoun, target};
        if (std::find(syn.noun_links.begin(), syn.noun_links.end(), link) ==
            syn.noun_links.end())
          syn.noun_links.push_back(link);
      }
      i += 4;
    }
    // Verb frames and anything after them are irrelevant here.

    auto [it, inserted] = synsets_.emplace(syn.id, std::move(syn));
    if (!inserted)
      throw DataError(path + ": duplicate synset offset " + tok[0]);
  }
}

void Taxonomy::parse_index_file(const std::string& path, Pos pos) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_header_line(line)) continue;
    if (line.back() == '\r') line.pop_back();
    std::vector<std::string> tok = space_tokens(line);
    if (tok.size() < 6) throw DataError(path + ": truncated index line");
    std::string lemma = to_lower(tok[0]);
    size_t i = 2;
    long synset_cnt = parse_int(tok[i++], 10, path, "synset count");
    if (synset_cnt < 1) throw DataError(path + ": lemma with no synsets");
    long p_cnt = parse_int(tok[i++], 10, path, "pointer count");
    i += static_cast<size_t>(p_cnt);  // pointer symbols
    i += 2;                           // sense_cnt, tagsense_cnt
    if (i + static_cast<size_t>(synset_cnt) > tok.size())
      throw DataError(path + ": truncated offset list for '" + lemma + "'");
    std::vector<SynsetId> ids;
    ids.reserve(static_cast<size_t>(synset_cnt));
    for (long s = 0; s < synset_cnt; ++s)
      ids.push_back({pos, parse_offset(tok[i + static_cast<size_t>(s)], path)});
    auto [it, inserted] = index_.emplace(
        std::make_pair(pos_tag(pos), std::move(lemma)), std::move(ids));
    if (!inserted)
      throw DataError(path + ": duplicate index entry '" + tok[0] + "'");
  }
}

void Taxonomy::parse_exception_file(const std::string& path, Pos pos) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || is_header_line(line)) continue;
    if (line.back() == '\r') line.pop_back();
    std::vector<std::string> tok = space_tokens(line);
    if (tok.size() < 2) throw DataError(path + ": exception without lemma");
    std::vector<std::string> bases(tok.begin() + 1, tok.end());
    for (auto& b : bases) b = to_lower(b);
    auto key = std::make_pair(pos_tag(pos), to_lower(tok[0]));
    auto [it, inserted] = exceptions_.emplace(key, std::move(bases));
    if (!inserted)
      throw DataError(path + ": duplicate exception '" + tok[0] + "'");
    ++exception_forms_;
  }
}

void Taxonomy::compute_depths() {
  // Children lists restricted to noun-to-noun hypernym edges.
  std::unordered_map<uint64_t, std::vector<uint32_t>> children;
  std::vector<uint32_t> roots;
  size_t noun_count = 0;
  for (const auto& [id, syn] : synsets_) {
    if (id.pos != Pos::kNoun) continue;
    ++noun_count;
    bool has_parent = false;
    for (SynsetId h : syn.hypernyms) {
      if (h.pos != Pos::kNoun) continue;
      has_parent = true;
      children[offset_key(h.offset)].push_back(id.offset);
    }
    if (!has_parent) roots.push_back(id.offset);
  }
  // Breadth-first from the virtual root: every top-level synset is at
  // depth 1, so the root itself occupies depth 0.
  std::deque<uint32_t> queue;
  for (uint32_t r : roots) {
    noun_depth_[offset_key(r)] = 1;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    int d = noun_depth_[offset_key(u)];
    max_noun_depth_ = std::max(max_noun_depth_, d);
    auto it = children.find(offset_key(u));
    if (it == children.end()) continue;
    for (uint32_t v : it->second) {
      auto [dit, inserted] = noun_depth_.emplace(offset_key(v), d + 1);
      if (inserted) queue.push_back(v);
    }
  }
  if (noun_depth_.size() != noun_count)
    throw DataError("lexicon: " +
                    std::to_string(noun_count - noun_depth_.size()) +
                    " noun synsets unreachable from the root");
}

void Taxonomy::validate() {
  // Dangling links.
  for (const auto& [id, syn] : synsets_) {
    for (SynsetId h : syn.hypernyms)
      if (!synsets_.count(h))
        throw DataError("lexicon: dangling hypernym pointer from " +
                        std::to_string(id.offset));
    for (SynsetId l : syn.noun_links)
      if (!synsets_.count(l))
        throw DataError("lexicon: dangling derivational pointer from " +
                        std::to_string(id.offset));
  }
  for (const auto& [key, ids] : index_)
    for (SynsetId s : ids)
      if (!synsets_.count(s))
        throw DataError("lexicon: index entry '" + key.second +
                        "' references missing synset");
  // Acyclicity of the noun hierarchy (Kahn's algorithm over child->parent
  // edges).
  std::unordered_map<uint64_t, int> out_deg;
  std::unordered_map<uint64_t, std::vector<uint32_t>> rev;  // parent -> kids
  size_t noun_count = 0;
  for (const auto& [id, syn] : synsets_) {
    if (id.pos != Pos::kNoun) continue;
    ++noun_count;
    int deg = 0;
    for (SynsetId h : syn.hypernyms) {
      if (h.pos != Pos::kNoun) continue;
      ++deg;
      rev[offset_key(h.offset)].push_back(id.offset);
    }
    out_deg[offset_key(id.offset)] = deg;
  }
  std::deque<uint32_t> queue;
  for (const auto& [off, deg] : out_deg)
    if (deg == 0) queue.push_back(static_cast<uint32_t>(off));
  size_t seen = 0;
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop_front();
    ++seen;
    auto it = rev.find(offset_key(u));
    if (it == rev.end()) continue;
    for (uint32_t child : it->second)
      if (--out_deg[offset_key(child)] == 0) queue.push_back(child);
  }
  if (seen != noun_count)
    throw DataError("lexicon: cycle detected in the noun hierarchy");
}

Taxonomy Taxonomy::load(const std::string& dir) {
  namespace fs = std::filesystem;
  Taxonomy t;
  struct FileSet {
    Pos pos;
    const char* suffix;
  };
  const FileSet sets[] = {{Pos::kNoun, "noun"},
                          {Pos::kVerb, "verb"},
                          {Pos::kAdj, "adj"},
                          {Pos::kAdv, "adv"}};
  bool any = false;
  for (const FileSet& s : sets) {
    fs::path data = fs::path(dir) / (std::string("data.") + s.suffix);
    fs::path index = fs::path(dir) / (std::string("index.") + s.suffix);
    if (!fs::exists(data) && !fs::exists(index)) continue;
    if (!fs::exists(data) || !fs::exists(index))
      throw DataError("lexicon: need both index." + std::string(s.suffix) +
                      " and data." + s.suffix);
    t.parse_data_file(data.string(), s.pos);
    t.parse_index_file(index.string(), s.pos);
    any = true;
    fs::path exc = fs::path(dir) / (std::string(s.suffix) + ".exc");
    if (fs::exists(exc)) t.parse_exception_file(exc.string(), s.pos);
  }
  if (!any) throw DataError("lexicon: no database files found in " + dir);
  bool has_nouns =
      std::any_of(t.synsets_.begin(), t.synsets_.end(),
                  [](const auto& kv) { return kv.first.pos == Pos::kNoun; });
  if (!has_nouns) throw DataError("lexicon: noun database is required");
  t.validate();
  t.compute_depths();
  return t;
}

const Synset* Taxonomy::find(SynsetId id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& Taxonomy::require(SynsetId id) const {
  const Synset* s = find(id);
  if (!s)
    throw DataError("lexicon: unknown synset " + std::string(pos_name(id.pos)) +
                    "/" + std::to_string(id.offset));
  return *s;
}

const std::vector<SynsetId>& Taxonomy::senses(const std::string& lemma,
                                              Pos pos) const {
  static const std::vector<SynsetId> empty;
  auto it = index_.find({pos_tag(pos), lemma});
  return it == index_.end() ? empty : it->second;
}

bool Taxonomy::has_lemma(const std::string& lemma, Pos pos) const {
  return index_.count({pos_tag(pos), lemma}) != 0;
}

std::vector<std::string> Taxonomy::lemmatize(const std::string& word,
                                             Pos pos) const {
  std::vector<std::string> out;
  auto push = [&](const std::string& cand) {
    if (!has_lemma(cand, pos)) return;
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  };
  push(word);
  auto exc = exceptions_.find({pos_tag(pos), word});
  if (exc != exceptions_.end())
    for (const std::string& base : exc->second) push(base);
  for (const DetachRule& rule : rules_for(pos)) {
    std::string_view suffix(rule.suffix);
    if (word.size() <= suffix.size()) continue;
    if (word.compare(word.size() - suffix.size(), suffix.size(), suffix) != 0)
      continue;
    std::string cand = word.substr(0, word.size() - suffix.size());
    cand += rule.replacement;
    push(cand);
  }
  return out;
}

int Taxonomy::depth(SynsetId id) const {
  if (id.pos != Pos::kNoun)
    throw DataError("lexicon: depth is defined for noun synsets only");
  auto it = noun_depth_.find(offset_key(id.offset));
  if (it == noun_depth_.end()) {
    require(id);  // unknown synset -> DataError
    throw InternalError("lexicon: noun synset missing a depth");
  }
  return it->second;
}

std::vector<SynsetId> Taxonomy::rollup(SynsetId id, int target_depth) const {
  const Synset& syn = require(id);
  std::vector<SynsetId> out;
  if (id.pos != Pos::kNoun) {
    for (SynsetId link : syn.noun_links) {
      std::vector<SynsetId> part = rollup(link, target_depth);
      out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  // Upward closure over hypernym edges, self included.
  std::set<SynsetId> visited;
  std::deque<SynsetId> queue{id};
  visited.insert(id);
  while (!queue.empty()) {
    SynsetId u = queue.front();
    queue.pop_front();
    for (SynsetId h : require(u).hypernyms) {
      if (h.pos != Pos::kNoun) continue;
      if (visited.insert(h).second) queue.push_back(h);
    }
  }
  for (SynsetId v : visited)
    if (depth(v) == target_depth) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

const std::string& Taxonomy::concept_name(SynsetId id) const {
  return require(id).lemmas.front();
}

TaxonomyStats Taxonomy::stats() const {
  TaxonomyStats st;
  st.synsets = synsets_.size();
  for (const auto& [id, syn] : synsets_)
    if (id.pos == Pos::kNoun) ++st.noun_synsets;
  st.lemmas = index_.size();
  st.exception_forms = exception_forms_;
  st.max_noun_depth = max_noun_depth_;
  return st;
}

}  // namespace tagdyn

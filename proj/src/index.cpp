#include "synlex/index.hpp"

#include <algorithm>
#include <cmath>

#include "synlex/errors.hpp"

namespace synlex {

void DefinitionIndex::push_segment(const std::vector<std::string>& items) {
  if (items.empty()) return;
  const std::uint32_t id = seg.empty() ? 0 : seg.back() + 1;
  for (const auto& item : items) {
    lemmas.push_back(item);
    seg.push_back(id);
  }
}

void DefinitionIndex::append(const DefinitionIndex& other) {
  const std::uint32_t offset = seg.empty() ? 0 : seg.back() + 1;
  for (std::size_t i = 0; i < other.lemmas.size(); ++i) {
    lemmas.push_back(other.lemmas[i]);
    seg.push_back(other.seg[i] + offset);
  }
}

std::map<std::string, std::size_t> DefinitionIndex::counts() const {
  std::map<std::string, std::size_t> c;
  for (const auto& l : lemmas) c[l] += 1;
  return c;
}

DefinitionIndex build_index(const Definition& d) {
  DefinitionIndex index;
  std::vector<std::string> gloss;
  for (const auto& t : d.tokens)
    if (is_open_class(t.pos)) gloss.push_back(t.lemma);
  index.push_segment(gloss);
  index.push_segment(d.synonyms);
  index.push_segment(d.domains);
  return index;
}

std::optional<DefinitionIndex> merged_synonym_index(
    const std::string& synonym, const DefinitionalDictionary& defs,
    std::optional<Usage> usage) {
  DefinitionIndex merged;
  bool found = false;
  for (Usage u : {Usage::NonReflexive, Usage::Reflexive}) {
    if (usage && *usage != u) continue;
    const VerbEntry* entry = defs.find(synonym, u);
    if (!entry) continue;
    found = true;
    for (const auto& d : entry->definitions) merged.append(build_index(d));
  }
  if (!found) return std::nullopt;
  return merged;
}

double CorpusStats::tfidf(const std::string& lemma) const {
  auto df = doc_freq.find(lemma);
  if (df == doc_freq.end()) return 0.0;
  const double idf = std::log(static_cast<double>(doc_count) /
                              static_cast<double>(df->second));
  return static_cast<double>(total_tf.at(lemma)) * idf;
}

CorpusStats build_stats(const DefinitionalDictionary& defs) {
  CorpusStats stats;
  for (const auto& [key, entry] : defs.entries) {
    for (const auto& d : entry.definitions) {
      stats.doc_count += 1;
      const DefinitionIndex index = build_index(d);
      std::set<std::string> seen;
      for (const auto& lemma : index.lemmas) {
        stats.total_tf[lemma] += 1;
        if (seen.insert(lemma).second) stats.doc_freq[lemma] += 1;
      }
    }
  }
  if (stats.doc_count == 0)
    throw ValidationError("cannot build corpus statistics: dictionary \"" +
                          defs.name + "\" has no definitions");
  for (const auto& [lemma, df] : stats.doc_freq)
    stats.vocabulary_.insert(lemma);
  return stats;
}

}  // namespace synlex

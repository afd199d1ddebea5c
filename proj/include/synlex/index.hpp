#ifndef SYNLEX_INDEX_HPP
#define SYNLEX_INDEX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "synlex/types.hpp"

namespace synlex {

// The word material of one definition: open-class gloss lemmas in gloss
// order, then embedded synonym lemmas, then domain labels. Items carry a
// segment id; phrasal overlap (over2) may only match runs of items sharing a
// segment, so phrases never span the gloss/synonym/domain seams or, in merged
// indexes, a definition boundary.
struct DefinitionIndex {
  std::vector<std::string> lemmas;
  std::vector<std::uint32_t> seg;  // parallel to lemmas

  std::size_t size() const { return lemmas.size(); }
  bool empty() const { return lemmas.empty(); }

  void push_segment(const std::vector<std::string>& items);
  // Concatenates, keeping the argument's segment structure distinct.
  void append(const DefinitionIndex& other);

  std::map<std::string, std::size_t> counts() const;
};

DefinitionIndex build_index(const Definition& d);

// Union of the glosses of all of a synonym's definitions. When usage is
// given, only the entry of that usage contributes; otherwise both usages do
// (non-reflexive first). Returns nullopt when no entry exists in the scope —
// a "synonym without glosses", which the mapper reports.
std::optional<DefinitionIndex> merged_synonym_index(
    const std::string& synonym, const DefinitionalDictionary& defs,
    std::optional<Usage> usage);

// Corpus-wide statistics over all definition indexes. The document unit is
// one definition; idf is ln(N/df); tfidf(w) = total_tf(w) * ln(N/df(w)).
struct CorpusStats {
  std::size_t doc_count = 0;
  std::map<std::string, std::size_t> doc_freq;
  std::map<std::string, std::size_t> total_tf;

  bool in_vocabulary(const std::string& lemma) const {
    return doc_freq.count(lemma) != 0;
  }
  // 0 for out-of-vocabulary lemmas. Exactly 0 iff df(w) == doc_count.
  double tfidf(const std::string& lemma) const;
  const std::set<std::string>& vocabulary() const { return vocabulary_; }

  std::set<std::string> vocabulary_;
};

// Throws ValidationError when the dictionary holds no definitions.
CorpusStats build_stats(const DefinitionalDictionary& defs);

}  // namespace synlex

#endif

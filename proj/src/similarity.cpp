#include "synlex/similarity.hpp"

#include <algorithm>

#include "synlex/errors.hpp"

namespace synlex {

std::optional<Measure> parse_measure(std::string_view s) {
  if (s == "over1") return Measure::Over1;
  if (s == "over2") return Measure::Over2;
  if (s == "over3") return Measure::Over3;
  if (s == "wv1") return Measure::WV1;
  if (s == "wv2") return Measure::WV2;
  if (s == "wv3") return Measure::WV3;
  return std::nullopt;
}

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Over1: return "over1";
    case Measure::Over2: return "over2";
    case Measure::Over3: return "over3";
    case Measure::WV1: return "wv1";
    case Measure::WV2: return "wv2";
    case Measure::WV3: return "wv3";
  }
  return "over1";
}

std::int64_t over1(const DefinitionIndex& a, const DefinitionIndex& b) {
  const auto ca = a.counts();
  const auto cb = b.counts();
  std::int64_t total = 0;
  for (const auto& [lemma, na] : ca) {
    auto it = cb.find(lemma);
    if (it != cb.end())
      total += static_cast<std::int64_t>(std::min(na, it->second));
  }
  return total;
}

std::int64_t over2(const DefinitionIndex& a, const DefinitionIndex& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<bool> used_a(na, false), used_b(nb, false);
  std::int64_t total = 0;

  while (true) {
    std::size_t best_len = 0, best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < na; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        if (used_b[j] || a.lemmas[i] != b.lemmas[j]) continue;
        std::size_t len = 0;
        while (i + len < na && j + len < nb && !used_a[i + len] &&
               !used_b[j + len] && a.seg[i + len] == a.seg[i] &&
               b.seg[j + len] == b.seg[j] &&
               a.lemmas[i + len] == b.lemmas[j + len])
          ++len;
        // Strict improvement keeps the earliest (i, then j) among equals.
        if (len > best_len) {
          best_len = len;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_len == 0) break;
    total += static_cast<std::int64_t>(best_len) *
             static_cast<std::int64_t>(best_len);
    for (std::size_t k = 0; k < best_len; ++k) {
      used_a[best_i + k] = true;
      used_b[best_j + k] = true;
    }
  }
  return total;
}

double over3(const DefinitionIndex& a, const DefinitionIndex& b) {
  const std::size_t denom = a.size() + b.size();
  if (denom == 0)
    throw ValidationError("over3 is undefined for two empty indexes");
  return static_cast<double>(over2(a, b)) / static_cast<double>(denom);
}

bool SparseVector::is_zero() const {
  for (const auto& [lemma, w] : weights)
    if (!w.is_zero()) return false;
  return true;
}

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  auto ia = weights.begin();
  auto ib = other.weights.begin();
  while (ia != weights.end() && ib != other.weights.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += (ia->second * ib->second).to_double();
      ++ia;
      ++ib;
    }
  }
  return sum;
}

VerbVectorSpace build_verb_space(
    const std::vector<DefinitionIndex>& def_indexes,
    const std::map<std::string, DefinitionIndex>& synonym_indexes,
    const CorpusStats& stats) {
  VerbVectorSpace space;

  // Occurrences of each lemma across all of the verb's own definitions: the
  // denominator of every weight.
  std::map<std::string, std::int64_t> verb_total;
  for (const auto& index : def_indexes)
    for (const auto& lemma : index.lemmas) verb_total[lemma] += 1;

  for (const auto& [lemma, n] : verb_total)
    if (stats.tfidf(lemma) != 0.0) space.dims.insert(lemma);

  auto project = [&](const DefinitionIndex& index) {
    SparseVector v;
    for (const auto& [lemma, n] : index.counts()) {
      if (!space.dims.count(lemma)) continue;
      v.weights[lemma] =
          Rational(static_cast<std::int64_t>(n), verb_total.at(lemma));
    }
    return v;
  };

  for (const auto& index : def_indexes)
    space.def_vectors.push_back(project(index));
  for (const auto& [syn, index] : synonym_indexes)
    space.syn_vectors[syn] = project(index);
  return space;
}

VerbVectorSpace build_verb_space(const VerbEntry& verb,
                                 const std::set<std::string>& synonyms,
                                 const DefinitionalDictionary& defs,
                                 const CorpusStats& stats,
                                 std::optional<Usage> synonym_scope) {
  std::vector<DefinitionIndex> def_indexes;
  for (const auto& d : verb.definitions) def_indexes.push_back(build_index(d));
  std::map<std::string, DefinitionIndex> synonym_indexes;
  for (const auto& syn : synonyms) {
    auto merged = merged_synonym_index(syn, defs, synonym_scope);
    synonym_indexes[syn] = merged ? std::move(*merged) : DefinitionIndex{};
  }
  return build_verb_space(def_indexes, synonym_indexes, stats);
}

double wv1(const VerbVectorSpace& space, std::size_t def_pos,
           const std::string& synonym) {
  auto it = space.syn_vectors.find(synonym);
  if (it == space.syn_vectors.end()) return 0.0;
  return space.def_vectors.at(def_pos).dot(it->second);
}

SparseVector GlobalVectorSpace::second_order(
    const DefinitionIndex& index) const {
  SparseVector acc;
  for (const auto& lemma : index.lemmas) {
    auto it = word_vectors.find(lemma);
    if (it == word_vectors.end()) continue;
    for (const auto& [dim, w] : it->second.weights) {
      auto [slot, inserted] = acc.weights.emplace(dim, w);
      if (!inserted) slot->second = slot->second + w;
    }
  }
  return acc;
}

GlobalVectorSpace build_global_space(const DefinitionalDictionary& defs,
                                     const CorpusStats& stats,
                                     std::optional<double> tfidf_cutoff) {
  GlobalVectorSpace space;
  for (const auto& lemma : stats.vocabulary()) {
    if (tfidf_cutoff && stats.tfidf(lemma) < *tfidf_cutoff) continue;
    space.dims.insert(lemma);
  }
  for (const auto& [key, entry] : defs.entries) {
    for (const auto& d : entry.definitions) {
      const DefinitionIndex index = build_index(d);
      std::set<std::string> present;
      for (const auto& lemma : index.lemmas)
        if (space.dims.count(lemma)) present.insert(lemma);
      for (const auto& w : present) {
        SparseVector& vec = space.word_vectors[w];
        for (const auto& u : present) {
          auto [slot, inserted] = vec.weights.emplace(u, Rational(1));
          if (!inserted) slot->second = slot->second + Rational(1);
        }
      }
    }
  }
  return space;
}

double wv2(const GlobalVectorSpace& space, const DefinitionIndex& a,
           const DefinitionIndex& b) {
  return space.second_order(a).dot(space.second_order(b));
}

}  // namespace synlex

#ifndef SYNLEX_SIMILARITY_HPP
#define SYNLEX_SIMILARITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "synlex/index.hpp"
#include "synlex/rational.hpp"
#include "synlex/types.hpp"

namespace synlex {

enum class Measure { Over1, Over2, Over3, WV1, WV2, WV3 };

std::optional<Measure> parse_measure(std::string_view s);  // "over1".."wv3"
std::string_view measure_name(Measure m);
inline constexpr Measure kAllMeasures[] = {Measure::Over1, Measure::Over2,
                                           Measure::Over3, Measure::WV1,
                                           Measure::WV2,   Measure::WV3};

// Simple word overlap: multiset intersection cardinality,
// sum over w of min(count_a(w), count_b(w)).
std::int64_t over1(const DefinitionIndex& a, const DefinitionIndex& b);

// Extended (phrasal) overlap: repeatedly extract the longest common
// consecutive lemma run (within a segment on both sides), score length^2,
// consume the matched occurrences, until no common lemma remains. Among
// equally long runs the one starting earliest in a, then earliest in b, wins.
std::int64_t over2(const DefinitionIndex& a, const DefinitionIndex& b);

// over2 normalized by |a| + |b|. Throws ValidationError when both are empty.
double over3(const DefinitionIndex& a, const DefinitionIndex& b);

// Word -> weight over an implicit dimension vocabulary; absent keys weigh 0.
// Weights are exact rationals so that the first-order weight formulas are
// checkable without rounding.
struct SparseVector {
  std::map<std::string, Rational> weights;

  bool is_zero() const;
  // Sum over shared keys of the exact per-term product, accumulated into a
  // double in key order.
  double dot(const SparseVector& other) const;
};

// Per-verb vector space for the first-order measure. Dimensions are the
// lemmas of the verb's own definition indexes whose corpus tf.idf is nonzero.
// weight(w) of definition d_i  = count(w, d_i) / count(w, all defs of verb);
// weight(w) of a synonym       = count(w, merged defs) / count(w, all defs of verb).
struct VerbVectorSpace {
  std::set<std::string> dims;
  std::vector<SparseVector> def_vectors;             // parallel to input order
  std::map<std::string, SparseVector> syn_vectors;
};

VerbVectorSpace build_verb_space(
    const std::vector<DefinitionIndex>& def_indexes,
    const std::map<std::string, DefinitionIndex>& synonym_indexes,
    const CorpusStats& stats);

// Spec-shaped convenience: indexes the entry's definitions and the merged
// indexes of the given synonyms (a synonym without glosses in scope gets a
// zero vector).
VerbVectorSpace build_verb_space(const VerbEntry& verb,
                                 const std::set<std::string>& synonyms,
                                 const DefinitionalDictionary& defs,
                                 const CorpusStats& stats,
                                 std::optional<Usage> synonym_scope);

double wv1(const VerbVectorSpace& space, std::size_t def_pos,
           const std::string& synonym);

// Corpus-wide first-order co-occurrence space. word_vectors[w][u] is the
// number of definitions whose index contains both w and u (binary per
// definition; u == w gives doc_freq(w)). With a cutoff, dimensions are
// restricted to lemmas with tfidf >= cutoff.
struct GlobalVectorSpace {
  std::set<std::string> dims;
  std::map<std::string, SparseVector> word_vectors;  // keyed by dims members

  // Sum of first-order vectors, added once per lemma occurrence; lemmas
  // outside dims contribute nothing.
  SparseVector second_order(const DefinitionIndex& index) const;
};

GlobalVectorSpace build_global_space(const DefinitionalDictionary& defs,
                                     const CorpusStats& stats,
                                     std::optional<double> tfidf_cutoff);

// Second-order vector product of the two indexes; wv3 is wv2 over a space
// built with a tf.idf cutoff.
double wv2(const GlobalVectorSpace& space, const DefinitionIndex& a,
           const DefinitionIndex& b);

}  // namespace synlex

#endif

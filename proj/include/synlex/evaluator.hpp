#ifndef SYNLEX_EVALUATOR_HPP
#define SYNLEX_EVALUATOR_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "synlex/mapper.hpp"
#include "synlex/types.hpp"

namespace synlex {

struct EvalReport {
  std::size_t true_positives = 0;
  std::size_t system_total = 0;
  std::size_t reference_total = 0;
  double precision = 0.0;  // tp / system_total, 0 when system is empty
  double recall = 0.0;     // tp / reference_total
  double f1 = 0.0;         // harmonic mean, 0 when p + r == 0
};

EvalReport evaluate(const std::set<RefTriple>& system,
                    const ReferenceAnnotation& reference);
EvalReport evaluate(const std::vector<MappingTriple>& system,
                    const ReferenceAnnotation& reference);

nlohmann::json to_json(const EvalReport& r);

// Mean scores over seeded random-assignment trials. Each trial assigns every
// synonym of every record uniformly to one definition of its (headword,
// usage) entry; records without a matching entry contribute nothing.
// Identical seeds give identical reports on any platform.
struct BaselineReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double mean_f1 = 0.0;
};

BaselineReport random_baseline(const DefinitionalDictionary& defs,
                               const SynonymDictionary& syns,
                               const ReferenceAnnotation& reference,
                               std::size_t trials, std::uint64_t seed);

nlohmann::json to_json(const BaselineReport& r);

// Agreement over the full candidate universe: every (headword, usage,
// synonym, definition_id) obtainable from a record's synonyms crossed with
// its entry's definitions. The pairwise rate is the fraction of the universe
// where two annotators make the same in/out decision; the unanimous rate is
// analogous over all annotators.
struct AgreementReport {
  std::size_t universe_size = 0;
  std::map<std::pair<std::string, std::string>, double> pairwise;
  double unanimous = 0.0;
};

AgreementReport agreement(const std::vector<ReferenceAnnotation>& annotations,
                          const DefinitionalDictionary& defs,
                          const SynonymDictionary& syns);

nlohmann::json to_json(const AgreementReport& r);

// The candidate triple universe the agreement rates are defined over.
std::set<RefTriple> candidate_universe(const DefinitionalDictionary& defs,
                                       const SynonymDictionary& syns);

}  // namespace synlex

#endif

#include "synlex/evaluator.hpp"

#include <algorithm>
#include <random>

#include "synlex/errors.hpp"

namespace synlex {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) {
  return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Unbiased bounded draw; mt19937_64 output is fixed by the standard, so this
// is reproducible across platforms.
std::size_t draw(std::mt19937_64& eng, std::size_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(n);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % static_cast<std::uint64_t>(n));
}

}  // namespace

EvalReport evaluate(const std::set<RefTriple>& system,
                    const ReferenceAnnotation& reference) {
  EvalReport r;
  r.system_total = system.size();
  r.reference_total = reference.triples.size();
  for (const auto& t : system)
    if (reference.triples.count(t)) r.true_positives += 1;
  r.precision = ratio(r.true_positives, r.system_total);
  r.recall = ratio(r.true_positives, r.reference_total);
  r.f1 = harmonic(r.precision, r.recall);
  return r;
}

EvalReport evaluate(const std::vector<MappingTriple>& system,
                    const ReferenceAnnotation& reference) {
  std::set<RefTriple> keys;
  for (const auto& t : system) keys.insert(t.key());
  return evaluate(keys, reference);
}

nlohmann::json to_json(const EvalReport& r) {
  return {{"true_positives", r.true_positives},
          {"system_total", r.system_total},
          {"reference_total", r.reference_total},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1}};
}

BaselineReport random_baseline(const DefinitionalDictionary& defs,
                               const SynonymDictionary& syns,
                               const ReferenceAnnotation& reference,
                               std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("random_baseline needs trials >= 1");
  BaselineReport report;
  report.trials = trials;
  report.seed = seed;

  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(t + 1)));
    std::set<RefTriple> assigned;
    for (const auto& [key, rec] : syns.records) {
      const VerbEntry* entry = defs.find(rec.headword, rec.usage);
      if (!entry) continue;  // nothing to assign the synonyms to
      for (const auto& syn : rec.synonyms) {
        const std::size_t i = draw(eng, entry->definitions.size());
        assigned.insert(
            {rec.headword, rec.usage, syn, entry->definitions[i].id});
      }
    }
    const EvalReport r = evaluate(assigned, reference);
    sum_p += r.precision;
    sum_r += r.recall;
    sum_f += r.f1;
  }
  report.mean_precision = sum_p / static_cast<double>(trials);
  report.mean_recall = sum_r / static_cast<double>(trials);
  report.mean_f1 = sum_f / static_cast<double>(trials);
  return report;
}

nlohmann::json to_json(const BaselineReport& r) {
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"mean_precision", r.mean_precision},
          {"mean_recall", r.mean_recall},
          {"mean_f1", r.mean_f1}};
}

std::set<RefTriple> candidate_universe(const DefinitionalDictionary& defs,
                                       const SynonymDictionary& syns) {
  std::set<RefTriple> universe;
  for (const auto& [key, rec] : syns.records) {
    const VerbEntry* entry = defs.find(rec.headword, rec.usage);
    if (!entry) continue;
    for (const auto& syn : rec.synonyms)
      for (const auto& d : entry->definitions)
        universe.insert({rec.headword, rec.usage, syn, d.id});
  }
  return universe;
}

AgreementReport agreement(const std::vector<ReferenceAnnotation>& annotations,
                          const DefinitionalDictionary& defs,
                          const SynonymDictionary& syns) {
  if (annotations.size() < 2)
    throw ValidationError("agreement needs at least two annotations");
  {
    std::set<std::string> names;
    for (const auto& a : annotations)
      if (!names.insert(a.annotator).second)
        throw ValidationError("duplicate annotator name \"" + a.annotator +
                              "\"");
  }

  const std::set<RefTriple> universe = candidate_universe(defs, syns);
  for (const auto& a : annotations) {
    for (const auto& t : a.triples) {
      if (!universe.count(t))
        throw ValidationError(
            "annotation \"" + a.annotator +
            "\" contains a triple outside the candidate universe: " +
            t.headword + "/" + std::string(usage_name(t.usage)) + "/" +
            t.synonym + "/" + t.definition_id);
    }
  }

  AgreementReport report;
  report.universe_size = universe.size();
  if (universe.empty()) {
    // No candidates to decide on; agreement is vacuous.
    for (std::size_t i = 0; i < annotations.size(); ++i)
      for (std::size_t j = i + 1; j < annotations.size(); ++j)
        report.pairwise[{annotations[i].annotator,
                         annotations[j].annotator}] = 1.0;
    report.unanimous = 1.0;
    return report;
  }

  for (std::size_t i = 0; i < annotations.size(); ++i) {
    for (std::size_t j = i + 1; j < annotations.size(); ++j) {
      std::size_t same = 0;
      for (const auto& t : universe) {
        const bool in_a = annotations[i].triples.count(t) != 0;
        const bool in_b = annotations[j].triples.count(t) != 0;
        if (in_a == in_b) ++same;
      }
      report.pairwise[{annotations[i].annotator, annotations[j].annotator}] =
          ratio(same, universe.size());
    }
  }

  std::size_t all_same = 0;
  for (const auto& t : universe) {
    const bool first = annotations[0].triples.count(t) != 0;
    bool same = true;
    for (std::size_t i = 1; i < annotations.size() && same; ++i)
      same = (annotations[i].triples.count(t) != 0) == first;
    if (same) ++all_same;
  }
  report.unanimous = ratio(all_same, universe.size());
  return report;
}

nlohmann::json to_json(const AgreementReport& r) {
  nlohmann::json pairwise = nlohmann::json::object();
  for (const auto& [pair, rate] : r.pairwise)
    pairwise[pair.first + "|" + pair.second] = rate;
  return {{"universe_size", r.universe_size},
          {"pairwise", std::move(pairwise)},
          {"unanimous", r.unanimous}};
}

}  // namespace synlex

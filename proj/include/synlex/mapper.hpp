#ifndef SYNLEX_MAPPER_HPP
#define SYNLEX_MAPPER_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synlex/similarity.hpp"
#include "synlex/types.hpp"

namespace synlex {

enum class TiePolicy { AllTied, FirstById };
enum class UnmappedPolicy { Drop, Report };

std::optional<TiePolicy> parse_tie_policy(std::string_view s);
std::string_view tie_policy_name(TiePolicy p);

struct MappingConfig {
  Measure measure = Measure::Over1;
  bool split_reflexive = false;
  TiePolicy tie_policy = TiePolicy::AllTied;
  // Only consulted for WV3; the CLI defaults it to 1.0.
  std::optional<double> tfidf_cutoff;
  UnmappedPolicy unmapped_policy = UnmappedPolicy::Report;
  unsigned jobs = 1;
};

struct MappingTriple {
  std::string headword;
  Usage usage = Usage::NonReflexive;  // usage of the entry owning the definition
  std::string synonym;
  std::string definition_id;
  double score = 0.0;
  Measure measure = Measure::Over1;

  RefTriple key() const { return {headword, usage, synonym, definition_id}; }
};

bool triple_order(const MappingTriple& a, const MappingTriple& b);

struct MapDiagnostic {
  std::string headword;
  Usage usage = Usage::NonReflexive;
  std::string synonym;  // empty when the whole record is affected
  std::string reason;
};

struct MapResult {
  std::vector<MappingTriple> triples;      // sorted by triple_order
  std::vector<MapDiagnostic> diagnostics;  // sorted
};

// Maps one synonym of one verb entry: scores the synonym's merged gloss index
// (same-usage only under split_reflexive, any usage otherwise) against each
// definition, returns the argmax definition(s) with their positive score, or
// nothing when every score is zero. Builds corpus statistics internally;
// prefer map_all for batch runs.
std::vector<MappingTriple> map_synonym(const VerbEntry& verb,
                                       const std::string& synonym,
                                       const DefinitionalDictionary& defs,
                                       const MappingConfig& config);

// Maps every synonym of every record. Under split_reflexive each (headword,
// usage) record is compared against the same-usage entry only. Otherwise the
// comparison unit combines both usages of a headword: all definitions (each
// keeping its home usage for the emitted triple) and the union of both
// records' synonyms, with synonym glosses merged across usages.
// Deterministic for a fixed config regardless of config.jobs.
MapResult map_all(const DefinitionalDictionary& defs,
                  const SynonymDictionary& syns, const MappingConfig& config);

// Partitions both dictionaries so every (headword, usage) pair is
// self-contained; definition counts are preserved.
std::pair<DefinitionalDictionary, SynonymDictionary> split_usages(
    const DefinitionalDictionary& defs, const SynonymDictionary& syns);

// TSV with header headword/usage/synonym/definition_id/score/measure, score
// printed with 6 fractional digits, rows sorted for reproducible diffs.
void write_triples_tsv(std::ostream& out,
                       const std::vector<MappingTriple>& triples);
std::vector<MappingTriple> read_triples_tsv(const std::filesystem::path& path);

}  // namespace synlex

#endif

#ifndef SYNLEX_MERGER_HPP
#define SYNLEX_MERGER_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "synlex/mapper.hpp"
#include "synlex/types.hpp"

namespace synlex {

// synonym -> names of the source dictionaries that list it, per record key.
using Provenance = std::map<EntryKey, std::map<std::string, std::set<std::string>>>;

struct UnionResult {
  SynonymDictionary dict;  // flat synonym sets; source groupings not carried
  Provenance provenance;
};

// Per (headword, usage): union of the source dictionaries' synonym sets.
// Throws ValidationError when given no dictionaries.
UnionResult union_synonyms(const std::vector<SynonymDictionary>& dicts);

struct MappedSynonym {
  std::string synonym;
  double score = 0.0;
  std::set<std::string> sources;
};

struct MergedSense {
  Definition definition;
  std::vector<MappedSynonym> synonyms;  // sorted by synonym
};

struct MergedEntry {
  std::string headword;
  Usage usage = Usage::NonReflexive;
  std::vector<MergedSense> senses;  // definition order of the source entry
};

struct MergedLexicon {
  std::string name;
  std::vector<MergedEntry> entries;  // sorted by (headword, usage)
};

struct MergeConfig {
  MappingConfig mapping;
  bool prune_empty = false;  // drop definitions no synonym mapped to
};

struct MergeOutcome {
  MergedLexicon lexicon;
  std::vector<MapDiagnostic> diagnostics;
};

// Unions the sources, filters them against the definitional dictionary, runs
// the mapper, and regroups the triples by definition.
MergeOutcome build_merged(const DefinitionalDictionary& defs,
                          const std::vector<SynonymDictionary>& dicts,
                          const MergeConfig& config);

nlohmann::json to_json(const MergedLexicon& lex);

struct CoverageRow {
  std::string source;
  std::size_t verbs = 0;     // (headword, usage) records present in defs
  std::size_t nonrefl = 0;
  std::size_t refl = 0;
  double syn_per_verb = 0.0;  // mean synonyms per verb record
};

struct CoverageStats {
  std::vector<CoverageRow> per_source;
  CoverageRow merged;  // source label "ALL"
};

// Counts verbs present in both the definitional dictionary and each source,
// split by usage, with the mean synonym count per verb; the merged row uses
// the union of all sources.
CoverageStats coverage(const DefinitionalDictionary& defs,
                       const std::vector<SynonymDictionary>& dicts);

// Columns: source, verbs, nonrefl, refl, syn_per_verb (2 decimals).
void write_coverage_tsv(std::ostream& out, const CoverageStats& stats);

}  // namespace synlex

#endif

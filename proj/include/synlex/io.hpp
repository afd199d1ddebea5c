#ifndef SYNLEX_IO_HPP
#define SYNLEX_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "synlex/types.hpp"

namespace synlex {

struct IngestWarning {
  std::string where;    // "entry projeter/nonrefl"
  std::string message;  // "dropped: no contentful definition"
};

template <typename Dict>
struct IngestResult {
  Dict dict;
  std::vector<IngestWarning> warnings;
};

// Definitional dictionary interchange file (JSON):
//   {"name": ..., "entries": [{"headword", "usage": "refl"|"nonrefl",
//     "definitions": [{"id", "gloss", "tokens": [{"surface","lemma","pos"}],
//                      "synonyms": [...], "domains": [...]}]}]}
// Non-contentful definitions are dropped; entries left without any
// contentful definition are dropped with a warning.
IngestResult<DefinitionalDictionary> ingest_definitional(
    const std::filesystem::path& path);

// Synonym dictionary interchange file (JSON):
//   {"name": ..., "records": [{"headword", "usage",
//                              "senses": [["syn1","syn2"],["syn3"]]}]}
// Sense groups are flattened into the record's synonym set (groups kept as
// metadata); duplicates collapse; a headword listed among its own synonyms is
// a validation error.
IngestResult<SynonymDictionary> ingest_synonyms(
    const std::filesystem::path& path);

// In-memory variants used by the file ingesters and by tests.
DefinitionalDictionary parse_definitional(const nlohmann::json& doc,
                                          std::vector<IngestWarning>* warnings);
SynonymDictionary parse_synonyms(const nlohmann::json& doc,
                                 std::vector<IngestWarning>* warnings);

struct FilterReport {
  std::size_t removed_synonyms = 0;  // synonym slots dropped across records
  std::size_t removed_records = 0;   // records dropped (headword missing or emptied)
};

struct FilterResult {
  SynonymDictionary dict;
  FilterReport report;
};

// Keeps only headwords and synonyms that have a definitional entry under any
// usage. Records whose synonym set empties out are removed. Idempotent.
FilterResult filter_against(const SynonymDictionary& syns,
                            const DefinitionalDictionary& defs);

// Reference annotation file: TSV with header
//   headword<TAB>usage<TAB>synonym<TAB>definition_id
// Every triple is validated against the companion dictionaries; offenders are
// collected and reported together. The annotator name is the file stem.
ReferenceAnnotation ingest_reference(const std::filesystem::path& path,
                                     const DefinitionalDictionary& defs,
                                     const SynonymDictionary& syns);

nlohmann::json to_json(const DefinitionalDictionary& dict);
nlohmann::json to_json(const SynonymDictionary& dict);

// Structural equality used by round-trip tests: order-insensitive on sets and
// sense groupings, order-sensitive on token and definition lists.
bool equivalent(const DefinitionalDictionary& a,
                const DefinitionalDictionary& b);
bool equivalent(const SynonymDictionary& a, const SynonymDictionary& b);

// Reads a whole file; throws ParseError if unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace synlex

#endif

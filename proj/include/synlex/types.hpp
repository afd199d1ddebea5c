#ifndef SYNLEX_TYPES_HPP
#define SYNLEX_TYPES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace synlex {

enum class Pos { Noun, Verb, Adj, Adv, Prep, Det, Pron, Conj, Other };

std::optional<Pos> parse_pos(std::string_view s);  // "NOUN", "VERB", ...
std::string_view pos_name(Pos p);

// Content words; everything else is filtered out of definition indexes.
inline bool is_open_class(Pos p) {
  return p == Pos::Noun || p == Pos::Verb || p == Pos::Adj || p == Pos::Adv;
}

enum class Usage { NonReflexive, Reflexive };

std::optional<Usage> parse_usage(std::string_view s);  // "nonrefl" | "refl"
std::string_view usage_name(Usage u);

struct Token {
  std::string surface;
  std::string lemma;  // normalized (see text::normalize_lemma)
  Pos pos = Pos::Other;

  bool operator==(const Token&) const = default;
};

// Definition ids are dot-paths of positive integers, e.g. "2.1.3".
// Returns the parsed components or nullopt if malformed.
std::optional<std::vector<int>> parse_def_id(std::string_view id);

// Numeric per-component order: "2" < "10", "1.2" < "1.10". Both ids must be
// valid dot-paths.
bool def_id_less(std::string_view a, std::string_view b);

struct Definition {
  std::string id;
  std::string gloss;
  std::vector<Token> tokens;
  std::vector<std::string> synonyms;  // embedded synonym lemmas, normalized
  std::vector<std::string> domains;   // domain labels, normalized

  // A definition survives ingestion only if it carries some content.
  bool contentful() const {
    return !tokens.empty() || !synonyms.empty() || !domains.empty();
  }
};

struct VerbEntry {
  std::string headword;  // normalized
  Usage usage = Usage::NonReflexive;
  std::vector<Definition> definitions;

  const Definition* find_definition(std::string_view id) const;
};

struct EntryKey {
  std::string headword;
  Usage usage = Usage::NonReflexive;

  auto operator<=>(const EntryKey&) const = default;
};

struct DefinitionalDictionary {
  std::string name;
  std::map<EntryKey, VerbEntry> entries;

  const VerbEntry* find(std::string_view headword, Usage u) const;
  // Any-usage membership, used when filtering synonym dictionaries.
  bool has_headword(std::string_view lemma) const;
  std::size_t definition_count() const;
};

struct SynonymRecord {
  std::string headword;  // normalized
  Usage usage = Usage::NonReflexive;
  std::set<std::string> synonyms;  // flat, normalized; never contains headword
  // Source sense grouping when the dictionary provides one; the flat set is
  // always the union of these groups.
  std::vector<std::vector<std::string>> senses;
};

struct SynonymDictionary {
  std::string name;
  std::map<EntryKey, SynonymRecord> records;

  const SynonymRecord* find(std::string_view headword, Usage u) const;
  std::size_t synonym_count() const;
};

struct RefTriple {
  std::string headword;
  Usage usage = Usage::NonReflexive;
  std::string synonym;
  std::string definition_id;

  auto operator<=>(const RefTriple&) const = default;
};

struct ReferenceAnnotation {
  std::string annotator;
  std::set<RefTriple> triples;
};

}  // namespace synlex

#endif

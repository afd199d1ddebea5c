#include "synlex/types.hpp"

#include <algorithm>

namespace synlex {

std::optional<Pos> parse_pos(std::string_view s) {
  if (s == "NOUN") return Pos::Noun;
  if (s == "VERB") return Pos::Verb;
  if (s == "ADJ") return Pos::Adj;
  if (s == "ADV") return Pos::Adv;
  if (s == "PREP") return Pos::Prep;
  if (s == "DET") return Pos::Det;
  if (s == "PRON") return Pos::Pron;
  if (s == "CONJ") return Pos::Conj;
  if (s == "OTHER") return Pos::Other;
  return std::nullopt;
}

std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Prep: return "PREP";
    case Pos::Det: return "DET";
    case Pos::Pron: return "PRON";
    case Pos::Conj: return "CONJ";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<Usage> parse_usage(std::string_view s) {
  if (s == "nonrefl") return Usage::NonReflexive;
  if (s == "refl") return Usage::Reflexive;
  return std::nullopt;
}

std::string_view usage_name(Usage u) {
  return u == Usage::Reflexive ? "refl" : "nonrefl";
}

std::optional<std::vector<int>> parse_def_id(std::string_view id) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < id.size()) {
    std::size_t start = i;
    long value = 0;
    while (i < id.size() && id[i] >= '0' && id[i] <= '9') {
      value = value * 10 + (id[i] - '0');
      if (value > 1'000'000) return std::nullopt;
      ++i;
    }
    if (i == start || value < 1) return std::nullopt;
    parts.push_back(static_cast<int>(value));
    if (i < id.size()) {
      if (id[i] != '.') return std::nullopt;
      ++i;
      if (i == id.size()) return std::nullopt;  // trailing dot
    }
  }
  if (parts.empty()) return std::nullopt;
  return parts;
}

bool def_id_less(std::string_view a, std::string_view b) {
  auto pa = parse_def_id(a);
  auto pb = parse_def_id(b);
  if (!pa || !pb) return a < b;  // malformed ids fall back to text order
  return *pa < *pb;
}

const Definition* VerbEntry::find_definition(std::string_view id) const {
  for (const auto& d : definitions)
    if (d.id == id) return &d;
  return nullptr;
}

const VerbEntry* DefinitionalDictionary::find(std::string_view headword,
                                              Usage u) const {
  auto it = entries.find(EntryKey{std::string(headword), u});
  return it == entries.end() ? nullptr : &it->second;
}

bool DefinitionalDictionary::has_headword(std::string_view lemma) const {
  auto it = entries.lower_bound(
      EntryKey{std::string(lemma), Usage::NonReflexive});
  return it != entries.end() && it->first.headword == lemma;
}

std::size_t DefinitionalDictionary::definition_count() const {
  std::size_t n = 0;
  for (const auto& [key, entry] : entries) n += entry.definitions.size();
  return n;
}

const SynonymRecord* SynonymDictionary::find(std::string_view headword,
                                             Usage u) const {
  auto it = records.find(EntryKey{std::string(headword), u});
  return it == records.end() ? nullptr : &it->second;
}

std::size_t SynonymDictionary::synonym_count() const {
  std::size_t n = 0;
  for (const auto& [key, rec] : records) n += rec.synonyms.size();
  return n;
}

}  // namespace synlex

#include "synlex/merger.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "synlex/errors.hpp"
#include "synlex/io.hpp"

namespace synlex {

UnionResult union_synonyms(const std::vector<SynonymDictionary>& dicts) {
  if (dicts.empty())
    throw ValidationError("union_synonyms needs at least one dictionary");
  UnionResult result;
  for (std::size_t i = 0; i < dicts.size(); ++i) {
    if (i > 0) result.dict.name += "+";
    result.dict.name += dicts[i].name;
  }
  for (const auto& dict : dicts) {
    for (const auto& [key, rec] : dict.records) {
      SynonymRecord& merged = result.dict.records[key];
      merged.headword = rec.headword;
      merged.usage = rec.usage;
      for (const auto& syn : rec.synonyms) {
        merged.synonyms.insert(syn);
        result.provenance[key][syn].insert(dict.name);
      }
    }
  }
  return result;
}

MergeOutcome build_merged(const DefinitionalDictionary& defs,
                          const std::vector<SynonymDictionary>& dicts,
                          const MergeConfig& config) {
  UnionResult unioned = union_synonyms(dicts);
  FilterResult filtered = filter_against(unioned.dict, defs);

  MergeOutcome outcome;
  MapResult mapped = map_all(defs, filtered.dict, config.mapping);
  outcome.diagnostics = std::move(mapped.diagnostics);

  // Triples grouped by the definition they landed on.
  std::map<EntryKey, std::map<std::string, std::vector<MappedSynonym>>> grouped;
  for (const auto& t : mapped.triples) {
    MappedSynonym ms;
    ms.synonym = t.synonym;
    ms.score = t.score;
    if (config.mapping.split_reflexive) {
      ms.sources = unioned.provenance[{t.headword, t.usage}][t.synonym];
    } else {
      for (Usage u : {Usage::NonReflexive, Usage::Reflexive}) {
        const auto& src = unioned.provenance[{t.headword, u}][t.synonym];
        ms.sources.insert(src.begin(), src.end());
      }
    }
    grouped[{t.headword, t.usage}][t.definition_id].push_back(std::move(ms));
  }

  std::set<std::string> headwords;
  for (const auto& [key, rec] : filtered.dict.records)
    headwords.insert(rec.headword);

  outcome.lexicon.name = unioned.dict.name;
  for (const auto& [key, entry] : defs.entries) {
    if (!headwords.count(entry.headword)) continue;
    MergedEntry merged_entry;
    merged_entry.headword = entry.headword;
    merged_entry.usage = entry.usage;
    auto git = grouped.find(key);
    for (const auto& d : entry.definitions) {
      MergedSense sense;
      sense.definition = d;
      if (git != grouped.end()) {
        auto dit = git->second.find(d.id);
        if (dit != git->second.end()) {
          sense.synonyms = dit->second;
          std::sort(sense.synonyms.begin(), sense.synonyms.end(),
                    [](const MappedSynonym& a, const MappedSynonym& b) {
                      return a.synonym < b.synonym;
                    });
        }
      }
      if (config.prune_empty && sense.synonyms.empty()) continue;
      merged_entry.senses.push_back(std::move(sense));
    }
    if (config.prune_empty && merged_entry.senses.empty()) continue;
    outcome.lexicon.entries.push_back(std::move(merged_entry));
  }
  return outcome;
}

nlohmann::json to_json(const MergedLexicon& lex) {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& entry : lex.entries) {
    json jdefs = json::array();
    for (const auto& sense : entry.senses) {
      const Definition& d = sense.definition;
      json jtokens = json::array();
      for (const auto& t : d.tokens)
        jtokens.push_back({{"surface", t.surface},
                           {"lemma", t.lemma},
                           {"pos", std::string(pos_name(t.pos))}});
      json jmapped = json::array();
      for (const auto& ms : sense.synonyms)
        jmapped.push_back({{"synonym", ms.synonym},
                           {"score", ms.score},
                           {"sources", ms.sources}});
      jdefs.push_back({{"id", d.id},
                       {"gloss", d.gloss},
                       {"tokens", std::move(jtokens)},
                       {"synonyms", d.synonyms},
                       {"domains", d.domains},
                       {"synonyms_mapped", std::move(jmapped)}});
    }
    entries.push_back({{"headword", entry.headword},
                       {"usage", std::string(usage_name(entry.usage))},
                       {"definitions", std::move(jdefs)}});
  }
  return {{"name", lex.name}, {"entries", std::move(entries)}};
}

namespace {

CoverageRow coverage_row(const std::string& label,
                         const SynonymDictionary& filtered) {
  CoverageRow row;
  row.source = label;
  row.verbs = filtered.records.size();
  std::size_t synonyms = 0;
  for (const auto& [key, rec] : filtered.records) {
    if (rec.usage == Usage::Reflexive)
      row.refl += 1;
    else
      row.nonrefl += 1;
    synonyms += rec.synonyms.size();
  }
  row.syn_per_verb = row.verbs == 0 ? 0.0
                                    : static_cast<double>(synonyms) /
                                          static_cast<double>(row.verbs);
  return row;
}

}  // namespace

CoverageStats coverage(const DefinitionalDictionary& defs,
                       const std::vector<SynonymDictionary>& dicts) {
  CoverageStats stats;
  for (const auto& dict : dicts) {
    FilterResult filtered = filter_against(dict, defs);
    stats.per_source.push_back(coverage_row(dict.name, filtered.dict));
  }
  if (!dicts.empty()) {
    UnionResult unioned = union_synonyms(dicts);
    FilterResult filtered = filter_against(unioned.dict, defs);
    stats.merged = coverage_row("ALL", filtered.dict);
  } else {
    stats.merged = coverage_row("ALL", SynonymDictionary{});
  }
  return stats;
}

void write_coverage_tsv(std::ostream& out, const CoverageStats& stats) {
  out << "source\tverbs\tnonrefl\trefl\tsyn_per_verb\n";
  char buf[32];
  auto emit = [&](const CoverageRow& row) {
    std::snprintf(buf, sizeof(buf), "%.2f", row.syn_per_verb);
    out << row.source << '\t' << row.verbs << '\t' << row.nonrefl << '\t'
        << row.refl << '\t' << buf << '\n';
  };
  for (const auto& row : stats.per_source) emit(row);
  emit(stats.merged);
}

}  // namespace synlex

#include "synlex/mapper.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "synlex/errors.hpp"
#include "synlex/io.hpp"
#include "synlex/text.hpp"

namespace synlex {

std::optional<TiePolicy> parse_tie_policy(std::string_view s) {
  if (s == "alltied") return TiePolicy::AllTied;
  if (s == "firstbyid") return TiePolicy::FirstById;
  return std::nullopt;
}

std::string_view tie_policy_name(TiePolicy p) {
  return p == TiePolicy::AllTied ? "alltied" : "firstbyid";
}

bool triple_order(const MappingTriple& a, const MappingTriple& b) {
  if (a.headword != b.headword) return a.headword < b.headword;
  if (a.usage != b.usage)
    return usage_name(a.usage) < usage_name(b.usage);
  if (a.synonym != b.synonym) return a.synonym < b.synonym;
  return a.definition_id < b.definition_id;
}

namespace {

struct UnitDef {
  Usage usage = Usage::NonReflexive;
  const Definition* def = nullptr;
  DefinitionIndex index;
};

// One comparison unit: a verb with its candidate definitions and the
// synonyms to place. Under split_reflexive this is one (headword, usage)
// entry with its same-usage record; otherwise it combines both usages.
struct Unit {
  std::string headword;
  std::vector<UnitDef> defs;
  std::map<std::string, std::set<Usage>> synonyms;  // synonym -> record usages
  std::optional<Usage> gloss_scope;  // usage restriction for synonym glosses
};

struct UnitOutput {
  std::vector<MappingTriple> triples;
  std::vector<MapDiagnostic> diagnostics;
};

void add_entry_defs(Unit& unit, const VerbEntry& entry) {
  for (const auto& d : entry.definitions)
    unit.defs.push_back({entry.usage, &d, build_index(d)});
}

std::vector<Unit> build_units(const DefinitionalDictionary& defs,
                              const SynonymDictionary& syns,
                              bool split_reflexive,
                              std::vector<MapDiagnostic>& diagnostics) {
  std::vector<Unit> units;
  if (split_reflexive) {
    for (const auto& [key, rec] : syns.records) {
      const VerbEntry* entry = defs.find(rec.headword, rec.usage);
      if (!entry) {
        diagnostics.push_back({rec.headword, rec.usage, "",
                               "no definitional entry for this usage"});
        continue;
      }
      Unit unit;
      unit.headword = rec.headword;
      unit.gloss_scope = rec.usage;
      add_entry_defs(unit, *entry);
      for (const auto& s : rec.synonyms) unit.synonyms[s].insert(rec.usage);
      units.push_back(std::move(unit));
    }
    return units;
  }

  // Base procedure: one unit per headword spanning both usages.
  std::map<std::string, Unit> by_headword;
  for (const auto& [key, rec] : syns.records) {
    Unit& unit = by_headword[rec.headword];
    unit.headword = rec.headword;
    for (const auto& s : rec.synonyms) unit.synonyms[s].insert(rec.usage);
  }
  for (auto& [headword, unit] : by_headword) {
    for (Usage u : {Usage::NonReflexive, Usage::Reflexive})
      if (const VerbEntry* entry = defs.find(headword, u))
        add_entry_defs(unit, *entry);
    if (unit.defs.empty()) {
      diagnostics.push_back(
          {headword, Usage::NonReflexive, "", "no definitional entry"});
      continue;
    }
    units.push_back(std::move(unit));
  }
  return units;
}

// Shared read-only state for one run.
struct ScoringContext {
  const DefinitionalDictionary& defs;
  const CorpusStats* stats = nullptr;
  const GlobalVectorSpace* global = nullptr;
};

UnitOutput score_unit(const Unit& unit, const ScoringContext& ctx,
                      const MappingConfig& config) {
  UnitOutput out;
  const Measure m = config.measure;

  // Merged gloss indexes; a synonym without glosses in scope is reported and
  // never scored (distinct from scoring zero everywhere).
  std::map<std::string, DefinitionIndex> merged;
  for (const auto& [syn, record_usages] : unit.synonyms) {
    auto idx = merged_synonym_index(syn, ctx.defs, unit.gloss_scope);
    if (!idx) {
      out.diagnostics.push_back({unit.headword,
                                 unit.gloss_scope.value_or(Usage::NonReflexive),
                                 syn, "synonym without glosses"});
      continue;
    }
    merged[syn] = std::move(*idx);
  }

  VerbVectorSpace verb_space;
  std::vector<SparseVector> def_so;
  std::map<std::string, SparseVector> syn_so;
  if (m == Measure::WV1) {
    std::vector<DefinitionIndex> def_indexes;
    for (const auto& ud : unit.defs) def_indexes.push_back(ud.index);
    verb_space = build_verb_space(def_indexes, merged, *ctx.stats);
  } else if (m == Measure::WV2 || m == Measure::WV3) {
    for (const auto& ud : unit.defs)
      def_so.push_back(ctx.global->second_order(ud.index));
    for (const auto& [syn, idx] : merged)
      syn_so[syn] = ctx.global->second_order(idx);
  }

  for (const auto& [syn, idx] : merged) {
    std::vector<double> scores(unit.defs.size(), 0.0);
    for (std::size_t i = 0; i < unit.defs.size(); ++i) {
      switch (m) {
        case Measure::Over1:
          scores[i] = static_cast<double>(over1(unit.defs[i].index, idx));
          break;
        case Measure::Over2:
          scores[i] = static_cast<double>(over2(unit.defs[i].index, idx));
          break;
        case Measure::Over3:
          scores[i] = over3(unit.defs[i].index, idx);
          break;
        case Measure::WV1:
          scores[i] = wv1(verb_space, i, syn);
          break;
        case Measure::WV2:
        case Measure::WV3:
          scores[i] = def_so[i].dot(syn_so.at(syn));
          break;
      }
    }
    const double best = *std::max_element(scores.begin(), scores.end());
    if (!(best > 0.0)) {
      if (config.unmapped_policy == UnmappedPolicy::Report)
        out.diagnostics.push_back(
            {unit.headword, unit.gloss_scope.value_or(Usage::NonReflexive),
             syn, "all similarity scores are zero"});
      continue;
    }
    std::vector<std::size_t> winners;
    for (std::size_t i = 0; i < scores.size(); ++i)
      if (scores[i] == best) winners.push_back(i);
    if (config.tie_policy == TiePolicy::FirstById && winners.size() > 1) {
      auto least = *std::min_element(
          winners.begin(), winners.end(), [&](std::size_t x, std::size_t y) {
            const auto& dx = unit.defs[x];
            const auto& dy = unit.defs[y];
            if (dx.def->id != dy.def->id)
              return def_id_less(dx.def->id, dy.def->id);
            return dx.usage < dy.usage;
          });
      winners = {least};
    }
    for (std::size_t i : winners)
      out.triples.push_back({unit.headword, unit.defs[i].usage, syn,
                             unit.defs[i].def->id, best, m});
  }
  return out;
}

bool diagnostic_order(const MapDiagnostic& a, const MapDiagnostic& b) {
  return std::tie(a.headword, a.usage, a.synonym, a.reason) <
         std::tie(b.headword, b.usage, b.synonym, b.reason);
}

}  // namespace

MapResult map_all(const DefinitionalDictionary& defs,
                  const SynonymDictionary& syns, const MappingConfig& config) {
  MapResult result;
  if (syns.records.empty()) return result;

  std::vector<Unit> units =
      build_units(defs, syns, config.split_reflexive, result.diagnostics);

  CorpusStats stats;
  GlobalVectorSpace global;
  ScoringContext ctx{defs};
  if (config.measure == Measure::WV1 || config.measure == Measure::WV2 ||
      config.measure == Measure::WV3) {
    stats = build_stats(defs);
    ctx.stats = &stats;
    if (config.measure == Measure::WV2) {
      global = build_global_space(defs, stats, std::nullopt);
      ctx.global = &global;
    } else if (config.measure == Measure::WV3) {
      global = build_global_space(defs, stats, config.tfidf_cutoff.value_or(1.0));
      ctx.global = &global;
    }
  }

  std::vector<UnitOutput> outputs(units.size());
  const unsigned jobs =
      std::max(1u, std::min<unsigned>(config.jobs,
                                      static_cast<unsigned>(units.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < units.size(); ++i)
      outputs[i] = score_unit(units[i], ctx, config);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= units.size()) break;
        outputs[i] = score_unit(units[i], ctx, config);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (auto& o : outputs) {
    result.triples.insert(result.triples.end(), o.triples.begin(),
                          o.triples.end());
    result.diagnostics.insert(result.diagnostics.end(), o.diagnostics.begin(),
                              o.diagnostics.end());
  }
  std::sort(result.triples.begin(), result.triples.end(), triple_order);
  std::sort(result.diagnostics.begin(), result.diagnostics.end(),
            diagnostic_order);
  return result;
}

std::vector<MappingTriple> map_synonym(const VerbEntry& verb,
                                       const std::string& synonym,
                                       const DefinitionalDictionary& defs,
                                       const MappingConfig& config) {
  Unit unit;
  unit.headword = verb.headword;
  unit.gloss_scope =
      config.split_reflexive ? std::optional<Usage>(verb.usage) : std::nullopt;
  add_entry_defs(unit, verb);
  unit.synonyms[synonym].insert(verb.usage);

  CorpusStats stats;
  GlobalVectorSpace global;
  ScoringContext ctx{defs};
  if (config.measure == Measure::WV1 || config.measure == Measure::WV2 ||
      config.measure == Measure::WV3) {
    stats = build_stats(defs);
    ctx.stats = &stats;
    if (config.measure == Measure::WV2) {
      global = build_global_space(defs, stats, std::nullopt);
      ctx.global = &global;
    } else if (config.measure == Measure::WV3) {
      global = build_global_space(defs, stats, config.tfidf_cutoff.value_or(1.0));
      ctx.global = &global;
    }
  }
  UnitOutput out = score_unit(unit, ctx, config);
  std::sort(out.triples.begin(), out.triples.end(), triple_order);
  return out.triples;
}

std::pair<DefinitionalDictionary, SynonymDictionary> split_usages(
    const DefinitionalDictionary& defs, const SynonymDictionary& syns) {
  // Entries and records are keyed by (headword, usage) from ingestion, so the
  // partition is a regrouping that preserves every definition and synonym.
  DefinitionalDictionary out_defs;
  out_defs.name = defs.name;
  for (const auto& [key, entry] : defs.entries)
    out_defs.entries[EntryKey{entry.headword, entry.usage}] = entry;
  SynonymDictionary out_syns;
  out_syns.name = syns.name;
  for (const auto& [key, rec] : syns.records)
    out_syns.records[EntryKey{rec.headword, rec.usage}] = rec;
  return {std::move(out_defs), std::move(out_syns)};
}

void write_triples_tsv(std::ostream& out,
                       const std::vector<MappingTriple>& triples) {
  std::vector<MappingTriple> sorted = triples;
  std::sort(sorted.begin(), sorted.end(), triple_order);
  out << "headword\tusage\tsynonym\tdefinition_id\tscore\tmeasure\n";
  char buf[64];
  for (const auto& t : sorted) {
    std::snprintf(buf, sizeof(buf), "%.6f", t.score);
    out << t.headword << '\t' << usage_name(t.usage) << '\t' << t.synonym
        << '\t' << t.definition_id << '\t' << buf << '\t'
        << measure_name(t.measure) << '\n';
  }
}

std::vector<MappingTriple> read_triples_tsv(
    const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  std::vector<MappingTriple> triples;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (lineno == 1) {
      if (fields != std::vector<std::string>{"headword", "usage", "synonym",
                                             "definition_id", "score",
                                             "measure"})
        throw ParseError(path.string(), 1, 1, "bad triples TSV header");
      continue;
    }
    if (fields.size() != 6)
      throw ParseError(path.string(), lineno, 1,
                       "expected 6 columns, got " +
                           std::to_string(fields.size()));
    MappingTriple t;
    t.headword = text::normalize_lemma(fields[0]);
    auto u = parse_usage(fields[1]);
    if (!u)
      throw ParseError(path.string(), lineno, 1, "bad usage " + fields[1]);
    t.usage = *u;
    t.synonym = text::normalize_lemma(fields[2]);
    t.definition_id = fields[3];
    double score = 0.0;
    auto [p, ec] = std::from_chars(fields[4].data(),
                                   fields[4].data() + fields[4].size(), score);
    if (ec != std::errc() || p != fields[4].data() + fields[4].size())
      throw ParseError(path.string(), lineno, 1, "bad score " + fields[4]);
    t.score = score;
    auto meas = parse_measure(fields[5]);
    if (!meas)
      throw ParseError(path.string(), lineno, 1, "bad measure " + fields[5]);
    t.measure = *meas;
    triples.push_back(std::move(t));
  }
  return triples;
}

}  // namespace synlex

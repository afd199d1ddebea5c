// synlex command line: ingest/validate lexicon files, map synonyms onto
// definitions, evaluate against references, and merge synonym dictionaries.
//
// Exit codes: 0 success, 1 validation error, 2 parse error, 64 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "synlex/errors.hpp"
#include "synlex/evaluator.hpp"
#include "synlex/index.hpp"
#include "synlex/io.hpp"
#include "synlex/manifest.hpp"
#include "synlex/mapper.hpp"
#include "synlex/merger.hpp"

namespace {

using namespace synlex;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::string defs_path;
  std::vector<std::string> syns_paths;
  std::string out_path;
};

struct MapOpts {
  std::string measure = "over1";
  bool split_reflexive = false;
  std::string tie_policy = "alltied";
  double tfidf_cutoff = 1.0;
  bool cutoff_given = false;
  std::string unmapped = "report";
  unsigned jobs = 1;
  std::string dump_stats;
};

MappingConfig make_mapping_config(const MapOpts& opts) {
  MappingConfig config;
  auto measure = parse_measure(opts.measure);
  if (!measure)
    throw CLI::ValidationError("--measure",
                               "unknown measure \"" + opts.measure + "\"");
  config.measure = *measure;
  auto tie = parse_tie_policy(opts.tie_policy);
  if (!tie)
    throw CLI::ValidationError("--tie-policy",
                               "unknown tie policy \"" + opts.tie_policy + "\"");
  config.tie_policy = *tie;
  config.split_reflexive = opts.split_reflexive;
  if (config.measure == Measure::WV3)
    config.tfidf_cutoff = opts.tfidf_cutoff;
  else if (opts.cutoff_given)
    throw CLI::ValidationError("--tfidf-cutoff",
                               "only meaningful with --measure wv3");
  if (opts.unmapped == "drop")
    config.unmapped_policy = UnmappedPolicy::Drop;
  else if (opts.unmapped == "report")
    config.unmapped_policy = UnmappedPolicy::Report;
  else
    throw CLI::ValidationError("--unmapped", "expected drop or report");
  config.jobs = opts.jobs == 0 ? 1 : opts.jobs;
  return config;
}

nlohmann::json mapping_config_json(const MappingConfig& config) {
  nlohmann::json j = {
      {"measure", std::string(measure_name(config.measure))},
      {"split_reflexive", config.split_reflexive},
      {"tie_policy", std::string(tie_policy_name(config.tie_policy))},
      {"jobs", config.jobs},
  };
  if (config.tfidf_cutoff)
    j["tfidf_cutoff"] = *config.tfidf_cutoff;
  else
    j["tfidf_cutoff"] = nullptr;
  return j;
}

void write_manifest_for(const std::string& out_path, RunManifest manifest) {
  write_atomic(out_path + ".manifest.json", manifest.to_json().dump(2) + "\n");
}

DefinitionalDictionary load_defs(const std::string& path,
                                 std::vector<IngestWarning>* warnings) {
  auto result = ingest_definitional(path);
  if (warnings)
    warnings->insert(warnings->end(), result.warnings.begin(),
                     result.warnings.end());
  return std::move(result.dict);
}

// Loads every synonym dictionary and filters it against the definitional one.
std::vector<SynonymDictionary> load_filtered_syns(
    const std::vector<std::string>& paths, const DefinitionalDictionary& defs,
    std::vector<IngestWarning>* warnings) {
  std::vector<SynonymDictionary> dicts;
  for (const auto& p : paths) {
    auto result = ingest_synonyms(p);
    if (warnings)
      warnings->insert(warnings->end(), result.warnings.begin(),
                       result.warnings.end());
    dicts.push_back(filter_against(result.dict, defs).dict);
  }
  return dicts;
}

SynonymDictionary merge_loaded(const std::vector<SynonymDictionary>& dicts) {
  if (dicts.size() == 1) return dicts.front();
  return union_synonyms(dicts).dict;
}

void print_prf(const std::string& label, double r, double p, double f) {
  std::printf("%-10s %5s %5s %5s\n", "measure", "R", "P", "F");
  std::printf("%-10s %5.2f %5.2f %5.2f\n", label.c_str(), r, p, f);
}

int cmd_ingest(const CommonOpts& common,
               const std::vector<std::string>& ref_paths) {
  std::vector<IngestWarning> warnings;
  DefinitionalDictionary defs = load_defs(common.defs_path, &warnings);

  std::vector<SynonymDictionary> syns;
  for (const auto& p : common.syns_paths) {
    auto result = ingest_synonyms(p);
    warnings.insert(warnings.end(), result.warnings.begin(),
                    result.warnings.end());
    syns.push_back(std::move(result.dict));
  }
  if (!ref_paths.empty()) {
    if (syns.empty())
      throw CLI::ValidationError("--ref", "requires at least one --syns");
    SynonymDictionary merged = merge_loaded(syns);
    SynonymDictionary filtered = filter_against(merged, defs).dict;
    for (const auto& p : ref_paths) ingest_reference(p, defs, filtered);
  }

  std::filesystem::path outdir = common.out_path;
  std::filesystem::create_directories(outdir);
  write_atomic(outdir / "defs.json", to_json(defs).dump(2) + "\n");
  for (std::size_t i = 0; i < syns.size(); ++i)
    write_atomic(outdir / ("syns_" + std::to_string(i) + ".json"),
                 to_json(syns[i]).dump(2) + "\n");

  nlohmann::json jwarn = nlohmann::json::array();
  for (const auto& w : warnings)
    jwarn.push_back({{"where", w.where}, {"message", w.message}});
  nlohmann::json report = {{"warning_count", warnings.size()},
                           {"warnings", std::move(jwarn)}};
  write_atomic(outdir / "report.json", report.dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "ingest";
  manifest.add_input(common.defs_path);
  for (const auto& p : common.syns_paths) manifest.add_input(p);
  for (const auto& p : ref_paths) manifest.add_input(p);
  manifest.config = nlohmann::json::object();
  write_atomic(outdir / "manifest.json", manifest.to_json().dump(2) + "\n");

  std::printf("ingested %zu entries, %zu definitions, %zu warnings\n",
              defs.entries.size(), defs.definition_count(), warnings.size());
  for (const auto& w : warnings)
    std::fprintf(stderr, "warning: %s: %s\n", w.where.c_str(),
                 w.message.c_str());
  return kExitOk;
}

int cmd_map(const CommonOpts& common, const MapOpts& opts) {
  MappingConfig config = make_mapping_config(opts);
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  std::vector<SynonymDictionary> dicts =
      load_filtered_syns(common.syns_paths, defs, nullptr);
  SynonymDictionary syns = merge_loaded(dicts);

  if (!opts.dump_stats.empty()) {
    CorpusStats stats = build_stats(defs);
    nlohmann::json jstats = {{"doc_count", stats.doc_count},
                             {"doc_freq", stats.doc_freq},
                             {"total_tf", stats.total_tf}};
    nlohmann::json jtfidf = nlohmann::json::object();
    for (const auto& lemma : stats.vocabulary())
      jtfidf[lemma] = stats.tfidf(lemma);
    jstats["tfidf"] = std::move(jtfidf);
    write_atomic(opts.dump_stats, jstats.dump(2) + "\n");
  }

  MapResult result = map_all(defs, syns, config);

  std::ostringstream tsv;
  write_triples_tsv(tsv, result.triples);
  write_atomic(common.out_path, tsv.str());

  RunManifest manifest;
  manifest.command = "map";
  manifest.add_input(common.defs_path);
  for (const auto& p : common.syns_paths) manifest.add_input(p);
  manifest.config = mapping_config_json(config);
  write_manifest_for(common.out_path, std::move(manifest));

  for (const auto& d : result.diagnostics)
    std::fprintf(stderr, "diagnostic: %s/%s %s: %s\n", d.headword.c_str(),
                 std::string(usage_name(d.usage)).c_str(), d.synonym.c_str(),
                 d.reason.c_str());
  std::printf("%zu triples, %zu diagnostics -> %s\n", result.triples.size(),
              result.diagnostics.size(), common.out_path.c_str());
  return kExitOk;
}

int cmd_eval(const CommonOpts& common, const std::string& system_path,
             const std::string& ref_path) {
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  SynonymDictionary syns =
      merge_loaded(load_filtered_syns(common.syns_paths, defs, nullptr));
  ReferenceAnnotation reference = ingest_reference(ref_path, defs, syns);

  std::vector<MappingTriple> system = read_triples_tsv(system_path);
  // System triples must refer to real definitions; synonyms may come from
  // either usage's record (unsplit runs produce cross-usage triples).
  std::vector<std::string> offenders;
  for (const auto& t : system) {
    const VerbEntry* entry = defs.find(t.headword, t.usage);
    if (!entry || !entry->find_definition(t.definition_id)) {
      offenders.push_back(t.headword + "/" +
                          std::string(usage_name(t.usage)) + "/" +
                          t.definition_id);
      continue;
    }
    bool known = false;
    for (Usage u : {Usage::NonReflexive, Usage::Reflexive})
      if (const SynonymRecord* rec = syns.find(t.headword, u))
        if (rec->synonyms.count(t.synonym)) known = true;
    if (!known) offenders.push_back(t.headword + ": " + t.synonym);
  }
  if (!offenders.empty()) {
    std::string msg = "system triples do not match the dictionaries:";
    for (const auto& o : offenders) msg += "\n  " + o;
    throw ValidationError(msg);
  }

  EvalReport report = evaluate(system, reference);
  std::string label = system.empty()
                          ? "empty"
                          : std::string(measure_name(system.front().measure));
  for (const auto& t : system)
    if (measure_name(t.measure) != label) label = "mixed";
  print_prf(label, report.recall, report.precision, report.f1);
  if (!common.out_path.empty())
    write_atomic(common.out_path, to_json(report).dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "eval";
  manifest.add_input(common.defs_path);
  for (const auto& p : common.syns_paths) manifest.add_input(p);
  manifest.add_input(system_path);
  manifest.add_input(ref_path);
  manifest.config = nlohmann::json::object();
  if (!common.out_path.empty())
    write_manifest_for(common.out_path, std::move(manifest));
  return kExitOk;
}

int cmd_baseline(const CommonOpts& common, const std::string& ref_path,
                 std::size_t trials, std::uint64_t seed) {
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  SynonymDictionary syns =
      merge_loaded(load_filtered_syns(common.syns_paths, defs, nullptr));
  ReferenceAnnotation reference = ingest_reference(ref_path, defs, syns);

  BaselineReport report = random_baseline(defs, syns, reference, trials, seed);
  print_prf("baseline", report.mean_recall, report.mean_precision,
            report.mean_f1);
  if (!common.out_path.empty()) {
    write_atomic(common.out_path, to_json(report).dump(2) + "\n");
    RunManifest manifest;
    manifest.command = "baseline";
    manifest.add_input(common.defs_path);
    for (const auto& p : common.syns_paths) manifest.add_input(p);
    manifest.add_input(ref_path);
    manifest.config = {{"trials", trials}, {"seed", seed}};
    write_manifest_for(common.out_path, std::move(manifest));
  }
  return kExitOk;
}

int cmd_agree(const CommonOpts& common,
              const std::vector<std::string>& ref_paths) {
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  SynonymDictionary syns =
      merge_loaded(load_filtered_syns(common.syns_paths, defs, nullptr));

  std::vector<ReferenceAnnotation> annotations;
  for (const auto& p : ref_paths)
    annotations.push_back(ingest_reference(p, defs, syns));

  AgreementReport report = agreement(annotations, defs, syns);
  std::printf("%-24s %s\n", "annotators", "agreement");
  for (const auto& [pair, rate] : report.pairwise)
    std::printf("%-24s %.2f\n", (pair.first + "," + pair.second).c_str(),
                rate);
  std::printf("%-24s %.2f\n", "ALL", report.unanimous);
  std::printf("%-24s %zu\n", "universe", report.universe_size);
  if (!common.out_path.empty())
    write_atomic(common.out_path, to_json(report).dump(2) + "\n");
  return kExitOk;
}

int cmd_merge(const CommonOpts& common, const MapOpts& opts,
              bool prune_empty) {
  MergeConfig config;
  config.mapping = make_mapping_config(opts);
  config.prune_empty = prune_empty;
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  std::vector<SynonymDictionary> dicts;
  for (const auto& p : common.syns_paths)
    dicts.push_back(ingest_synonyms(p).dict);

  MergeOutcome outcome = build_merged(defs, dicts, config);
  write_atomic(common.out_path, to_json(outcome.lexicon).dump(2) + "\n");

  RunManifest manifest;
  manifest.command = "merge";
  manifest.add_input(common.defs_path);
  for (const auto& p : common.syns_paths) manifest.add_input(p);
  manifest.config = mapping_config_json(config.mapping);
  manifest.config["prune_empty"] = prune_empty;
  write_manifest_for(common.out_path, std::move(manifest));

  std::printf("%zu entries, %zu diagnostics -> %s\n",
              outcome.lexicon.entries.size(), outcome.diagnostics.size(),
              common.out_path.c_str());
  return kExitOk;
}

int cmd_coverage(const CommonOpts& common) {
  DefinitionalDictionary defs = load_defs(common.defs_path, nullptr);
  std::vector<SynonymDictionary> dicts;
  for (const auto& p : common.syns_paths)
    dicts.push_back(ingest_synonyms(p).dict);

  CoverageStats stats = coverage(defs, dicts);
  std::ostringstream tsv;
  write_coverage_tsv(tsv, stats);
  if (common.out_path.empty())
    std::fputs(tsv.str().c_str(), stdout);
  else
    write_atomic(common.out_path, tsv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synonym-to-definition mapping toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  MapOpts mopts;
  std::vector<std::string> ref_paths;
  std::string system_path;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool prune_empty = false;

  auto add_common = [&](CLI::App* sub, bool need_out, bool need_syns) {
    sub->add_option("--defs", common.defs_path, "definitional dictionary JSON")
        ->required();
    auto* syns = sub->add_option("--syns", common.syns_paths,
                                 "synonym dictionary JSON (repeatable)");
    if (need_syns) syns->required();
    auto* out = sub->add_option("--out", common.out_path, "output path");
    if (need_out) out->required();
  };
  auto add_map_opts = [&](CLI::App* sub) {
    sub->add_option("--measure", mopts.measure,
                    "over1|over2|over3|wv1|wv2|wv3");
    sub->add_flag("--split-reflexive", mopts.split_reflexive,
                  "restrict comparisons to the same usage");
    sub->add_option("--tie-policy", mopts.tie_policy, "alltied|firstbyid");
    sub->add_option("--tfidf-cutoff", mopts.tfidf_cutoff,
                    "dimension cutoff for wv3 (default 1.0)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--unmapped", mopts.unmapped, "drop|report");
    sub->add_option("--jobs", mopts.jobs, "worker thread cap");
  };

  auto* ingest = app.add_subcommand("ingest", "validate and normalize inputs");
  add_common(ingest, true, false);
  ingest->add_option("--ref", ref_paths, "reference TSV (repeatable)");

  auto* map_cmd = app.add_subcommand("map", "assign synonyms to definitions");
  add_common(map_cmd, true, true);
  add_map_opts(map_cmd);
  map_cmd->add_option("--dump-stats", mopts.dump_stats,
                      "write corpus statistics JSON to this path");

  auto* eval = app.add_subcommand("eval", "score a system run against a reference");
  add_common(eval, false, true);
  eval->add_option("--system", system_path, "triples TSV from map")->required();
  eval->add_option("--ref", ref_paths, "reference TSV")->required()->expected(1);

  auto* baseline = app.add_subcommand("baseline", "random assignment baseline");
  add_common(baseline, false, true);
  baseline->add_option("--ref", ref_paths, "reference TSV")->required()->expected(1);
  baseline->add_option("--trials", trials, "number of random trials");
  baseline->add_option("--seed", seed, "RNG seed");

  auto* agree = app.add_subcommand("agree", "inter-annotator agreement");
  add_common(agree, false, true);
  agree->add_option("--ref", ref_paths, "reference TSV (repeat, >= 2)")
      ->required();

  auto* merge = app.add_subcommand("merge", "build a merged sense-grouped lexicon");
  add_common(merge, true, true);
  add_map_opts(merge);
  merge->add_flag("--prune-empty", prune_empty,
                  "drop definitions no synonym mapped to");

  auto* cover = app.add_subcommand("coverage", "per-source and merged coverage");
  add_common(cover, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    mopts.cutoff_given = map_cmd->count("--tfidf-cutoff") > 0 ||
                         merge->count("--tfidf-cutoff") > 0;
    if (ingest->parsed()) return cmd_ingest(common, ref_paths);
    if (map_cmd->parsed()) return cmd_map(common, mopts);
    if (eval->parsed()) return cmd_eval(common, system_path, ref_paths.front());
    if (baseline->parsed())
      return cmd_baseline(common, ref_paths.front(), trials, seed);
    if (agree->parsed()) return cmd_agree(common, ref_paths);
    if (merge->parsed()) return cmd_merge(common, mopts, prune_empty);
    if (cover->parsed()) return cmd_coverage(common);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitUsage;
}

#include "synlex/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "synlex/errors.hpp"
#include "synlex/text.hpp"

namespace synlex {

namespace {

using nlohmann::json;

// line/column (1-based) of a byte offset, for parse error messages.
std::pair<std::size_t, std::size_t> line_col(std::string_view content,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  byte = std::min(byte, content.size());
  for (std::size_t i = 0; i < byte; ++i) {
    if (content[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json_file(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(content, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(path.string(), line, col, e.what());
  }
}

const json& require(const json& obj, const char* field,
                    const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end())
    throw ValidationError(where + ": missing field \"" + field + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* field,
                           const std::string& where) {
  const json& v = require(obj, field, where);
  if (!v.is_string())
    throw ValidationError(where + ": field \"" + field + "\" must be a string");
  return v.get<std::string>();
}

// Normalized lemma for a key field; rejects empties and control characters.
std::string lemma_field(const json& obj, const char* field,
                        const std::string& where) {
  std::string raw = require_string(obj, field, where);
  if (text::has_control_char(raw))
    throw ValidationError(where + ": field \"" + field +
                          "\" contains a control character");
  std::string norm = text::normalize_lemma(raw);
  if (norm.empty())
    throw ValidationError(where + ": field \"" + field + "\" is empty");
  return norm;
}

Usage usage_field(const json& obj, const std::string& where) {
  std::string s = require_string(obj, "usage", where);
  auto u = parse_usage(s);
  if (!u)
    throw ValidationError(where + ": usage must be \"refl\" or \"nonrefl\", got \"" +
                          s + "\"");
  return *u;
}

std::vector<std::string> lemma_list(const json& arr, const std::string& where,
                                    const char* what) {
  if (!arr.is_array())
    throw ValidationError(where + ": " + what + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw ValidationError(where + ": " + what + " entries must be strings");
    std::string raw = v.get<std::string>();
    if (text::has_control_char(raw))
      throw ValidationError(where + ": " + what +
                            " entry contains a control character");
    std::string norm = text::normalize_lemma(raw);
    if (norm.empty())
      throw ValidationError(where + ": empty " + what + " entry");
    out.push_back(std::move(norm));
  }
  return out;
}

Definition parse_definition(const json& jd, const std::string& where) {
  Definition d;
  d.id = require_string(jd, "id", where);
  if (!parse_def_id(d.id))
    throw ValidationError(where + ": malformed definition id \"" + d.id +
                          "\" (expected a dot-path of positive integers)");
  d.gloss = jd.value("gloss", std::string());
  if (auto it = jd.find("tokens"); it != jd.end()) {
    if (!it->is_array())
      throw ValidationError(where + ": tokens must be an array");
    for (const auto& jt : *it) {
      Token t;
      t.surface = jt.value("surface", std::string());
      t.lemma = lemma_field(jt, "lemma", where);
      std::string pos = require_string(jt, "pos", where);
      auto p = parse_pos(pos);
      if (!p)
        throw ValidationError(where + ": unknown pos tag \"" + pos + "\"");
      t.pos = *p;
      d.tokens.push_back(std::move(t));
    }
  }
  if (auto it = jd.find("synonyms"); it != jd.end())
    d.synonyms = lemma_list(*it, where, "synonyms");
  if (auto it = jd.find("domains"); it != jd.end())
    d.domains = lemma_list(*it, where, "domains");
  return d;
}

std::set<std::vector<std::string>> canonical_senses(
    const std::vector<std::vector<std::string>>& senses) {
  std::set<std::vector<std::string>> out;
  for (auto group : senses) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    out.insert(std::move(group));
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DefinitionalDictionary parse_definitional(const json& doc,
                                          std::vector<IngestWarning>* warnings) {
  if (!doc.is_object())
    throw ValidationError("definitional dictionary: top level must be an object");
  DefinitionalDictionary dict;
  dict.name = require_string(doc, "name", "definitional dictionary");
  const json& entries = require(doc, "entries", "definitional dictionary");
  if (!entries.is_array())
    throw ValidationError("definitional dictionary: entries must be an array");

  for (const auto& je : entries) {
    std::string headword =
        lemma_field(je, "headword", "definitional dictionary entry");
    const std::string where = "entry " + headword;
    VerbEntry entry;
    entry.headword = headword;
    entry.usage = usage_field(je, where);
    const json& jdefs = require(je, "definitions", where);
    if (!jdefs.is_array())
      throw ValidationError(where + ": definitions must be an array");
    std::set<std::string> seen_ids;
    for (const auto& jd : jdefs) {
      Definition d = parse_definition(jd, where);
      if (!seen_ids.insert(d.id).second)
        throw ValidationError(where + ": duplicate definition id \"" + d.id +
                              "\"");
      if (!d.contentful()) continue;  // empty definitional elements are not stored
      entry.definitions.push_back(std::move(d));
    }
    const std::string ewhere =
        "entry " + headword + "/" + std::string(usage_name(entry.usage));
    if (entry.definitions.empty()) {
      if (warnings)
        warnings->push_back(
            {ewhere, "dropped: no contentful definition"});
      continue;
    }
    EntryKey key{entry.headword, entry.usage};
    if (!dict.entries.emplace(key, std::move(entry)).second)
      throw ValidationError("duplicate entry for " + ewhere);
  }
  return dict;
}

IngestResult<DefinitionalDictionary> ingest_definitional(
    const std::filesystem::path& path) {
  IngestResult<DefinitionalDictionary> result;
  result.dict = parse_definitional(parse_json_file(path), &result.warnings);
  return result;
}

SynonymDictionary parse_synonyms(const json& doc,
                                 std::vector<IngestWarning>* warnings) {
  if (!doc.is_object())
    throw ValidationError("synonym dictionary: top level must be an object");
  SynonymDictionary dict;
  dict.name = require_string(doc, "name", "synonym dictionary");
  const json& records = require(doc, "records", "synonym dictionary");
  if (!records.is_array())
    throw ValidationError("synonym dictionary: records must be an array");

  for (const auto& jr : records) {
    SynonymRecord rec;
    rec.headword = lemma_field(jr, "headword", "synonym dictionary record");
    const std::string where = "record " + rec.headword;
    rec.usage = usage_field(jr, where);
    const json& senses = require(jr, "senses", where);
    if (!senses.is_array())
      throw ValidationError(where + ": senses must be an array of arrays");
    for (const auto& group : senses) {
      std::vector<std::string> lemmas = lemma_list(group, where, "senses");
      if (lemmas.empty()) continue;
      for (const auto& s : lemmas) {
        if (s == rec.headword)
          throw ValidationError(where + ": headword \"" + rec.headword +
                                "\" listed among its own synonyms");
        rec.synonyms.insert(s);
      }
      std::sort(lemmas.begin(), lemmas.end());
      lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
      rec.senses.push_back(std::move(lemmas));
    }
    const std::string rwhere =
        where + "/" + std::string(usage_name(rec.usage));
    if (rec.synonyms.empty()) {
      if (warnings) warnings->push_back({rwhere, "dropped: no synonyms"});
      continue;
    }
    EntryKey key{rec.headword, rec.usage};
    if (!dict.records.emplace(key, std::move(rec)).second)
      throw ValidationError("duplicate record for " + rwhere);
  }
  return dict;
}

IngestResult<SynonymDictionary> ingest_synonyms(
    const std::filesystem::path& path) {
  IngestResult<SynonymDictionary> result;
  result.dict = parse_synonyms(parse_json_file(path), &result.warnings);
  return result;
}

FilterResult filter_against(const SynonymDictionary& syns,
                            const DefinitionalDictionary& defs) {
  FilterResult result;
  result.dict.name = syns.name;
  for (const auto& [key, rec] : syns.records) {
    if (!defs.has_headword(rec.headword)) {
      result.report.removed_records += 1;
      result.report.removed_synonyms += rec.synonyms.size();
      continue;
    }
    SynonymRecord kept;
    kept.headword = rec.headword;
    kept.usage = rec.usage;
    for (const auto& s : rec.synonyms) {
      if (defs.has_headword(s))
        kept.synonyms.insert(s);
      else
        result.report.removed_synonyms += 1;
    }
    for (const auto& group : rec.senses) {
      std::vector<std::string> g;
      for (const auto& s : group)
        if (kept.synonyms.count(s)) g.push_back(s);
      if (!g.empty()) kept.senses.push_back(std::move(g));
    }
    if (kept.synonyms.empty()) {
      result.report.removed_records += 1;
      continue;
    }
    result.dict.records.emplace(key, std::move(kept));
  }
  return result;
}

namespace {

std::vector<std::string> split_tsv_line(const std::string& line) {
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
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r')
    fields.back().pop_back();
  return fields;
}

}  // namespace

ReferenceAnnotation ingest_reference(const std::filesystem::path& path,
                                     const DefinitionalDictionary& defs,
                                     const SynonymDictionary& syns) {
  const std::string content = read_file(path);
  ReferenceAnnotation annotation;
  annotation.annotator = path.stem().string();

  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> offenders;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto fields = split_tsv_line(line);
    if (lineno == 1) {
      if (fields != std::vector<std::string>{"headword", "usage", "synonym",
                                             "definition_id"})
        throw ParseError(path.string(), 1, 1,
                         "expected header headword/usage/synonym/definition_id");
      continue;
    }
    if (fields.size() != 4)
      throw ParseError(path.string(), lineno, 1,
                       "expected 4 tab-separated columns, got " +
                           std::to_string(fields.size()));
    RefTriple t;
    t.headword = text::normalize_lemma(fields[0]);
    auto u = parse_usage(fields[1]);
    if (!u)
      throw ParseError(path.string(), lineno, 1,
                       "bad usage \"" + fields[1] + "\"");
    t.usage = *u;
    t.synonym = text::normalize_lemma(fields[2]);
    t.definition_id = fields[3];

    const VerbEntry* entry = defs.find(t.headword, t.usage);
    const SynonymRecord* rec = syns.find(t.headword, t.usage);
    if (!entry)
      offenders.push_back("line " + std::to_string(lineno) + ": no entry " +
                          t.headword + "/" + std::string(usage_name(t.usage)));
    else if (!entry->find_definition(t.definition_id))
      offenders.push_back("line " + std::to_string(lineno) +
                          ": definition id \"" + t.definition_id +
                          "\" not in entry " + t.headword);
    if (!rec)
      offenders.push_back("line " + std::to_string(lineno) +
                          ": no synonym record " + t.headword + "/" +
                          std::string(usage_name(t.usage)));
    else if (!rec->synonyms.count(t.synonym))
      offenders.push_back("line " + std::to_string(lineno) + ": \"" +
                          t.synonym + "\" is not a synonym of " + t.headword);
    annotation.triples.insert(std::move(t));
  }
  if (!offenders.empty()) {
    std::string msg = path.string() + ": " +
                      std::to_string(offenders.size()) +
                      " dangling reference(s):";
    for (const auto& o : offenders) msg += "\n  " + o;
    throw ValidationError(msg);
  }
  return annotation;
}

nlohmann::json to_json(const DefinitionalDictionary& dict) {
  json entries = json::array();
  for (const auto& [key, entry] : dict.entries) {
    json jdefs = json::array();
    for (const auto& d : entry.definitions) {
      json jtokens = json::array();
      for (const auto& t : d.tokens)
        jtokens.push_back({{"surface", t.surface},
                           {"lemma", t.lemma},
                           {"pos", std::string(pos_name(t.pos))}});
      jdefs.push_back({{"id", d.id},
                       {"gloss", d.gloss},
                       {"tokens", std::move(jtokens)},
                       {"synonyms", d.synonyms},
                       {"domains", d.domains}});
    }
    entries.push_back({{"headword", entry.headword},
                       {"usage", std::string(usage_name(entry.usage))},
                       {"definitions", std::move(jdefs)}});
  }
  return {{"name", dict.name}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const SynonymDictionary& dict) {
  json records = json::array();
  for (const auto& [key, rec] : dict.records) {
    json senses = json::array();
    if (rec.senses.empty()) {
      senses.push_back(
          std::vector<std::string>(rec.synonyms.begin(), rec.synonyms.end()));
    } else {
      for (const auto& group : rec.senses) senses.push_back(group);
    }
    records.push_back({{"headword", rec.headword},
                       {"usage", std::string(usage_name(rec.usage))},
                       {"senses", std::move(senses)}});
  }
  return {{"name", dict.name}, {"records", std::move(records)}};
}

bool equivalent(const DefinitionalDictionary& a,
                const DefinitionalDictionary& b) {
  if (a.name != b.name || a.entries.size() != b.entries.size()) return false;
  for (const auto& [key, ea] : a.entries) {
    auto it = b.entries.find(key);
    if (it == b.entries.end()) return false;
    const VerbEntry& eb = it->second;
    if (ea.definitions.size() != eb.definitions.size()) return false;
    for (std::size_t i = 0; i < ea.definitions.size(); ++i) {
      const Definition& da = ea.definitions[i];
      const Definition& db = eb.definitions[i];
      if (da.id != db.id || da.gloss != db.gloss || da.tokens != db.tokens)
        return false;
      auto sa = da.synonyms, sb = db.synonyms;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return false;
      auto ma = da.domains, mb = db.domains;
      std::sort(ma.begin(), ma.end());
      std::sort(mb.begin(), mb.end());
      if (ma != mb) return false;
    }
  }
  return true;
}

bool equivalent(const SynonymDictionary& a, const SynonymDictionary& b) {
  if (a.name != b.name || a.records.size() != b.records.size()) return false;
  for (const auto& [key, ra] : a.records) {
    auto it = b.records.find(key);
    if (it == b.records.end()) return false;
    const SynonymRecord& rb = it->second;
    if (ra.synonyms != rb.synonyms) return false;
    // A record without explicit grouping serializes as one flat group.
    auto ga = ra.senses.empty()
                  ? std::vector<std::vector<std::string>>{{ra.synonyms.begin(),
                                                           ra.synonyms.end()}}
                  : ra.senses;
    auto gb = rb.senses.empty()
                  ? std::vector<std::vector<std::string>>{{rb.synonyms.begin(),
                                                           rb.synonyms.end()}}
                  : rb.senses;
    if (canonical_senses(ga) != canonical_senses(gb)) return false;
  }
  return true;
}

}  // namespace synlex

#include "amst/json_io.hpp"

#include <fstream>

namespace amst::io {

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorKind::Io, std::string("missing or malformed '") + key + "' array");
  std::vector<std::string> out;
  for (const auto& e : j[key]) out.push_back(e.get<std::string>());
  return out;
}

int label_index(const std::vector<std::string>& labels, const std::string& name,
                const char* what) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  throw Error(ErrorKind::Io, std::string("unknown ") + what + " '" + name + "'");
}

Mask mask_from_labels(const json& arr, const std::vector<std::string>& labels,
                      const char* what) {
  Mask m = 0;
  for (const auto& e : arr) m |= bit(label_index(labels, e.get<std::string>(), what));
  return m;
}

json labels_from_mask(Mask m, const std::vector<std::string>& labels) {
  json arr = json::array();
  for (int i : to_indices(m)) arr.push_back(labels[i]);
  return arr;
}

}  // namespace

json amst_to_json(const FiniteAmst& a) {
  json j;
  j["sentences"] = a.sentence_labels();
  j["models"] = a.model_labels();
  j["kind"] = a.kind() == FiniteAmst::Kind::Normal ? "normal" : "general";
  json matrix = json::array();
  for (int m = 0; m < a.model_count(); ++m) {
    json row = json::array();
    if (a.kind() == FiniteAmst::Kind::Normal) {
      for (int s = 0; s < a.sentence_count(); ++s)
        row.push_back(contains(a.matrix_row(m), s) ? 1 : 0);
    } else {
      for (bool entry : a.table_row(m)) row.push_back(entry ? 1 : 0);
    }
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

FiniteAmst amst_from_json(const json& j) {
  const auto sentences = string_list(j, "sentences");
  const auto models = string_list(j, "models");
  const std::string kind = j.value("kind", "normal");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw Error(ErrorKind::Io, "missing 'matrix'");
  const auto& matrix = j["matrix"];
  if (kind == "normal") {
    std::vector<Mask> rows;
    for (const auto& row : matrix) {
      if (row.size() != sentences.size())
        throw Error(ErrorKind::Io, "normal matrix rows must have |L| entries");
      Mask r = 0;
      for (size_t s = 0; s < row.size(); ++s)
        if (row[s].get<int>() != 0) r |= bit(static_cast<int>(s));
      rows.push_back(r);
    }
    return FiniteAmst::normal_matrix(sentences, models, rows);
  }
  if (kind != "general") throw Error(ErrorKind::Io, "kind must be 'normal' or 'general'");
  std::vector<std::vector<bool>> table;
  for (const auto& row : matrix) {
    std::vector<bool> r;
    for (const auto& e : row) r.push_back(e.get<int>() != 0);
    table.push_back(std::move(r));
  }
  return FiniteAmst::general_table(sentences, models, table);
}

json logical_structure_to_json(const LogicalStructure& ls) {
  json j;
  j["sentences"] = ls.sentence_labels();
  json table = json::array();
  for (Mask g = 0; g < (Mask{1} << ls.sentence_count()); ++g) {
    json row = json::array();
    for (int s = 0; s < ls.sentence_count(); ++s)
      row.push_back(ls.turnstile(g, s) ? 1 : 0);
    table.push_back(std::move(row));
  }
  j["turnstile"] = std::move(table);
  return j;
}

LogicalStructure logical_structure_from_json(const json& j) {
  const auto sentences = string_list(j, "sentences");
  if (!j.contains("turnstile") || !j["turnstile"].is_array())
    throw Error(ErrorKind::Io, "missing 'turnstile'");
  std::vector<Mask> rows;
  for (const auto& row : j["turnstile"]) {
    if (row.size() != sentences.size())
      throw Error(ErrorKind::Io, "turnstile rows must have |L| entries");
    Mask r = 0;
    for (size_t s = 0; s < row.size(); ++s)
      if (row[s].get<int>() != 0) r |= bit(static_cast<int>(s));
    rows.push_back(r);
  }
  return LogicalStructure(sentences, rows);
}

json topology_to_json(const FiniteTopology& t) {
  json j;
  j["ground_size"] = t.ground_size();
  j["opens"] = t.opens();
  return j;
}

FiniteTopology topology_from_json(const json& j) {
  std::vector<Mask> opens;
  for (const auto& e : j.at("opens")) opens.push_back(e.get<Mask>());
  return FiniteTopology(j.at("ground_size").get<int>(), opens);
}

json set_family_to_json(const SetFamily& f) {
  json j;
  j["index_size"] = f.index_size();
  j["members"] = f.members();
  return j;
}

SetFamily set_family_from_json(const json& j) {
  std::vector<Mask> members;
  for (const auto& e : j.at("members")) members.push_back(e.get<Mask>());
  return SetFamily(j.at("index_size").get<int>(), members);
}

json sequence_to_json(const ModelSequence& s) {
  json j;
  j["index_size"] = s.index_size;
  j["entries"] = s.entries;
  return j;
}

ModelSequence sequence_from_json(const json& j) {
  ModelSequence s;
  s.index_size = j.at("index_size").get<int>();
  for (const auto& e : j.at("entries")) s.entries.push_back(e.get<int>());
  return s;
}

json characterization_to_json(const CharacterizationReport& rep) {
  json j;
  j["hypothesis_ok"] = rep.hypothesis_ok;
  json conds, witnesses;
  for (size_t i = 0; i < rep.conditions.size(); ++i) {
    conds[std::to_string(i + 1)] = rep.conditions[i].holds;
    if (!rep.conditions[i].holds) witnesses[std::to_string(i + 1)] = rep.conditions[i].witness;
  }
  j["conditions"] = std::move(conds);
  j["witnesses"] = witnesses.is_null() ? json::object() : std::move(witnesses);
  return j;
}

json counterexample_to_json(const CounterexampleReport& rep) {
  json j;
  j["bound"] = rep.bound;
  json claims = json::array();
  for (const auto& c : rep.claims)
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"verified", c.verified},
                      {"detail", c.detail}});
  j["claims"] = std::move(claims);
  j["all_verified"] = rep.all_verified();
  return j;
}

json verdicts_to_json(const std::vector<Verdict>& verdicts) {
  json arr = json::array();
  for (const auto& v : verdicts) {
    json e;
    e["theorem"] = v.theorem;
    e["status"] = to_string(v.status);
    // a witness accompanies violations only; vacuous runs carry a note
    if (v.status == Status::Violated && !v.witness.empty()) e["witness"] = v.witness;
    if (v.status == Status::Vacuous && !v.witness.empty()) e["note"] = v.witness;
    if (!v.digest.empty()) e["digest"] = v.digest;
    e["seed"] = v.seed;
    arr.push_back(std::move(e));
  }
  return arr;
}

json info_system_to_json(const InformationSystem& is) {
  json j;
  j["tokens"] = is.tokens;
  json con = json::array();
  for (Mask x : is.con) con.push_back(labels_from_mask(x, is.tokens));
  j["con"] = std::move(con);
  json entail = json::array();
  for (const auto& [x, a] : is.entail)
    entail.push_back({labels_from_mask(x, is.tokens), is.tokens[a]});
  j["entail"] = std::move(entail);
  return j;
}

InformationSystem info_system_from_json(const json& j) {
  InformationSystem is;
  is.tokens = string_list(j, "tokens");
  for (const auto& e : j.at("con")) is.con.push_back(mask_from_labels(e, is.tokens, "token"));
  for (const auto& e : j.at("entail")) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::Io, "entailments are [set, token] pairs");
    is.entail.emplace_back(mask_from_labels(e[0], is.tokens, "token"),
                           label_index(is.tokens, e[1].get<std::string>(), "token"));
  }
  return is;
}

json chu_to_json(const ChuSpace& chu) {
  json j;
  j["points"] = chu.points;
  j["attributes"] = chu.attributes;
  j["alphabet"] = chu.alphabet;
  json matrix = json::array();
  for (const auto& row : chu.entry) {
    json r = json::array();
    for (int k : row) r.push_back(chu.alphabet[k]);
    matrix.push_back(std::move(r));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

ChuSpace chu_from_json(const json& j) {
  ChuSpace chu;
  chu.points = string_list(j, "points");
  chu.attributes = string_list(j, "attributes");
  chu.alphabet = string_list(j, "alphabet");
  for (const auto& row : j.at("matrix")) {
    std::vector<int> r;
    for (const auto& e : row)
      r.push_back(label_index(chu.alphabet, e.get<std::string>(), "alphabet entry"));
    chu.entry.push_back(std::move(r));
  }
  return chu;
}

json quiver_to_json(const Quiver& q) {
  json j;
  j["vertices"] = q.vertices;
  json edges = json::array();
  for (size_t e = 0; e < q.edges.size(); ++e)
    edges.push_back({q.edges[e], q.vertices[q.source[e]], q.vertices[q.target[e]]});
  j["edges"] = std::move(edges);
  return j;
}

Quiver quiver_from_json(const json& j) {
  Quiver q;
  q.vertices = string_list(j, "vertices");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw Error(ErrorKind::Io, "edges are [name, source, target] triples");
    q.edges.push_back(e[0].get<std::string>());
    q.source.push_back(label_index(q.vertices, e[1].get<std::string>(), "vertex"));
    q.target.push_back(label_index(q.vertices, e[2].get<std::string>(), "vertex"));
  }
  return q;
}

json category_to_json(const ObjectFreeCategory& c) {
  json j;
  j["morphisms"] = c.morphisms;
  json table = json::array();
  for (const auto& row : c.composition) {
    json r = json::array();
    for (const auto& entry : row)
      r.push_back(entry ? json(c.morphisms[*entry]) : json(nullptr));
    table.push_back(std::move(r));
  }
  j["composition"] = std::move(table);
  return j;
}

ObjectFreeCategory category_from_json(const json& j) {
  ObjectFreeCategory c;
  c.morphisms = string_list(j, "morphisms");
  for (const auto& row : j.at("composition")) {
    std::vector<std::optional<int>> r;
    for (const auto& e : row) {
      if (e.is_null())
        r.push_back(std::nullopt);
      else
        r.push_back(label_index(c.morphisms, e.get<std::string>(), "morphism"));
    }
    c.composition.push_back(std::move(r));
  }
  return c;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Io, "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace amst::io

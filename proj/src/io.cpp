#include "stellar/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stellar/errors.hpp"

namespace stellar {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw MalformedInput(where + ": expected an object");
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw MalformedInput(where + ": unknown field '" + key + "'");
    }
  }
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw MalformedInput(where + ": expected a string");
  return j.get<std::string>();
}

Label get_label(const json& j, const std::string& where) {
  auto token = get_string(j, where);
  if (token.empty()) throw MalformedInput(where + ": labels must be nonempty");
  return Label::intern(token);
}

Simplex get_edge(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput(where + ": expected two labels");
  std::vector<Label> ends{get_label(j[0], where + "[0]"), get_label(j[1], where + "[1]")};
  try {
    return Simplex(std::move(ends));
  } catch (const MalformedInput& e) {
    throw MalformedInput(where + ": " + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

json labels_json(const Simplex& s) {
  json out = json::array();
  for (Label v : s) out.push_back(v.token());
  return out;
}

json move_json(const Move& move) {
  json j;
  if (const auto* s = std::get_if<SubdivideMove>(&move)) {
    j["op"] = "subdivide";
    j["edge"] = labels_json(s->edge);
    j["new_label"] = s->new_label.token();
  } else {
    const auto& c = std::get<ContractMove>(move);
    j["op"] = "contract";
    j["edge"] = labels_json(c.edge);
    if (c.survivor) j["survivor"] = c.survivor->token();
  }
  return j;
}

json map_json(const LabelMap& map) {
  json j = json::object();
  for (const auto& [k, v] : map) j[k.token()] = v.token();
  return j;
}

}  // namespace

ComplexDocument parse_complex_document(std::string_view text) {
  json j = parse_json(text);
  require_object(j, "document");
  reject_unknown_keys(j, "document", {"facets", "name"});
  ComplexDocument doc;
  if (j.contains("name")) doc.name = get_string(j["name"], "name");
  if (!j.contains("facets")) throw MalformedInput("document: missing field 'facets'");
  const json& facets = j["facets"];
  if (!facets.is_array()) throw MalformedInput("facets: expected an array");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    const json& f = facets[i];
    if (!f.is_array() || f.empty()) throw MalformedInput(where + ": expected a nonempty array");
    std::vector<Label> labels;
    for (std::size_t k = 0; k < f.size(); ++k) {
      labels.push_back(get_label(f[k], where + "[" + std::to_string(k) + "]"));
    }
    try {
      simplices.emplace_back(std::move(labels));
    } catch (const MalformedInput& e) {
      throw MalformedInput(where + ": " + e.what());
    }
  }
  doc.complex = SimplicialComplex(std::move(simplices));
  return doc;
}

std::string serialize_complex(const SimplicialComplex& complex, std::string_view name) {
  std::ostringstream out;
  out << "{\n  \"facets\": [";
  const auto& facets = complex.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t k = 0; k < facets[i].size(); ++k) {
      if (k) out << ", ";
      out << quoted(facets[i][k].token());
    }
    out << ']';
  }
  if (!facets.empty()) out << "\n  ";
  out << "],\n  \"name\": " << quoted(std::string(name)) << "\n}\n";
  return out.str();
}

MoveScript parse_script(std::string_view text) {
  json j = parse_json(text);
  require_object(j, "script");
  reject_unknown_keys(j, "script", {"moves", "target_map"});
  if (!j.contains("moves") || !j["moves"].is_array()) {
    throw MalformedInput("moves: expected an array");
  }
  MoveScript script;
  std::set<Label> introduced;
  for (std::size_t i = 0; i < j["moves"].size(); ++i) {
    const std::string where = "moves[" + std::to_string(i) + "]";
    const json& m = j["moves"][i];
    require_object(m, where);
    if (!m.contains("op")) throw MalformedInput(where + ": missing field 'op'");
    if (!m.contains("edge")) throw MalformedInput(where + ": missing field 'edge'");
    const auto op = get_string(m["op"], where + ".op");
    Simplex edge = get_edge(m["edge"], where + ".edge");
    if (op == "subdivide") {
      reject_unknown_keys(m, where, {"op", "edge", "new_label"});
      if (!m.contains("new_label")) throw MalformedInput(where + ": missing field 'new_label'");
      Label l = get_label(m["new_label"], where + ".new_label");
      if (!introduced.insert(l).second) {
        throw MalformedInput(where + ".new_label: '" + l.token() + "' introduced twice");
      }
      script.moves.emplace_back(SubdivideMove{std::move(edge), l});
    } else if (op == "contract") {
      reject_unknown_keys(m, where, {"op", "edge", "survivor"});
      std::optional<Label> survivor;
      if (m.contains("survivor")) {
        survivor = get_label(m["survivor"], where + ".survivor");
        if (!edge.contains(*survivor)) {
          throw MalformedInput(where + ".survivor: not an endpoint of the edge");
        }
      }
      script.moves.emplace_back(ContractMove{std::move(edge), survivor});
    } else {
      throw MalformedInput(where + ".op: expected \"subdivide\" or \"contract\"");
    }
  }
  if (j.contains("target_map")) {
    const json& t = j["target_map"];
    require_object(t, "target_map");
    LabelMap map;
    for (const auto& [k, v] : t.items()) {
      if (k.empty()) throw MalformedInput("target_map: labels must be nonempty");
      map.emplace(Label::intern(k), get_label(v, "target_map." + k));
    }
    script.target_map = std::move(map);
  }
  return script;
}

std::string serialize_script(const MoveScript& script) {
  json j;
  j["moves"] = json::array();
  for (const auto& m : script.moves) j["moves"].push_back(move_json(m));
  if (script.target_map) j["target_map"] = map_json(*script.target_map);
  return j.dump(2) + "\n";
}

std::string serialize_report(const PipelineReport& report) {
  json j;
  j["derived_status"] = std::string(to_string(report.derived_status));
  j["steps"] = json::array();
  for (const auto& s : report.steps) {
    json step;
    step["stage"] = s.stage;
    step["move"] = s.move ? move_json(*s.move) : json(nullptr);
    step["sub_f_vector"] = s.sub_f_vector;
    step["ambient_f_vector"] = s.ambient_f_vector;
    step["ambient_euler"] = s.ambient_euler;
    step["status"] = std::string(to_string(s.verdict));
    step["ambient_pseudomanifold"] = s.ambient_pseudomanifold;
    j["steps"].push_back(std::move(step));
  }
  j["final_isomorphism"] = report.final_isomorphism ? map_json(*report.final_isomorphism)
                                                    : json(nullptr);
  return j.dump(2) + "\n";
}

std::string serialize_witness(const InducednessWitness& witness) {
  json j;
  j["verdict"] = std::string(to_string(witness.verdict));
  j["simplex"] = witness.simplex ? labels_json(*witness.simplex) : json(nullptr);
  j["intersection"] = json::array();
  for (const auto& f : witness.intersection) j["intersection"].push_back(labels_json(f));
  return j.dump(2) + "\n";
}

Simplex parse_simplex_arg(std::string_view text) {
  std::vector<Label> labels;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto token = text.substr(start, i - start);
      if (token.empty()) throw MalformedInput("empty label in '" + std::string(text) + "'");
      labels.push_back(Label::intern(token));
      start = i + 1;
    } else if (text[i] == '{') {
      ++depth;
    } else if (text[i] == '}') {
      --depth;
    }
  }
  return Simplex(std::move(labels));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace stellar

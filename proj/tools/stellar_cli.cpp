// Command-line front end. Documents are read from files and written to
// stdout unless -o is given; diagnostics go to stderr as JSON.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stellar/contraction.hpp"
#include "stellar/errors.hpp"
#include "stellar/inducedness.hpp"
#include "stellar/io.hpp"
#include "stellar/move_search.hpp"
#include "stellar/pair_engine.hpp"
#include "stellar/random.hpp"
#include "stellar/subdivision.hpp"

using namespace stellar;
using nlohmann::json;

namespace {

constexpr const char* kCapVariable = "STELLAR_MAX_VERTICES";

// A domain "no" that is not an exception: verdict printed, exit code 1.
struct Negative {};

std::size_t vertex_cap() {
  const char* raw = std::getenv(kCapVariable);
  if (!raw || !*raw) return kDefaultVertexCap;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(raw, &used);
    if (used == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw MalformedInput(std::string(kCapVariable) + " must be a positive integer, got '" + raw + "'");
}

ComplexDocument load(const std::string& path) {
  try {
    return parse_complex_document(read_text_file(path));
  } catch (const MalformedInput& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

json complex_json(const SimplicialComplex& c, const std::string& name = "") {
  return json::parse(serialize_complex(c, name));
}

json simplices_json(const std::vector<Simplex>& list) {
  json out = json::array();
  for (const auto& s : list) {
    json row = json::array();
    for (Label v : s) row.push_back(v.token());
    out.push_back(std::move(row));
  }
  return out;
}

void check_size(const SimplicialComplex& c, const std::string& what) {
  if (c.num_vertices() > vertex_cap()) {
    throw ResourceLimit(what + " has " + std::to_string(c.num_vertices()) + " vertices; " +
                        kCapVariable + " is " + std::to_string(vertex_cap()));
  }
}

IsoLimits iso_limits() { return IsoLimits{vertex_cap(), IsoLimits{}.max_nodes}; }

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const MalformedInput*>(&e)) return "malformed_input";
  if (dynamic_cast<const AbsentFace*>(&e)) return "absent_face";
  if (dynamic_cast<const NotSubcomplex*>(&e)) return "not_subcomplex";
  if (dynamic_cast<const NamingError*>(&e)) return "naming";
  if (dynamic_cast<const InvalidEdge*>(&e)) return "invalid_edge";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "invariant_violation";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "resource_limit";
  if (dynamic_cast<const ScriptError*>(&e)) return "script_step";
  if (dynamic_cast<const ScriptMismatch*>(&e)) return "script_mismatch";
  return "internal";
}

int report_error(const std::exception& e) {
  const int code = static_cast<int>(exit_code_for(e));
  json j;
  j["error"] = error_kind(e);
  j["message"] = e.what();
  j["exit_code"] = code;
  if (const auto* inv = dynamic_cast<const InvalidEdge*>(&e)) j["blocking"] = simplices_json(inv->blocking());
  if (const auto* step = dynamic_cast<const ScriptError*>(&e)) j["step"] = step->step();
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stellar subdivisions, edge contractions and strongly induced pairs"};
  app.require_subcommand(1);
  std::string out;

  // info
  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic and diagnostics");
  std::string info_in;
  info->add_option("complex", info_in, "complex document")->required();

  // subdivide
  auto* subdivide = app.add_subcommand("subdivide", "stellar, edge, derived or biased subdivision");
  subdivide->require_subcommand(1);
  std::string sd_in, sd_face, sd_label, sd_sub, sd_ambient;
  std::optional<int> sd_round;
  auto* sd_stellar = subdivide->add_subcommand("stellar", "stellar subdivision at a face");
  sd_stellar->add_option("complex", sd_in)->required();
  sd_stellar->add_option("--face", sd_face, "comma-separated labels")->required();
  sd_stellar->add_option("--label", sd_label, "label of the new vertex")->required();
  auto* sd_edge = subdivide->add_subcommand("edge", "stellar subdivision at an edge");
  sd_edge->add_option("complex", sd_in)->required();
  sd_edge->add_option("--edge", sd_face, "two comma-separated labels")->required();
  sd_edge->add_option("--label", sd_label, "label of the new vertex")->required();
  auto* sd_derived = subdivide->add_subcommand("derived", "barycentric subdivision");
  sd_derived->add_option("complex", sd_in)->required();
  sd_derived->add_option("--round", sd_round, "barycenter round (default: first unused)");
  auto* sd_biased = subdivide->add_subcommand("biased", "biased derived subdivision of a pair");
  sd_biased->add_option("--sub", sd_sub)->required();
  sd_biased->add_option("--ambient", sd_ambient)->required();
  sd_biased->add_option("--round", sd_round, "barycenter round (default: first unused)");
  for (auto* s : {sd_stellar, sd_edge, sd_derived, sd_biased}) s->add_option("-o,--output", out);

  // contract
  auto* contract = app.add_subcommand("contract", "contract a valid edge");
  std::string ct_in, ct_edge, ct_survivor;
  contract->add_option("complex", ct_in)->required();
  contract->add_option("--edge", ct_edge, "two comma-separated labels")->required();
  contract->add_option("--survivor", ct_survivor, "endpoint to keep (default: smaller)");
  contract->add_option("-o,--output", out);

  // check
  auto* check = app.add_subcommand("check", "inducedness, edge validity, missing simplices");
  check->require_subcommand(1);
  std::string ck_sub, ck_ambient, ck_in, ck_edge;
  std::optional<int> ck_max_dim;
  auto* ck_induced = check->add_subcommand("induced", "is the sub an induced subcomplex");
  auto* ck_strong = check->add_subcommand("strong", "is the sub a strongly induced subcomplex");
  for (auto* s : {ck_induced, ck_strong}) {
    s->add_option("--sub", ck_sub)->required();
    s->add_option("--ambient", ck_ambient)->required();
  }
  auto* ck_valid = check->add_subcommand("valid-edge", "is the edge in no missing simplex");
  ck_valid->add_option("complex", ck_in)->required();
  ck_valid->add_option("--edge", ck_edge)->required();
  auto* ck_missing = check->add_subcommand("missing", "list missing simplices");
  ck_missing->add_option("complex", ck_in)->required();
  ck_missing->add_option("--max-dim", ck_max_dim);

  // pair run
  auto* pair = app.add_subcommand("pair", "pair pipeline");
  pair->require_subcommand(1);
  auto* pair_run = pair->add_subcommand("run", "derive, bias, then replay a move script");
  std::string pr_ambient, pr_sub, pr_target, pr_script, pr_report;
  pair_run->add_option("--ambient", pr_ambient, "ambient triangulation")->required();
  pair_run->add_option("--sub", pr_sub, "subdivided target inside the ambient")->required();
  pair_run->add_option("--target", pr_target, "target complex")->required();
  pair_run->add_option("--script", pr_script, "move script")->required();
  pair_run->add_option("-o,--output", out, "final ambient document");
  pair_run->add_option("--report", pr_report, "report document");

  // search
  auto* search = app.add_subcommand("search", "breadth-first search for a move script");
  std::string se_from, se_to;
  SearchLimits se_limits;
  std::optional<std::size_t> se_max_vertices;
  search->add_option("--from", se_from)->required();
  search->add_option("--to", se_to)->required();
  search->add_option("--max-depth", se_limits.max_depth)->capture_default_str();
  search->add_option("--max-vertices", se_max_vertices, "vertex budget (default: 10, at most the cap)");
  search->add_option("--max-states", se_limits.max_states)->capture_default_str();
  search->add_option("-o,--output", out);

  // random
  auto* random = app.add_subcommand("random", "seeded random complex or pair");
  RandomSpec rs;
  std::string rs_kind = "complex";
  random->add_option("--vertices", rs.n_vertices)->capture_default_str();
  random->add_option("--dim", rs.max_dim)->capture_default_str();
  random->add_option("--density", rs.density)->capture_default_str();
  random->add_option("--seed", rs.seed)->capture_default_str();
  random->add_option("--kind", rs_kind)
      ->check(CLI::IsMember({"complex", "induced", "strong", "subcomplex"}))
      ->capture_default_str();
  random->add_option("-o,--output", out);

  // verify-script
  auto* verify = app.add_subcommand("verify-script", "replay a script and compare with a target");
  std::string vs_from, vs_script, vs_to;
  verify->add_option("--from", vs_from)->required();
  verify->add_option("--script", vs_script)->required();
  verify->add_option("--to", vs_to)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(MalformedInput(std::string("command line: ") + e.what()));
  }

  try {
    if (*info) {
      auto doc = load(info_in);
      const auto& c = doc.complex;
      json j;
      j["name"] = doc.name;
      j["dimension"] = c.dimension();
      j["num_vertices"] = c.num_vertices();
      j["num_facets"] = c.num_facets();
      j["f_vector"] = f_vector(c);
      j["euler_characteristic"] = euler_characteristic(c);
      j["pseudomanifold"] = c.empty() ? false : is_pseudomanifold(c, c.dimension());
      emit(j.dump(2) + "\n", "");
    } else if (*sd_stellar || *sd_edge) {
      auto doc = load(sd_in);
      const Simplex face = parse_simplex_arg(sd_face);
      const Label label = Label::intern(sd_label);
      auto result = *sd_edge ? edge_subdivide(doc.complex, face, label)
                             : stellar_subdivide(doc.complex, face, label);
      emit(serialize_complex(result, doc.name), out);
    } else if (*sd_derived) {
      auto doc = load(sd_in);
      emit(serialize_complex(derived_subdivision(doc.complex, sd_round).first, doc.name), out);
    } else if (*sd_biased) {
      auto sub = load(sd_sub);
      auto ambient = load(sd_ambient);
      auto result = biased_derived_subdivision(sub.complex, ambient.complex, sd_round).first;
      emit(serialize_complex(result, ambient.name), out);
    } else if (*contract) {
      auto doc = load(ct_in);
      std::optional<Label> survivor;
      if (!ct_survivor.empty()) survivor = Label::intern(ct_survivor);
      emit(serialize_complex(contract_edge(doc.complex, parse_simplex_arg(ct_edge), survivor), doc.name),
           out);
    } else if (*ck_induced || *ck_strong) {
      auto sub = load(ck_sub).complex;
      auto ambient = load(ck_ambient).complex;
      auto w = *ck_strong ? is_strongly_induced(sub, ambient) : is_induced(sub, ambient);
      emit(serialize_witness(w), "");
      if (!w.at_least_induced() || (*ck_strong && !w.strongly())) throw Negative{};
    } else if (*ck_valid) {
      auto c = load(ck_in).complex;
      std::vector<Simplex> blocking;
      const bool valid = is_valid_edge(c, parse_simplex_arg(ck_edge), &blocking);
      json j;
      j["valid"] = valid;
      j["blocking"] = simplices_json(blocking);
      emit(j.dump(2) + "\n", "");
      if (!valid) throw Negative{};
    } else if (*ck_missing) {
      auto c = load(ck_in).complex;
      json j;
      j["missing"] = simplices_json(missing_simplices(c, ck_max_dim));
      emit(j.dump(2) + "\n", "");
    } else if (*pair_run) {
      auto ambient = load(pr_ambient);
      auto sub = load(pr_sub).complex;
      auto target = load(pr_target);
      auto script = parse_script(read_text_file(pr_script));
      check_size(target.complex, "target");
      auto result = pipeline_run(ambient.complex, sub, target.complex, script, iso_limits());
      const auto report = serialize_report(result.report);
      const auto final_doc = serialize_complex(result.ambient, ambient.name);
      if (!pr_report.empty()) write_text_file(pr_report, report);
      if (!out.empty()) write_text_file(out, final_doc);
      if (out.empty() || pr_report.empty()) {
        json j;
        if (out.empty()) j["ambient"] = json::parse(final_doc);
        if (pr_report.empty()) j["report"] = json::parse(report);
        std::cout << j.dump(2) << "\n";
      }
    } else if (*search) {
      auto from = load(se_from).complex;
      auto to = load(se_to).complex;
      const std::size_t cap = vertex_cap();
      se_limits.max_vertices = se_max_vertices.value_or(std::min<std::size_t>(10, cap));
      if (se_limits.max_vertices > cap) {
        throw ResourceLimit("--max-vertices " + std::to_string(se_limits.max_vertices) +
                            " exceeds " + kCapVariable + "=" + std::to_string(cap));
      }
      SearchStats stats;
      auto script = search_script(from, to, se_limits, &stats);
      if (!script) {
        json j;
        j["found"] = false;
        j["visited"] = stats.visited;
        j["expanded"] = stats.expanded;
        j["depth"] = stats.depth;
        emit(j.dump(2) + "\n", "");
        throw Negative{};
      }
      emit(serialize_script(*script), out);
    } else if (*random) {
      rs.vertex_cap = vertex_cap();
      if (rs_kind == "complex") {
        emit(serialize_complex(random_complex(rs), "random seed " + std::to_string(rs.seed)), out);
      } else {
        SimplicialComplex sub, ambient;
        if (rs_kind == "subcomplex") {
          std::tie(sub, ambient) = random_subcomplex_pair(rs);
        } else {
          auto p = rs_kind == "strong" ? random_strongly_induced_pair(rs) : random_induced_pair(rs);
          sub = p.sub();
          ambient = p.ambient();
        }
        json j;
        j["sub"] = complex_json(sub);
        j["ambient"] = complex_json(ambient);
        emit(j.dump(2) + "\n", out);
      }
    } else if (*verify) {
      auto from = load(vs_from).complex;
      auto to = load(vs_to).complex;
      auto script = parse_script(read_text_file(vs_script));
      check_size(to, "target");
      const bool ok = verify_script(from, script, to, iso_limits());
      json j;
      j["accepted"] = ok;
      emit(j.dump(2) + "\n", "");
      if (!ok) throw Negative{};
    }
  } catch (const Negative&) {
    return static_cast<int>(ExitCode::domain);
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return 0;
}

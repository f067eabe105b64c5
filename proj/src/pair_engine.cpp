#include "stellar/pair_engine.hpp"

#include "stellar/contraction.hpp"
#include "stellar/errors.hpp"
#include "stellar/subdivision.hpp"

namespace stellar {

std::string describe(const Move& move) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SubdivideMove>) {
          return "subdivide " + m.edge.to_string() + " as " + m.new_label.token();
        } else {
          std::string out = "contract " + m.edge.to_string();
          if (m.survivor) out += " onto " + m.survivor->token();
          return out;
        }
      },
      move);
}

SimplicialComplex apply_move(const SimplicialComplex& complex, const Move& move) {
  if (const auto* s = std::get_if<SubdivideMove>(&move)) {
    return edge_subdivide(complex, s->edge, s->new_label);
  }
  const auto& c = std::get<ContractMove>(move);
  return contract_edge(complex, c.edge, c.survivor);
}

ComplexPair::ComplexPair(SimplicialComplex sub, SimplicialComplex ambient)
    : sub_(std::move(sub)), ambient_(std::move(ambient)) {
  status_ = is_strongly_induced(sub_, ambient_);
  if (status_.strongly()) return;
  auto induced = is_induced(sub_, ambient_);
  if (induced.at_least_induced()) {
    status_.verdict = Verdict::induced;
  } else {
    status_ = std::move(induced);
  }
}

ComplexPair pair_new(SimplicialComplex sub, SimplicialComplex ambient) {
  if (!is_subcomplex(sub, ambient)) throw NotSubcomplex("sub is not a subcomplex of the ambient");
  return ComplexPair(std::move(sub), std::move(ambient));
}

namespace {

void require_strong(const ComplexPair& pair, const char* op) {
  if (!pair.status().strongly()) {
    throw PreconditionError(std::string(op) + " requires a strongly induced pair; status is " +
                            pair.status().describe());
  }
}

void require_sub_edge(const ComplexPair& pair, const Simplex& edge) {
  if (edge.size() != 2) throw PreconditionError("expected an edge, got " + edge.to_string());
  if (!pair.sub().contains(edge)) {
    throw AbsentFace("edge " + edge.to_string() + " is not an edge of the subcomplex");
  }
}

}  // namespace

ComplexPair pair_derive(const ComplexPair& pair) {
  const int round = next_round(pair.ambient());
  auto sub = derived_subdivision(pair.sub(), round).first;
  auto ambient = derived_subdivision(pair.ambient(), round).first;
  auto out = pair_new(std::move(sub), std::move(ambient));
  if (!out.status().at_least_induced()) {
    throw InvariantViolation("derived pair is not induced: " + out.status().describe());
  }
  return out;
}

ComplexPair pair_biased(const ComplexPair& pair) {
  if (!pair.status().at_least_induced()) {
    throw PreconditionError("biased derived subdivision requires an induced pair; status is " +
                            pair.status().describe());
  }
  auto ambient = biased_derived_subdivision(pair.sub(), pair.ambient()).first;
  auto out = pair_new(pair.sub(), std::move(ambient));
  if (!out.status().strongly()) {
    throw InvariantViolation("biased pair is not strongly induced: " + out.status().describe());
  }
  return out;
}

ComplexPair pair_subdivide_edge(const ComplexPair& pair, const Simplex& edge, Label new_label) {
  require_strong(pair, "edge subdivision");
  require_sub_edge(pair, edge);
  auto sub = edge_subdivide(pair.sub(), edge, new_label);
  auto ambient = edge_subdivide(pair.ambient(), edge, new_label);
  auto subdivided = pair_new(std::move(sub), std::move(ambient));
  if (!subdivided.status().at_least_induced()) {
    throw InvariantViolation("edge subdivision broke inducedness: " +
                             subdivided.status().describe());
  }
  return pair_biased(subdivided);
}

ComplexPair pair_contract_edge(const ComplexPair& pair, const Simplex& edge,
                               std::optional<Label> survivor) {
  require_strong(pair, "edge contraction");
  require_sub_edge(pair, edge);
  auto sub = contract_edge(pair.sub(), edge, survivor);
  SimplicialComplex ambient;
  try {
    ambient = contract_edge(pair.ambient(), edge, survivor);
  } catch (const InvalidEdge& e) {
    throw InvariantViolation(std::string("edge valid in the subcomplex but not in the ambient: ") +
                             e.what());
  }
  auto out = pair_new(std::move(sub), std::move(ambient));
  if (!out.status().strongly()) {
    throw InvariantViolation("contracted pair is not strongly induced: " + out.status().describe());
  }
  return out;
}

ComplexPair apply_move(const ComplexPair& pair, const Move& move) {
  if (const auto* s = std::get_if<SubdivideMove>(&move)) {
    return pair_subdivide_edge(pair, s->edge, s->new_label);
  }
  const auto& c = std::get<ContractMove>(move);
  return pair_contract_edge(pair, c.edge, c.survivor);
}

namespace {

PipelineStep snapshot(const ComplexPair& pair, std::string stage, std::optional<Move> move,
                      int pseudomanifold_dim) {
  PipelineStep step;
  step.stage = std::move(stage);
  step.move = std::move(move);
  step.sub_f_vector = f_vector(pair.sub());
  step.ambient_f_vector = f_vector(pair.ambient());
  step.ambient_euler = euler_characteristic(pair.ambient());
  step.verdict = pair.status().verdict;
  step.ambient_pseudomanifold =
      pseudomanifold_dim >= 0 && is_pseudomanifold(pair.ambient(), pseudomanifold_dim);
  return step;
}

std::optional<LabelMap> check_target_map(const SimplicialComplex& sub, const SimplicialComplex& target,
                                         const LabelMap& map) {
  for (Label v : sub.vertices()) {
    if (!map.contains(v)) return std::nullopt;
  }
  LabelMap used;
  for (Label v : sub.vertices()) used.emplace(v, map.at(v));
  try {
    if (relabel(sub, used) != target) return std::nullopt;
  } catch (const NamingError&) {
    return std::nullopt;
  }
  return used;
}

}  // namespace

PipelineResult pipeline_run(const SimplicialComplex& ambient,
                            const SimplicialComplex& subdivided_target,
                            const SimplicialComplex& target, const MoveScript& script,
                            const IsoLimits& limits) {
  const long long chi = euler_characteristic(ambient);
  const int d = ambient.dimension();
  const int pm_dim = is_pseudomanifold(ambient, d) ? d : -1;

  PipelineResult result;
  auto pair = pair_new(subdivided_target, ambient);
  pair = pair_derive(pair);
  result.report.derived_status = pair.status().verdict;
  pair = pair_biased(pair);

  auto record = [&](std::string stage, std::optional<Move> move, std::size_t index) {
    auto step = snapshot(pair, std::move(stage), std::move(move), pm_dim);
    if (step.ambient_euler != chi) {
      throw InvariantViolation("step " + std::to_string(index) + ": Euler characteristic changed from " +
                               std::to_string(chi) + " to " + std::to_string(step.ambient_euler));
    }
    if (pm_dim >= 0 && !step.ambient_pseudomanifold) {
      throw InvariantViolation("step " + std::to_string(index) + ": ambient is no longer a pseudomanifold");
    }
    validate(pair.ambient());
    result.report.steps.push_back(std::move(step));
  };
  record("bias", std::nullopt, 0);

  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    try {
      pair = apply_move(pair, script.moves[i]);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(i, describe(script.moves[i]) + ": " + e.what());
    }
    record("move", script.moves[i], i);
  }

  std::optional<LabelMap> map;
  if (script.target_map) {
    map = check_target_map(pair.sub(), target, *script.target_map);
    if (!map) throw ScriptMismatch("target_map does not carry the final subcomplex onto the target");
  } else {
    map = isomorphism(pair.sub(), target, limits);
    if (!map) throw ScriptMismatch("final subcomplex is not isomorphic to the target");
  }
  result.report.final_isomorphism = map;
  result.ambient = relabel(pair.ambient(), *map);
  if (!is_subcomplex(target, result.ambient)) {
    throw InvariantViolation("target is not a subcomplex of the final ambient");
  }
  return result;
}

}  // namespace stellar

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stellar/complex.hpp"
#include "stellar/inducedness.hpp"
#include "stellar/isomorphism.hpp"

namespace stellar {

struct SubdivideMove {
  Simplex edge;
  Label new_label;
};

struct ContractMove {
  Simplex edge;
  /// Defaults to the smaller endpoint.
  std::optional<Label> survivor;
};

using Move = std::variant<SubdivideMove, ContractMove>;

std::string describe(const Move& move);

/// Ordered edge subdivisions and contractions, plus an optional bijection
/// from the final complex's labels to the labels of the intended target.
struct MoveScript {
  std::vector<Move> moves;
  std::optional<LabelMap> target_map;
};

/// Applies one move to a bare complex. Contractions are checked for validity
/// (InvalidEdge); subdivision labels must be fresh (NamingError).
SimplicialComplex apply_move(const SimplicialComplex& complex, const Move& move);

/// A subcomplex together with its ambient complex and cached status.
///
/// The status is the strongest verdict that holds: strongly_induced,
/// induced (with `simplex`/`intersection` holding the witness against
/// strong inducedness), or not_induced (with its offending simplex).
class ComplexPair {
 public:
  const SimplicialComplex& sub() const { return sub_; }
  const SimplicialComplex& ambient() const { return ambient_; }
  const InducednessWitness& status() const { return status_; }

  friend ComplexPair pair_new(SimplicialComplex sub, SimplicialComplex ambient);

 private:
  ComplexPair(SimplicialComplex sub, SimplicialComplex ambient);
  SimplicialComplex sub_;
  SimplicialComplex ambient_;
  InducednessWitness status_;
};

/// Throws NotSubcomplex unless sub ⊆ ambient.
ComplexPair pair_new(SimplicialComplex sub, SimplicialComplex ambient);

/// Derived subdivision of both components with a shared barycenter round, so
/// the sub's chains are exactly the ambient's chains inside the sub.
ComplexPair pair_derive(const ComplexPair& pair);

/// Replaces the ambient by the biased derived subdivision. Requires an
/// induced pair (PreconditionError otherwise); the result is strongly
/// induced (InvariantViolation otherwise).
ComplexPair pair_biased(const ComplexPair& pair);

/// Edge subdivision of both components followed by re-biasing. Requires a
/// strongly induced pair and an edge of the sub.
ComplexPair pair_subdivide_edge(const ComplexPair& pair, const Simplex& edge, Label new_label);

/// Contraction of a valid edge of the sub in both components. No re-biasing.
ComplexPair pair_contract_edge(const ComplexPair& pair, const Simplex& edge,
                               std::optional<Label> survivor = std::nullopt);

ComplexPair apply_move(const ComplexPair& pair, const Move& move);

struct PipelineStep {
  std::string stage;  // "bias" or "move"
  std::optional<Move> move;
  std::vector<std::size_t> sub_f_vector;
  std::vector<std::size_t> ambient_f_vector;
  long long ambient_euler = 0;
  Verdict verdict = Verdict::strongly_induced;
  bool ambient_pseudomanifold = false;
};

struct PipelineReport {
  /// Status of the pair right after the derived subdivision.
  Verdict derived_status = Verdict::induced;
  std::vector<PipelineStep> steps;
  /// Bijection from the final sub's labels onto the target's labels.
  std::optional<LabelMap> final_isomorphism;
};

struct PipelineResult {
  /// Final ambient, relabeled so that the target is literally a subcomplex.
  SimplicialComplex ambient;
  PipelineReport report;
};

/// Runs derive, bias, then the script on (subdivided_target ⊆ ambient), and
/// checks that the final sub matches `target` (through the script's
/// target_map, or through an isomorphism search when none is given).
///
/// Failures inside the script raise ScriptError with the 0-based move index;
/// a final mismatch raises ScriptMismatch.
PipelineResult pipeline_run(const SimplicialComplex& ambient,
                            const SimplicialComplex& subdivided_target,
                            const SimplicialComplex& target, const MoveScript& script,
                            const IsoLimits& limits = {});

}  // namespace stellar

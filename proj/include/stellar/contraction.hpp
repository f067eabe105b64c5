#pragma once

#include <optional>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// An edge is valid when no missing simplex contains it. Throws AbsentFace
/// when `edge` is not an edge of `complex`. When `blocking` is non-null it
/// receives the missing simplices containing the edge (shortlex order).
bool is_valid_edge(const SimplicialComplex& complex, const Simplex& edge,
                   std::vector<Simplex>* blocking = nullptr);

/// lk(u) ∩ lk(v) == lk(uv), compared as face sets. Throws AbsentFace.
bool link_condition(const SimplicialComplex& complex, const Simplex& edge);

/// Identifies the endpoints of `edge`, keeping `survivor` (default: the
/// smaller endpoint). Throws AbsentFace when `edge` is not an edge,
/// InvalidEdge (with the blocking missing simplices) when it is not valid,
/// and PreconditionError when `survivor` is not an endpoint.
SimplicialComplex contract_edge(const SimplicialComplex& complex, const Simplex& edge,
                                std::optional<Label> survivor = std::nullopt);

/// The relabel-and-merge quotient without any validity check. Exposed for
/// exploratory use and for tests.
SimplicialComplex identify_vertices(const SimplicialComplex& complex, Label keep, Label drop);

}  // namespace stellar

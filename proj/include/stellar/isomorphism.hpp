#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// Guards for canonical labeling. Exceeding either raises ResourceLimit.
struct IsoLimits {
  std::size_t max_vertices = 12;
  std::size_t max_nodes = 200000;
};

/// A relabeling-invariant encoding of a complex.
///
/// `order[i]` is the vertex that receives canonical index i; `facets` are the
/// facets rewritten in canonical indices and sorted. Two complexes are
/// isomorphic iff their encodings (`facets`, plus vertex count) are equal.
struct CanonicalForm {
  std::size_t num_vertices = 0;
  std::vector<std::vector<int>> facets;
  std::vector<Label> order;

  bool same_class(const CanonicalForm& other) const {
    return num_vertices == other.num_vertices && facets == other.facets;
  }
};

/// Canonical labeling by colour refinement on the vertex/facet incidence
/// structure, individualization, and backtracking with automorphism pruning.
CanonicalForm canonical_form(const SimplicialComplex& complex, const IsoLimits& limits = {});

/// A bijection of vertex labels carrying the facets of `a` onto those of `b`,
/// or nullopt when the complexes are not isomorphic.
std::optional<LabelMap> isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                    const IsoLimits& limits = {});

}  // namespace stellar

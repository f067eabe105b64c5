#pragma once

#include <vector>

#include "stellar/complex.hpp"

// Helpers shared between translation units; not part of the public surface.
namespace stellar::detail {

std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> generators);

/// Sorts and deduplicates; the caller guarantees no domination.
SimplicialComplex make_from_antichain(std::vector<Simplex> facets);

}  // namespace stellar::detail

#pragma once

#include <cstddef>
#include <optional>

#include "stellar/complex.hpp"
#include "stellar/isomorphism.hpp"
#include "stellar/pair_engine.hpp"

namespace stellar {

struct SearchLimits {
  std::size_t max_depth = 4;
  /// Subdivisions are only generated while the result stays within this many
  /// vertices. Both endpoints of the search must fit as well.
  std::size_t max_vertices = 10;
  /// Number of distinct isomorphism classes the search may visit before it
  /// gives up with ResourceLimit.
  std::size_t max_states = 200000;
  std::size_t max_iso_nodes = 200000;
};

struct SearchStats {
  std::size_t visited = 0;
  std::size_t expanded = 0;
  std::size_t frontier = 0;
  std::size_t depth = 0;
};

/// Breadth-first search over edge subdivisions and valid edge contractions,
/// deduplicated by canonical form. Returns a shortest script (within the
/// bounds) whose replay on `from` is isomorphic to `to`; the isomorphism is
/// stored in target_map. Returns nullopt when the depth bound is exhausted.
/// Throws ResourceLimit when an endpoint exceeds max_vertices or the state
/// budget runs out; the message carries the frontier statistics.
std::optional<MoveScript> search_script(const SimplicialComplex& from, const SimplicialComplex& to,
                                        const SearchLimits& limits = {},
                                        SearchStats* stats = nullptr);

/// Replays `script` on `from` (no ambient) and checks the result against
/// `to`: exactly through target_map when present, else by isomorphism.
/// Throws ScriptError for an invalid move.
bool verify_script(const SimplicialComplex& from, const MoveScript& script,
                   const SimplicialComplex& to, const IsoLimits& limits = {});

}  // namespace stellar

#pragma once

#include <cstdint>
#include <utility>

#include "stellar/complex.hpp"
#include "stellar/pair_engine.hpp"

namespace stellar {

inline constexpr std::size_t kDefaultVertexCap = 16;

struct RandomSpec {
  std::size_t n_vertices = 6;
  int max_dim = 2;
  /// Inclusion probability for top-dimensional candidates; lower-dimensional
  /// candidates use half of it.
  double density = 0.5;
  std::uint64_t seed = 0;
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// Random complex on labels "1".."n". A pure function of its parameters; the same
/// seed yields the same complex on every platform. Never void when n >= 1.
/// Throws ResourceLimit when n exceeds the cap, PreconditionError for
/// nonsensical parameters.
SimplicialComplex random_complex(const RandomSpec& spec);

/// Random ambient and the subcomplex it induces on a random vertex subset.
ComplexPair random_induced_pair(const RandomSpec& spec);

/// random_induced_pair followed by pair_biased.
ComplexPair random_strongly_induced_pair(const RandomSpec& spec);

/// Random ambient and the closure of random faces of it; not necessarily
/// induced.
std::pair<SimplicialComplex, SimplicialComplex> random_subcomplex_pair(const RandomSpec& spec);

}  // namespace stellar

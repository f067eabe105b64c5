#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

/// What a subdivision did and which labels it introduced.
struct SubdivisionRecord {
  enum class Kind { stellar, derived, biased };

  Kind kind = Kind::stellar;
  /// Round used for barycenter labels (derived and biased only).
  int round = 0;
  /// Faces subdivided, in the order they were processed (stellar: one face;
  /// derived: every face of dimension >= 1; biased: faces outside the sub).
  std::vector<Simplex> subdivided_faces;
  /// New vertex for each subdivided face; injective.
  std::map<Simplex, Label> new_labels;
};

/// First barycenter round that cannot collide with any label of `complex`.
int next_round(const SimplicialComplex& complex);

/// Replaces the star of `face` by the cone from `new_vertex` over its
/// boundary: facets F ⊇ face become {new_vertex} ∪ (F \ {w}) for each
/// w ∈ face.
///
/// Throws AbsentFace when `face` is not a face, PreconditionError when it is
/// a vertex (stellar subdivision at a vertex is a relabeling and is not
/// offered), NamingError when `new_vertex` is already a vertex.
SimplicialComplex stellar_subdivide(const SimplicialComplex& complex, const Simplex& face,
                                    Label new_vertex);

/// Stellar subdivision at an edge. Throws PreconditionError unless `edge`
/// has exactly two vertices.
SimplicialComplex edge_subdivide(const SimplicialComplex& complex, const Simplex& edge,
                                 Label new_vertex);

/// Barycentric subdivision computed directly from chains of faces. Original
/// vertices keep their labels; every face of dimension >= 1 becomes the
/// barycenter label `b{...}@round`. `round` defaults to next_round(complex).
std::pair<SimplicialComplex, SubdivisionRecord> derived_subdivision(
    const SimplicialComplex& complex, std::optional<int> round = std::nullopt);

/// Stellar subdivisions at every face of `ambient` not in `sub` with
/// dimension >= 1, larger faces first and lexicographically within a
/// dimension. The sub complex is untouched and remains a subcomplex of the
/// result. Throws NotSubcomplex unless sub ⊆ ambient.
std::pair<SimplicialComplex, SubdivisionRecord> biased_derived_subdivision(
    const SimplicialComplex& sub, const SimplicialComplex& ambient,
    std::optional<int> round = std::nullopt);

}  // namespace stellar

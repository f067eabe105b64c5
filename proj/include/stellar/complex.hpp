#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "stellar/label.hpp"
#include "stellar/simplex.hpp"

namespace stellar {

namespace detail {
struct FaceCache;
struct AntichainTag {};
}  // namespace detail

using FaceSet = std::unordered_set<Simplex, SimplexHash>;
using LabelMap = std::map<Label, Label>;

/// An abstract simplicial complex stored by its facets.
///
/// Immutable value type. The facet list is a sorted antichain; faces are
/// materialized on first use and shared between copies. The cache fill is
/// thread-safe, so a complex may be read from several threads.
class SimplicialComplex {
 public:
  /// The void complex (no faces at all).
  SimplicialComplex();
  /// Drops empty simplices and dominated facets.
  explicit SimplicialComplex(std::vector<Simplex> generators);
  /// Trusts the caller that `facets` is a sorted antichain of nonempty sets.
  SimplicialComplex(detail::AntichainTag, std::vector<Simplex> facets);

  /// Each facet is a nonempty list of tokens. Duplicate labels within a
  /// facet or empty facets raise MalformedInput.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  bool empty() const { return facets_.empty(); }
  /// -1 for the void complex.
  int dimension() const;

  /// Sorted vertex labels.
  const std::vector<Label>& vertices() const;
  std::size_t num_vertices() const { return vertices().size(); }
  bool has_vertex(Label v) const;

  /// Whether `s` is a face. The empty simplex is a face of every complex.
  bool contains(const Simplex& s) const;
  /// Faces of dimension `d`, sorted lexicographically.
  const std::vector<Simplex>& faces(int d) const;
  /// All nonempty faces in shortlex order.
  std::vector<Simplex> all_faces() const;
  const FaceSet& face_set() const;
  std::size_t num_faces() const;

  /// Facets that contain `s`, in facet order.
  std::vector<Simplex> facets_containing(const Simplex& s) const;
  /// Indices into facets() of facets that contain `v`.
  const std::vector<std::size_t>& facet_indices_of(Label v) const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  const detail::FaceCache& cache() const;

  std::vector<Simplex> facets_;
  std::shared_ptr<detail::FaceCache> cache_;
};

/// Closed star: closure of all faces containing `s`. Throws AbsentFace.
SimplicialComplex star(const SimplicialComplex& complex, const Simplex& s);

/// Faces disjoint from `s` whose union with `s` is a face. The empty face is
/// implicit, so the link of a facet is the void complex. Throws AbsentFace.
SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s);

/// f_i = number of i-dimensional faces, for i = 0..dim.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex);
long long euler_characteristic(const SimplicialComplex& complex);

/// Every facet of `sub` is a face of `ambient`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient);

/// Faces common to both complexes.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Faces of `complex` whose vertices all lie in `vertices`.
SimplicialComplex restrict_to(const SimplicialComplex& complex, const std::vector<Label>& vertices);

/// Applies a label substitution. Labels missing from `map` are kept. Throws
/// NamingError if the substitution is not injective on the vertex set.
SimplicialComplex relabel(const SimplicialComplex& complex, const LabelMap& map);

/// Pure of dimension d, every (d-1)-face in at most two facets, and the
/// facets are connected through shared (d-1)-faces. The void complex is not a
/// pseudomanifold.
bool is_pseudomanifold(const SimplicialComplex& complex, int d);

/// Checks the storage invariants (sorted antichain of nonempty facets, face
/// cache downward closed). Throws std::logic_error on violation.
void validate(const SimplicialComplex& complex);

}  // namespace stellar

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stellar/complex.hpp"

namespace stellar {

enum class Verdict {
  induced,
  not_induced,
  strongly_induced,
  not_strongly_induced,
};

std::string_view to_string(Verdict v);

/// Outcome of an inducedness check. Every negative verdict carries its
/// counterexample:
///   not_induced          -> `simplex` is a face of the ambient, not of the
///                           sub, with all vertices in the sub.
///   not_strongly_induced -> `simplex` is sigma, a face of ambient \ sub, and
///                           `intersection` lists the (>= 2) maximal faces of
///                           sub ∩ st(sigma).
/// When several witnesses exist the shortlex-least one is reported.
struct InducednessWitness {
  Verdict verdict = Verdict::induced;
  std::optional<Simplex> simplex;
  std::vector<Simplex> intersection;

  bool at_least_induced() const {
    return verdict == Verdict::induced || verdict == Verdict::strongly_induced;
  }
  bool strongly() const { return verdict == Verdict::strongly_induced; }
  std::string describe() const;
};

/// Minimal non-faces of `complex` of dimension >= 1 whose proper faces all
/// lie in `complex`, in shortlex order. Dimensions are bounded by
/// dim(complex) + 1, or by `max_dim` when that is smaller.
std::vector<Simplex> missing_simplices(const SimplicialComplex& complex,
                                       std::optional<int> max_dim = std::nullopt);

/// Missing simplices of `complex` that contain `s`.
std::vector<Simplex> missing_simplices_containing(const SimplicialComplex& complex, const Simplex& s);

/// Throws NotSubcomplex unless sub ⊆ ambient.
InducednessWitness is_induced(const SimplicialComplex& sub, const SimplicialComplex& ambient);

/// Throws NotSubcomplex unless sub ⊆ ambient.
///
/// An empty intersection sub ∩ st(sigma) counts as a single (empty) simplex.
InducednessWitness is_strongly_induced(const SimplicialComplex& sub,
                                       const SimplicialComplex& ambient);

/// sub ∩ st(sigma, ambient); used to re-verify witnesses.
SimplicialComplex star_intersection(const SimplicialComplex& sub, const SimplicialComplex& ambient,
                                    const Simplex& sigma);

}  // namespace stellar

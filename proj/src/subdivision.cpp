#include "stellar/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "stellar/errors.hpp"
#include "stellar/internal.hpp"

namespace stellar {

namespace {

// Facet list under a sequence of stellar moves. Removed facets are
// tombstoned; the vertex index only ever grows.
class FacetWorkspace {
 public:
  explicit FacetWorkspace(const std::vector<Simplex>& facets) {
    for (const auto& f : facets) add(f);
  }

  void stellar(const Simplex& face, Label apex) {
    std::vector<std::size_t> hits;
    for (std::size_t i : index_[face[0]]) {
      if (alive_[i] && face.is_subset_of(facets_[i])) hits.push_back(i);
    }
    for (std::size_t i : hits) {
      alive_[i] = false;
      const Simplex f = facets_[i];
      for (Label w : face) add(f.without(w).with(apex));
    }
  }

  SimplicialComplex finish() && {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (alive_[i]) out.push_back(std::move(facets_[i]));
    }
    return detail::make_from_antichain(std::move(out));
  }

 private:
  void add(Simplex f) {
    for (Label v : f) index_[v].push_back(facets_.size());
    facets_.push_back(std::move(f));
    alive_.push_back(true);
  }

  std::vector<Simplex> facets_;
  std::vector<bool> alive_;
  std::unordered_map<Label, std::vector<std::size_t>> index_;
};

Label vertex_for(const Simplex& face, int round) {
  return face.size() == 1 ? face[0] : Label::barycenter(face.vertices(), round);
}

}  // namespace

int next_round(const SimplicialComplex& complex) {
  auto r = max_round(complex.vertices());
  return r ? *r + 1 : 0;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& complex, const Simplex& face,
                                    Label new_vertex) {
  if (face.size() < 2) {
    throw PreconditionError("stellar subdivision requires a face of dimension >= 1, got " +
                            face.to_string());
  }
  if (!complex.contains(face)) throw AbsentFace("simplex " + face.to_string() + " is not a face");
  if (complex.has_vertex(new_vertex)) {
    throw NamingError("label '" + new_vertex.token() + "' is already a vertex");
  }
  FacetWorkspace work(complex.facets());
  work.stellar(face, new_vertex);
  return std::move(work).finish();
}

SimplicialComplex edge_subdivide(const SimplicialComplex& complex, const Simplex& edge,
                                 Label new_vertex) {
  if (edge.size() != 2) {
    throw PreconditionError("edge subdivision requires an edge, got " + edge.to_string());
  }
  return stellar_subdivide(complex, edge, new_vertex);
}

std::pair<SimplicialComplex, SubdivisionRecord> derived_subdivision(
    const SimplicialComplex& complex, std::optional<int> round) {
  SubdivisionRecord record;
  record.kind = SubdivisionRecord::Kind::derived;
  record.round = round.value_or(next_round(complex));

  // Maximal chains of a facet correspond to orderings of its vertices.
  std::vector<Simplex> chains;
  for (const auto& facet : complex.facets()) {
    std::vector<Label> order(facet.begin(), facet.end());
    do {
      std::vector<Label> chain;
      chain.reserve(order.size());
      std::vector<Label> prefix;
      for (Label v : order) {
        prefix.push_back(v);
        chain.push_back(vertex_for(Simplex(prefix), record.round));
      }
      chains.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  for (int d = complex.dimension(); d >= 1; --d) {
    for (const auto& face : complex.faces(d)) {
      record.subdivided_faces.push_back(face);
      record.new_labels.emplace(face, vertex_for(face, record.round));
    }
  }
  return {detail::make_from_antichain(std::move(chains)), std::move(record)};
}

std::pair<SimplicialComplex, SubdivisionRecord> biased_derived_subdivision(
    const SimplicialComplex& sub, const SimplicialComplex& ambient, std::optional<int> round) {
  if (!is_subcomplex(sub, ambient)) throw NotSubcomplex("sub is not a subcomplex of the ambient");

  SubdivisionRecord record;
  record.kind = SubdivisionRecord::Kind::biased;
  record.round = round.value_or(next_round(ambient));

  FacetWorkspace work(ambient.facets());
  for (int d = ambient.dimension(); d >= 1; --d) {
    for (const auto& face : ambient.faces(d)) {
      if (sub.contains(face)) continue;
      Label apex = vertex_for(face, record.round);
      if (ambient.has_vertex(apex)) {
        throw NamingError("barycenter label '" + apex.token() + "' is already a vertex");
      }
      work.stellar(face, apex);
      record.subdivided_faces.push_back(face);
      record.new_labels.emplace(face, apex);
    }
  }
  return {std::move(work).finish(), std::move(record)};
}

}  // namespace stellar

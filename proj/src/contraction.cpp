#include "stellar/contraction.hpp"

#include "stellar/errors.hpp"
#include "stellar/inducedness.hpp"

namespace stellar {

namespace {

void require_edge(const SimplicialComplex& complex, const Simplex& edge) {
  if (edge.size() != 2) throw PreconditionError("expected an edge, got " + edge.to_string());
  if (!complex.contains(edge)) throw AbsentFace("edge " + edge.to_string() + " is not a face");
}

}  // namespace

bool is_valid_edge(const SimplicialComplex& complex, const Simplex& edge,
                   std::vector<Simplex>* blocking) {
  require_edge(complex, edge);
  auto missing = missing_simplices_containing(complex, edge);
  bool valid = missing.empty();
  if (blocking) *blocking = std::move(missing);
  return valid;
}

bool link_condition(const SimplicialComplex& complex, const Simplex& edge) {
  require_edge(complex, edge);
  const auto lu = link(complex, Simplex{edge[0]});
  const auto lv = link(complex, Simplex{edge[1]});
  const auto le = link(complex, edge);
  return intersection(lu, lv) == le;
}

SimplicialComplex identify_vertices(const SimplicialComplex& complex, Label keep, Label drop) {
  std::vector<Simplex> images;
  images.reserve(complex.num_facets());
  for (const auto& f : complex.facets()) {
    images.push_back(f.contains(drop) ? f.without(drop).with(keep) : f);
  }
  return SimplicialComplex(std::move(images));
}

SimplicialComplex contract_edge(const SimplicialComplex& complex, const Simplex& edge,
                                std::optional<Label> survivor) {
  require_edge(complex, edge);
  Label keep = survivor.value_or(edge[0]);
  if (!edge.contains(keep)) {
    throw PreconditionError("survivor '" + keep.token() + "' is not an endpoint of " +
                            edge.to_string());
  }
  Label drop = keep == edge[0] ? edge[1] : edge[0];
  std::vector<Simplex> blocking;
  if (!is_valid_edge(complex, edge, &blocking)) {
    std::string what = "edge " + edge.to_string() + " is not valid; blocked by";
    for (const auto& m : blocking) what += " " + m.to_string();
    throw InvalidEdge(what, std::move(blocking));
  }
  return identify_vertices(complex, keep, drop);
}

}  // namespace stellar

#include "stellar/inducedness.hpp"

#include <algorithm>
#include <map>

#include "stellar/errors.hpp"
#include "stellar/internal.hpp"

namespace stellar {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::induced:
      return "induced";
    case Verdict::not_induced:
      return "not_induced";
    case Verdict::strongly_induced:
      return "strongly_induced";
    case Verdict::not_strongly_induced:
      return "not_strongly_induced";
  }
  return "unknown";
}

std::string InducednessWitness::describe() const {
  std::string out(to_string(verdict));
  if (simplex) out += " at " + simplex->to_string();
  if (!intersection.empty()) {
    out += " (intersection facets:";
    for (const auto& f : intersection) out += " " + f.to_string();
    out += ")";
  }
  return out;
}

namespace {

bool all_boundary_present(const SimplicialComplex& complex, const Simplex& s) {
  for (const auto& b : s.boundary()) {
    if (!complex.contains(b)) return false;
  }
  return true;
}

void require_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  for (const auto& f : sub.facets()) {
    if (!ambient.contains(f)) {
      throw NotSubcomplex("facet " + f.to_string() + " of the subcomplex is not a face of the ambient");
    }
  }
}

}  // namespace

std::vector<Simplex> missing_simplices(const SimplicialComplex& complex, std::optional<int> max_dim) {
  std::vector<Simplex> out;
  int bound = complex.dimension() + 1;
  if (max_dim) bound = std::min(bound, *max_dim);
  if (bound < 1) return out;

  const auto& verts = complex.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Simplex e{verts[i], verts[j]};
      if (!complex.contains(e)) out.push_back(std::move(e));
    }
  }
  for (int d = 2; d <= bound; ++d) {
    for (const auto& tau : complex.faces(d - 1)) {
      Label last = tau[tau.size() - 1];
      auto start = std::upper_bound(verts.begin(), verts.end(), last);
      for (auto it = start; it != verts.end(); ++it) {
        Simplex cand = tau.with(*it);
        if (!complex.contains(cand) && all_boundary_present(complex, cand)) {
          out.push_back(std::move(cand));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Simplex> missing_simplices_containing(const SimplicialComplex& complex, const Simplex& s) {
  // A missing simplex m ⊇ s has m \ s in the link of every proper face of s
  // obtained by dropping a vertex; in particular m \ {u} is a face for each
  // u ∈ s. Candidates are therefore s ∪ tau with tau drawn from faces that
  // extend s \ {u} for the first vertex u.
  std::vector<Simplex> out;
  if (s.empty()) return out;
  if (complex.contains(s)) {
    const Simplex rest = s.without(s[0]);
    FaceSet seen;
    for (const auto& f : complex.facets_containing(rest)) {
      const Simplex free = f.difference(s);
      for (const auto& tau : free.nonempty_faces()) {
        Simplex cand = s.union_with(tau);
        if (seen.contains(cand)) continue;
        seen.insert(cand);
        if (!complex.contains(cand) && all_boundary_present(complex, cand)) out.push_back(std::move(cand));
      }
    }
  } else if (all_boundary_present(complex, s) && s.size() >= 2) {
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

InducednessWitness is_induced(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  require_subcomplex(sub, ambient);
  const Simplex sub_vertices(sub.vertices());
  std::optional<Simplex> worst;
  for (const auto& f : ambient.facets()) {
    Simplex restricted = f.intersection(sub_vertices);
    if (restricted.empty() || sub.contains(restricted)) continue;
    for (const auto& face : restricted.nonempty_faces()) {
      if (sub.contains(face)) continue;
      if (!worst || shortlex_less(face, *worst)) worst = face;
    }
  }
  InducednessWitness w;
  if (worst) {
    w.verdict = Verdict::not_induced;
    w.simplex = std::move(worst);
  }
  return w;
}

SimplicialComplex star_intersection(const SimplicialComplex& sub, const SimplicialComplex& ambient,
                                    const Simplex& sigma) {
  return intersection(sub, star(ambient, sigma));
}

InducednessWitness is_strongly_induced(const SimplicialComplex& sub,
                                       const SimplicialComplex& ambient) {
  require_subcomplex(sub, ambient);

  // Maximal faces of sub inside each ambient facet, deduplicated: most
  // facets share one of a few such antichains.
  const auto& facets = ambient.facets();
  std::map<std::vector<Simplex>, int> ids;
  std::vector<std::vector<Simplex>> antichains;
  std::vector<int> inside(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::vector<Simplex> parts;
    for (Label v : facets[i]) {
      for (std::size_t g : sub.facet_indices_of(v)) {
        parts.push_back(sub.facets()[g].intersection(facets[i]));
      }
    }
    auto chain = detail::reduce_to_antichain(std::move(parts));
    auto [it, fresh] = ids.emplace(std::move(chain), static_cast<int>(antichains.size()));
    if (fresh) antichains.push_back(it->first);
    inside[i] = it->second;
  }

  // Verdict per set of antichain ids; the empty optional means "single simplex".
  std::map<std::vector<int>, std::optional<std::vector<Simplex>>> verdicts;
  auto evaluate = [&](const std::vector<int>& key) -> const std::optional<std::vector<Simplex>>& {
    auto it = verdicts.find(key);
    if (it != verdicts.end()) return it->second;
    std::vector<Simplex> parts;
    for (int id : key) parts.insert(parts.end(), antichains[id].begin(), antichains[id].end());
    auto maximal = detail::reduce_to_antichain(std::move(parts));
    std::optional<std::vector<Simplex>> bad;
    if (maximal.size() >= 2) bad = std::move(maximal);
    return verdicts.emplace(key, std::move(bad)).first->second;
  };

  InducednessWitness w;
  w.verdict = Verdict::strongly_induced;
  std::vector<int> key;
  for (int d = 0; d <= ambient.dimension(); ++d) {
    for (const auto& sigma : ambient.faces(d)) {
      key.clear();
      // Scan the facets of the vertex of sigma with the smallest star.
      const std::vector<std::size_t>* scan = &ambient.facet_indices_of(sigma[0]);
      for (Label v : sigma) {
        const auto& list = ambient.facet_indices_of(v);
        if (list.size() < scan->size()) scan = &list;
      }
      for (std::size_t i : *scan) {
        if (sigma.is_subset_of(facets[i])) key.push_back(inside[i]);
      }
      std::sort(key.begin(), key.end());
      key.erase(std::unique(key.begin(), key.end()), key.end());
      if (key.size() == 1 && antichains[key[0]].size() <= 1) continue;
      const auto& bad = evaluate(key);
      if (!bad || sub.contains(sigma)) continue;
      w.verdict = Verdict::not_strongly_induced;
      w.simplex = sigma;
      w.intersection = *bad;
      return w;
    }
  }
  return w;
}

}  // namespace stellar

#include "oracles.hpp"

#include <algorithm>
#include <functional>

#include "stellar/subdivision.hpp"

namespace stellar::oracle {

Simplex simplex(const std::string& shorthand) {
  std::vector<Label> labels;
  for (char c : shorthand) labels.push_back(Label::intern(std::string(1, c)));
  return Simplex(std::move(labels));
}

SimplicialComplex parse(const std::string& shorthand) {
  std::vector<Simplex> facets;
  std::string word;
  for (char c : shorthand + " ") {
    if (c == ' ') {
      if (!word.empty()) facets.push_back(simplex(word));
      word.clear();
    } else {
      word += c;
    }
  }
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex tetrahedron_boundary() { return parse("123 124 134 234"); }

SimplicialComplex octahedron_boundary() {
  // Antipodal pairs 1-2, 3-4, 5-6.
  return parse("135 136 145 146 235 236 245 246");
}

SimplicialComplex four_cycle() { return parse("12 23 34 14"); }

Faces faces_of(const SimplicialComplex& c) {
  Faces out;
  for (const auto& f : c.facets()) {
    auto verts = f.vertices();
    for (unsigned mask = 1; mask < (1u << verts.size()); ++mask) {
      std::vector<Label> face;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask & (1u << i)) face.push_back(verts[i]);
      out.insert(Simplex(std::move(face)));
    }
  }
  return out;
}

std::vector<Simplex> maximal(const Faces& faces) {
  std::vector<Simplex> out;
  for (const auto& f : faces) {
    bool dominated = std::any_of(faces.begin(), faces.end(), [&](const Simplex& g) {
      return g.size() > f.size() && f.is_subset_of(g);
    });
    if (!dominated) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (const auto& s : faces_of(c)) {
    auto d = static_cast<std::size_t>(s.dim());
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

long long euler(const SimplicialComplex& c) {
  long long chi = 0;
  for (const auto& s : faces_of(c)) chi += s.dim() % 2 == 0 ? 1 : -1;
  return chi;
}

Faces link(const SimplicialComplex& c, const Simplex& s) {
  Faces all = faces_of(c);
  Faces out;
  for (const auto& t : all) {
    if (!t.intersects(s) && all.contains(t.union_with(s))) out.insert(t);
  }
  return out;
}

Faces star(const SimplicialComplex& c, const Simplex& s) {
  Faces all = faces_of(c);
  Faces out;
  for (const auto& t : all) {
    if (!s.is_subset_of(t)) continue;
    auto verts = t.vertices();
    for (unsigned mask = 1; mask < (1u << verts.size()); ++mask) {
      std::vector<Label> face;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask & (1u << i)) face.push_back(verts[i]);
      out.insert(Simplex(std::move(face)));
    }
  }
  return out;
}

std::vector<Simplex> missing_simplices(const SimplicialComplex& c) {
  Faces all = faces_of(c);
  std::vector<Label> verts;
  for (const auto& f : all)
    if (f.size() == 1) verts.push_back(f[0]);
  const std::size_t limit = static_cast<std::size_t>(c.dimension() + 2);
  std::vector<Simplex> out;
  for (unsigned long mask = 1; mask < (1ul << verts.size()); ++mask) {
    std::vector<Label> cand;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (mask & (1ul << i)) cand.push_back(verts[i]);
    if (cand.size() < 2 || cand.size() > limit) continue;
    Simplex s(std::move(cand));
    if (all.contains(s)) continue;
    bool boundary = true;
    for (const auto& b : s.boundary()) boundary = boundary && all.contains(b);
    if (boundary) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool is_induced(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  Faces sub_faces = faces_of(sub);
  std::set<Label> verts;
  for (const auto& f : sub_faces)
    if (f.size() == 1) verts.insert(f[0]);
  for (const auto& f : faces_of(ambient)) {
    bool inside = std::all_of(f.begin(), f.end(), [&](Label v) { return verts.contains(v); });
    if (inside && !sub_faces.contains(f)) return false;
  }
  return true;
}

std::optional<Simplex> strong_witness(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  Faces sub_faces = faces_of(sub);
  Faces amb_faces = faces_of(ambient);
  std::vector<Simplex> sigmas;
  for (const auto& f : amb_faces)
    if (!sub_faces.contains(f)) sigmas.push_back(f);
  std::sort(sigmas.begin(), sigmas.end(), shortlex_less);
  for (const auto& sigma : sigmas) {
    // f lies in the closed star of sigma iff f ∪ sigma is a face.
    Faces common;
    for (const auto& f : sub_faces)
      if (amb_faces.contains(f.union_with(sigma))) common.insert(f);
    if (maximal(common).size() >= 2) return sigma;
  }
  return std::nullopt;
}

Faces contraction_faces(const SimplicialComplex& c, Label keep, Label drop) {
  Faces out;
  for (const auto& f : faces_of(c)) {
    out.insert(f.contains(drop) ? f.without(drop).with(keep) : f);
  }
  return out;
}

SimplicialComplex derived_by_stellar_schedule(const SimplicialComplex& c, int round) {
  SimplicialComplex current = c;
  for (int d = c.dimension(); d >= 1; --d) {
    for (const auto& face : c.faces(d)) {
      current = stellar_subdivide(current, face, Label::barycenter(face.vertices(), round));
    }
  }
  return current;
}

Faces biased_by_chains(const SimplicialComplex& sub, const SimplicialComplex& ambient, int round) {
  Faces sub_faces = faces_of(sub);
  Faces amb_faces = faces_of(ambient);
  std::vector<Simplex> outside;
  for (const auto& f : amb_faces)
    if (f.size() >= 2 && !sub_faces.contains(f)) outside.push_back(f);
  std::vector<Simplex> bases{Simplex{}};
  for (const auto& f : amb_faces)
    if (f.size() == 1 || sub_faces.contains(f)) bases.push_back(f);

  Faces out;
  std::vector<Label> chain;
  std::function<void(const Simplex&, const Simplex&)> extend = [&](const Simplex& base,
                                                                   const Simplex& top) {
    if (!chain.empty() || !base.empty()) out.insert(Simplex(chain).union_with(base));
    for (const auto& next : outside) {
      if (top.size() < next.size() && top.is_subset_of(next)) {
        chain.push_back(Label::barycenter(next.vertices(), round));
        extend(base, next);
        chain.pop_back();
      }
    }
  };
  for (const auto& base : bases) extend(base, base);
  return out;
}

Faces restricted_faces(const SimplicialComplex& c, const std::vector<Label>& vertices) {
  Faces out;
  for (const auto& f : faces_of(c)) {
    bool inside = std::all_of(f.begin(), f.end(), [&](Label v) {
      return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    });
    if (inside) out.insert(f);
  }
  return out;
}

bool link_condition(const SimplicialComplex& c, const Simplex& edge) {
  Faces lu = oracle::link(c, Simplex{edge[0]});
  Faces lv = oracle::link(c, Simplex{edge[1]});
  Faces le = oracle::link(c, edge);
  Faces both;
  for (const auto& f : lu)
    if (lv.contains(f)) both.insert(f);
  return both == le;
}

std::optional<Simplex> pick_edge(const SimplicialComplex& c, std::uint64_t salt) {
  std::vector<Simplex> edges;
  for (const auto& f : faces_of(c))
    if (f.size() == 2) edges.push_back(f);
  if (edges.empty()) return std::nullopt;
  return edges[salt % edges.size()];
}

std::optional<Simplex> pick_valid_edge(const SimplicialComplex& c, std::uint64_t salt) {
  std::vector<Simplex> edges;
  for (const auto& f : faces_of(c))
    if (f.size() == 2 && link_condition(c, f)) edges.push_back(f);
  if (edges.empty()) return std::nullopt;
  return edges[salt % edges.size()];
}

}  // namespace stellar::oracle

#include "stellar/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "stellar/errors.hpp"
#include "stellar/internal.hpp"

namespace stellar {

namespace detail {

struct FaceCache {
  std::once_flag index_once;
  std::vector<Label> vertices;
  std::unordered_map<Label, std::vector<std::size_t>> vertex_facets;

  std::once_flag faces_once;
  std::vector<std::vector<Simplex>> by_dim;
  FaceSet set;
};

std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> generators) {
  std::erase_if(generators, [](const Simplex& s) { return s.empty(); });
  std::sort(generators.begin(), generators.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<Simplex> kept;
  std::unordered_map<Label, std::vector<std::size_t>> by_vertex;
  for (auto& g : generators) {
    bool dominated = false;
    if (auto it = by_vertex.find(g[0]); it != by_vertex.end()) {
      for (std::size_t idx : it->second) {
        if (kept[idx].size() > g.size() && g.is_subset_of(kept[idx])) {
          dominated = true;
          break;
        }
      }
    }
    if (dominated) continue;
    for (Label v : g) by_vertex[v].push_back(kept.size());
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

SimplicialComplex make_from_antichain(std::vector<Simplex> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex(AntichainTag{}, std::move(facets));
}

}  // namespace detail

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<detail::FaceCache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> generators)
    : facets_(detail::reduce_to_antichain(std::move(generators))),
      cache_(std::make_shared<detail::FaceCache>()) {}

SimplicialComplex::SimplicialComplex(detail::AntichainTag, std::vector<Simplex> facets)
    : facets_(std::move(facets)), cache_(std::make_shared<detail::FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<Simplex> simplices;
  simplices.reserve(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) {
      throw MalformedInput("facet " + std::to_string(i) + " is empty");
    }
    try {
      simplices.push_back(Simplex::of(facets[i]));
    } catch (const MalformedInput& e) {
      throw MalformedInput("facet " + std::to_string(i) + ": " + e.what());
    }
  }
  return SimplicialComplex(std::move(simplices));
}

const detail::FaceCache& SimplicialComplex::cache() const {
  std::call_once(cache_->index_once, [this] {
    auto& c = *cache_;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      for (Label v : facets_[i]) c.vertex_facets[v].push_back(i);
    }
    c.vertices.reserve(c.vertex_facets.size());
    for (const auto& [v, _] : c.vertex_facets) c.vertices.push_back(v);
    std::sort(c.vertices.begin(), c.vertices.end());
  });
  return *cache_;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.dim());
  return d;
}

const std::vector<Label>& SimplicialComplex::vertices() const { return cache().vertices; }

bool SimplicialComplex::has_vertex(Label v) const { return cache().vertex_facets.contains(v); }

const FaceSet& SimplicialComplex::face_set() const {
  const auto& c = cache();
  std::call_once(cache_->faces_once, [this] {
    auto& fc = *cache_;
    for (const auto& f : facets_) {
      for (auto& face : f.nonempty_faces()) fc.set.insert(std::move(face));
    }
    fc.by_dim.assign(static_cast<std::size_t>(dimension() + 1), {});
    for (const auto& face : fc.set) fc.by_dim[static_cast<std::size_t>(face.dim())].push_back(face);
    for (auto& layer : fc.by_dim) std::sort(layer.begin(), layer.end());
  });
  return c.set;
}

namespace {

// Facet indices of the vertex of s with the fewest facets.
const std::vector<std::size_t>& narrowest_star(const SimplicialComplex& c, const Simplex& s) {
  const std::vector<std::size_t>* best = &c.facet_indices_of(s[0]);
  for (Label v : s) {
    const auto& list = c.facet_indices_of(v);
    if (list.size() < best->size()) best = &list;
  }
  return *best;
}

}  // namespace

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  if (s.size() == 1) return has_vertex(s[0]);
  for (std::size_t i : narrowest_star(*this, s)) {
    if (s.is_subset_of(facets_[i])) return true;
  }
  return false;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  static const std::vector<Simplex> none;
  face_set();
  if (d < 0 || d >= static_cast<int>(cache_->by_dim.size())) return none;
  return cache_->by_dim[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  face_set();
  std::vector<Simplex> out;
  out.reserve(cache_->set.size());
  for (const auto& layer : cache_->by_dim) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::num_faces() const { return face_set().size(); }

const std::vector<std::size_t>& SimplicialComplex::facet_indices_of(Label v) const {
  static const std::vector<std::size_t> none;
  const auto& idx = cache().vertex_facets;
  auto it = idx.find(v);
  return it == idx.end() ? none : it->second;
}

std::vector<Simplex> SimplicialComplex::facets_containing(const Simplex& s) const {
  if (s.empty()) return facets_;
  std::vector<Simplex> out;
  for (std::size_t i : narrowest_star(*this, s)) {
    if (s.is_subset_of(facets_[i])) out.push_back(facets_[i]);
  }
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ", ";
    out += facets_[i].to_string();
  }
  out += ']';
  return out;
}

namespace {

void require_face(const SimplicialComplex& complex, const Simplex& s) {
  if (!complex.contains(s)) throw AbsentFace("simplex " + s.to_string() + " is not a face");
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& complex, const Simplex& s) {
  require_face(complex, s);
  return detail::make_from_antichain(complex.facets_containing(s));
}

SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s) {
  require_face(complex, s);
  std::vector<Simplex> generators;
  for (const auto& f : complex.facets_containing(s)) generators.push_back(f.difference(s));
  return SimplicialComplex(std::move(generators));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= complex.dimension(); ++d) f.push_back(complex.faces(d).size());
  return f;
}

long long euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  auto f = f_vector(complex);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  return std::all_of(sub.facets().begin(), sub.facets().end(),
                     [&](const Simplex& f) { return ambient.contains(f); });
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> generators;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      auto common = fa.intersection(fb);
      if (!common.empty()) generators.push_back(std::move(common));
    }
  }
  return SimplicialComplex(std::move(generators));
}

SimplicialComplex restrict_to(const SimplicialComplex& complex, const std::vector<Label>& vertices) {
  std::vector<Label> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  Simplex keep(std::move(sorted));
  std::vector<Simplex> generators;
  generators.reserve(complex.num_facets());
  for (const auto& f : complex.facets()) generators.push_back(f.intersection(keep));
  return SimplicialComplex(std::move(generators));
}

SimplicialComplex relabel(const SimplicialComplex& complex, const LabelMap& map) {
  std::unordered_set<Label> images;
  for (Label v : complex.vertices()) {
    auto it = map.find(v);
    Label image = it == map.end() ? v : it->second;
    if (!images.insert(image).second) {
      throw NamingError("relabeling sends two vertices to '" + image.token() + "'");
    }
  }
  std::vector<Simplex> facets;
  facets.reserve(complex.num_facets());
  for (const auto& f : complex.facets()) {
    std::vector<Label> mapped;
    mapped.reserve(f.size());
    for (Label v : f) {
      auto it = map.find(v);
      mapped.push_back(it == map.end() ? v : it->second);
    }
    facets.emplace_back(std::move(mapped));
  }
  return detail::make_from_antichain(std::move(facets));
}

bool is_pseudomanifold(const SimplicialComplex& complex, int d) {
  const auto& facets = complex.facets();
  if (facets.empty() || d < 0) return false;
  if (std::any_of(facets.begin(), facets.end(), [d](const Simplex& f) { return f.dim() != d; })) {
    return false;
  }
  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> ridge_facets;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (auto& r : facets[i].boundary()) ridge_facets[std::move(r)].push_back(i);
  }
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : ridge_facets) {
    if (owners.size() > 2) return false;
    if (owners.size() == 2) parent[find(owners[0])] = find(owners[1]);
  }
  std::size_t root = find(0);
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

void validate(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  if (!std::is_sorted(facets.begin(), facets.end())) {
    throw std::logic_error("facets are not sorted");
  }
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].empty()) throw std::logic_error("empty facet stored");
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].is_subset_of(facets[j])) {
        throw std::logic_error("facet " + facets[i].to_string() + " is dominated by " +
                               facets[j].to_string());
      }
    }
  }
  const auto& set = complex.face_set();
  for (const auto& face : set) {
    for (const auto& b : face.boundary()) {
      if (!b.empty() && !set.contains(b)) {
        throw std::logic_error("face set not downward closed at " + face.to_string());
      }
    }
  }
}

}  // namespace stellar

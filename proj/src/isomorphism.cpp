#include "stellar/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

using Colors = std::vector<int>;
using Encoding = std::vector<std::vector<int>>;

// Dense ranks of `keys` under their natural order.
template <typename Key>
Colors dense_ranks(const std::vector<Key>& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Colors out(keys.size());
  int rank = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || keys[idx[i - 1]] < keys[idx[i]]) ++rank;
    out[idx[i]] = rank;
  }
  return out;
}

int count_classes(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Canonizer {
 public:
  Canonizer(const SimplicialComplex& complex, const IsoLimits& limits)
      : labels_(complex.vertices()), limits_(limits) {
    std::unordered_map<Label, int> index;
    for (std::size_t i = 0; i < labels_.size(); ++i) index.emplace(labels_[i], static_cast<int>(i));
    incident_.resize(labels_.size());
    for (const auto& f : complex.facets()) {
      std::vector<int> ids;
      for (Label v : f) ids.push_back(index.at(v));
      for (int v : ids) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(facets_.size()));
      facets_.push_back(std::move(ids));
    }
  }

  CanonicalForm run() {
    CanonicalForm out;
    out.num_vertices = labels_.size();
    if (labels_.empty()) return out;
    std::vector<int> path;
    search(Colors(labels_.size(), 0), path);
    out.facets = best_;
    out.order.resize(labels_.size(), labels_.front());
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      out.order[static_cast<std::size_t>(best_lab_[v])] = labels_[v];
    }
    return out;
  }

 private:
  void refine(Colors& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> fsig(facets_.size());
      for (std::size_t f = 0; f < facets_.size(); ++f) {
        for (int v : facets_[f]) fsig[f].push_back(colors[static_cast<std::size_t>(v)]);
        std::sort(fsig[f].begin(), fsig[f].end());
      }
      Colors fid = dense_ranks(fsig);
      std::vector<std::vector<int>> vsig(colors.size());
      for (std::size_t v = 0; v < colors.size(); ++v) {
        vsig[v].push_back(colors[v]);
        std::vector<int> around;
        for (int f : incident_[v]) around.push_back(fid[static_cast<std::size_t>(f)]);
        std::sort(around.begin(), around.end());
        vsig[v].insert(vsig[v].end(), around.begin(), around.end());
      }
      Colors next = dense_ranks(vsig);
      int next_classes = count_classes(next);
      colors = std::move(next);
      if (next_classes == classes) break;
      classes = next_classes;
    }
  }

  void search(Colors colors, std::vector<int>& path) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceLimit("canonical labeling exceeded node budget of " +
                          std::to_string(limits_.max_nodes));
    }
    refine(colors);
    const int n = static_cast<int>(colors.size());
    if (count_classes(colors) == n) {
      leaf(colors);
      return;
    }

    // First non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<int> tried;
    for (int w = 0; w < n; ++w) {
      if (colors[static_cast<std::size_t>(w)] != target) continue;
      if (!tried.empty() && equivalent_to_tried(w, tried, path)) continue;
      tried.push_back(w);
      Colors next(colors.size());
      for (std::size_t x = 0; x < colors.size(); ++x) next[x] = 2 * colors[x] + 1;
      next[static_cast<std::size_t>(w)] = 2 * colors[static_cast<std::size_t>(w)];
      path.push_back(w);
      search(std::move(next), path);
      path.pop_back();
    }
  }

  // Whether w lies in the orbit of an already explored candidate under the
  // known automorphisms that fix the current path pointwise.
  bool equivalent_to_tried(int w, const std::vector<int>& tried, const std::vector<int>& path) const {
    std::vector<int> parent(labels_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < gamma.size(); ++x) {
        parent[static_cast<std::size_t>(find(static_cast<int>(x)))] = find(gamma[x]);
      }
    }
    int root = find(w);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
  }

  void leaf(const Colors& lab) {
    Encoding enc;
    enc.reserve(facets_.size());
    for (const auto& f : facets_) {
      std::vector<int> mapped;
      mapped.reserve(f.size());
      for (int v : f) mapped.push_back(lab[static_cast<std::size_t>(v)]);
      std::sort(mapped.begin(), mapped.end());
      enc.push_back(std::move(mapped));
    }
    std::sort(enc.begin(), enc.end());
    if (best_lab_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_lab_ = lab;
      return;
    }
    if (enc == best_) {
      std::vector<int> inverse_best(lab.size());
      for (std::size_t u = 0; u < lab.size(); ++u) {
        inverse_best[static_cast<std::size_t>(best_lab_[u])] = static_cast<int>(u);
      }
      std::vector<int> gamma(lab.size());
      for (std::size_t v = 0; v < lab.size(); ++v) {
        gamma[v] = inverse_best[static_cast<std::size_t>(lab[v])];
      }
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const std::vector<Label>& labels_;
  IsoLimits limits_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> incident_;
  std::size_t nodes_ = 0;
  Encoding best_;
  Colors best_lab_;
  std::vector<std::vector<int>> automorphisms_;
};

void check_guard(const SimplicialComplex& complex, const IsoLimits& limits) {
  if (complex.num_vertices() > limits.max_vertices) {
    throw ResourceLimit("isomorphism size guard: " + std::to_string(complex.num_vertices()) +
                        " vertices exceeds limit " + std::to_string(limits.max_vertices));
  }
}

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& complex, const IsoLimits& limits) {
  check_guard(complex, limits);
  return Canonizer(complex, limits).run();
}

std::optional<LabelMap> isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                    const IsoLimits& limits) {
  check_guard(a, limits);
  check_guard(b, limits);
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets()) return std::nullopt;
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  auto ca = canonical_form(a, limits);
  auto cb = canonical_form(b, limits);
  if (!ca.same_class(cb)) return std::nullopt;
  LabelMap map;
  for (std::size_t i = 0; i < ca.order.size(); ++i) map.emplace(ca.order[i], cb.order[i]);
  return map;
}

}  // namespace stellar

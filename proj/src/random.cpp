#include "stellar/random.hpp"

#include <random>
#include <string>

#include "stellar/errors.hpp"

namespace stellar {

namespace {

// mt19937_64's output sequence is fixed by the standard; distributions are
// not, so draws are converted by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

void check_spec(const RandomSpec& spec) {
  if (spec.n_vertices > spec.vertex_cap) {
    throw ResourceLimit("random complex with " + std::to_string(spec.n_vertices) +
                        " vertices exceeds the cap of " + std::to_string(spec.vertex_cap));
  }
  if (spec.max_dim < 0 || spec.density < 0.0 || spec.density > 1.0) {
    throw PreconditionError("random complex needs max_dim >= 0 and density in [0, 1]");
  }
}

std::vector<Label> numbered_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Label::intern(std::to_string(i)));
  return out;
}

// Calls fn on every k-subset of indices 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SimplicialComplex draw_complex(const RandomSpec& spec, Rng& rng) {
  const auto labels = numbered_labels(spec.n_vertices);
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(spec.max_dim) + 1,
                                                spec.n_vertices);
  std::vector<Simplex> chosen;
  auto covered = [&](const Simplex& s) {
    return std::any_of(chosen.begin(), chosen.end(), [&](const Simplex& c) { return s.is_subset_of(c); });
  };
  for (std::size_t k = top; k >= 1; --k) {
    const double p = k == top ? spec.density : spec.density / 2;
    for_each_subset(spec.n_vertices, k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Label> verts;
      for (std::size_t i : idx) verts.push_back(labels[i]);
      Simplex s(std::move(verts));
      bool take = rng.chance(p);
      if (take && !covered(s)) chosen.push_back(std::move(s));
    });
  }
  if (chosen.empty() && top >= 1) {
    std::vector<Label> verts(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(top));
    chosen.emplace_back(std::move(verts));
  }
  return SimplicialComplex(std::move(chosen));
}

}  // namespace

SimplicialComplex random_complex(const RandomSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  return draw_complex(spec, rng);
}

ComplexPair random_induced_pair(const RandomSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  auto ambient = draw_complex(spec, rng);
  std::vector<Label> keep;
  for (Label v : ambient.vertices()) {
    if (rng.chance(0.5)) keep.push_back(v);
  }
  if (keep.empty() && !ambient.vertices().empty()) {
    keep.push_back(ambient.vertices()[rng.below(ambient.num_vertices())]);
  }
  auto sub = restrict_to(ambient, keep);
  return pair_new(std::move(sub), std::move(ambient));
}

ComplexPair random_strongly_induced_pair(const RandomSpec& spec) {
  return pair_biased(random_induced_pair(spec));
}

std::pair<SimplicialComplex, SimplicialComplex> random_subcomplex_pair(const RandomSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  auto ambient = draw_complex(spec, rng);
  std::vector<Simplex> generators;
  for (const auto& f : ambient.facets()) {
    if (!rng.chance(0.6)) continue;
    std::vector<Label> part;
    for (Label v : f) {
      if (rng.chance(0.75)) part.push_back(v);
    }
    if (!part.empty()) generators.emplace_back(std::move(part));
  }
  return {SimplicialComplex(std::move(generators)), std::move(ambient)};
}

}  // namespace stellar

#include "stellar/simplex.hpp"

#include <algorithm>
#include <iterator>

#include "stellar/errors.hpp"

namespace stellar {

Simplex::Simplex(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw MalformedInput("duplicate vertex '" + dup->token() + "' in simplex");
  }
}

Simplex::Simplex(std::initializer_list<Label> vertices)
    : Simplex(std::vector<Label>(vertices)) {}

Simplex Simplex::of(std::initializer_list<std::string_view> tokens) {
  std::vector<Label> labels;
  labels.reserve(tokens.size());
  for (auto t : tokens) labels.push_back(Label::intern(t));
  return Simplex(std::move(labels));
}

Simplex Simplex::of(std::span<const std::string> tokens) {
  std::vector<Label> labels;
  labels.reserve(tokens.size());
  for (const auto& t : tokens) labels.push_back(Label::intern(t));
  return Simplex(std::move(labels));
}

bool Simplex::contains(Label v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const {
  return size() <= other.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

Simplex Simplex::with(Label v) const {
  if (contains(v)) return *this;
  std::vector<Label> out;
  out.reserve(size() + 1);
  auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  out.insert(out.end(), vertices_.begin(), pos);
  out.push_back(v);
  out.insert(out.end(), pos, vertices_.end());
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::without(Label v) const {
  std::vector<Label> out;
  out.reserve(size());
  for (Label u : vertices_)
    if (u != v) out.push_back(u);
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::intersection(const Simplex& other) const {
  std::vector<Label> out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::union_with(const Simplex& other) const {
  std::vector<Label> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return Simplex(Trusted{}, std::move(out));
}

Simplex Simplex::difference(const Simplex& other) const {
  std::vector<Label> out;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(out));
  return Simplex(Trusted{}, std::move(out));
}

std::vector<Simplex> Simplex::nonempty_faces() const {
  const std::size_t n = size();
  std::vector<Simplex> out;
  if (n == 0) return out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) face.push_back(vertices_[i]);
    out.push_back(Simplex(Trusted{}, std::move(face)));
  }
  return out;
}

std::vector<Simplex> Simplex::boundary() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (Label v : vertices_) out.push_back(without(v));
  return out;
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += vertices_[i].token();
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

bool shortlex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Label v : s) {
    h ^= v.hash();
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace stellar

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stellar/label.hpp"

namespace stellar {

/// A finite, sorted, duplicate-free set of vertex labels.
///
/// The empty simplex (dim -1) is representable; complexes never store it as a
/// facet.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the labels; throws MalformedInput on duplicates.
  explicit Simplex(std::vector<Label> vertices);
  Simplex(std::initializer_list<Label> vertices);
  /// Interns each token.
  static Simplex of(std::initializer_list<std::string_view> tokens);
  static Simplex of(std::span<const std::string> tokens);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::span<const Label> vertices() const { return vertices_; }
  Label operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Label v) const;
  bool is_subset_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  Simplex with(Label v) const;
  Simplex without(Label v) const;
  Simplex intersection(const Simplex& other) const;
  Simplex union_with(const Simplex& other) const;
  Simplex difference(const Simplex& other) const;

  /// All nonempty proper and improper subsets.
  std::vector<Simplex> nonempty_faces() const;
  /// The faces of codimension one.
  std::vector<Simplex> boundary() const;

  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  /// Lexicographic on the sorted label lists.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Label> sorted) : vertices_(std::move(sorted)) {}
  std::vector<Label> vertices_;
};

/// Dimension first, then lexicographic. This is the tie-break order used for
/// every witness the library reports.
bool shortlex_less(const Simplex& a, const Simplex& b);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace stellar

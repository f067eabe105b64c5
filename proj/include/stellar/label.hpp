#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stellar {

namespace detail {
struct LabelEntry;
}

/// An interned vertex label.
///
/// Labels are either original (an arbitrary nonempty token) or barycenters,
/// whose token has the structured form `b{l1,l2,...}@r`: the sorted
/// constituent labels of the subdivided face and the subdivision round.
/// Tokens that parse as a canonical barycenter are classified as such no
/// matter how they were created, so a label read back from a file keeps its
/// structure.
///
/// Equality is identity of the interned entry; ordering is lexicographic on
/// the token. Interned entries live for the lifetime of the process.
class Label {
 public:
  static Label intern(std::string_view token);
  static Label barycenter(std::span<const Label> face, int round);

  const std::string& token() const;
  bool is_barycenter() const;
  /// Constituents of a barycenter label; empty for original labels.
  std::span<const Label> face() const;
  /// Round of a barycenter label; nullopt for original labels.
  std::optional<int> round() const;

  friend bool operator==(Label a, Label b) { return a.entry_ == b.entry_; }
  friend std::strong_ordering operator<=>(Label a, Label b);

  std::size_t hash() const { return std::hash<const void*>{}(entry_); }

 private:
  explicit Label(const detail::LabelEntry* e) : entry_(e) {}
  const detail::LabelEntry* entry_;
};

/// Largest barycenter round appearing among the labels (recursing into
/// constituents), or nullopt when none is a barycenter.
std::optional<int> max_round(std::span<const Label> labels);

}  // namespace stellar

template <>
struct std::hash<stellar::Label> {
  std::size_t operator()(stellar::Label l) const noexcept { return l.hash(); }
};

#include "stellar/label.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "stellar/errors.hpp"

namespace stellar {

namespace detail {

struct LabelEntry {
  std::string token;
  std::optional<int> round;
  std::vector<Label> face;
};

}  // namespace detail

namespace {

struct InternTable {
  std::mutex mutex;
  std::unordered_map<std::string_view, std::unique_ptr<detail::LabelEntry>> entries;
};

InternTable& table() {
  static InternTable t;
  return t;
}

// Splits the inside of `b{...}` at depth-0 commas.
std::optional<std::vector<std::string_view>> split_constituents(std::string_view body) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth < 0) return std::nullopt;
    } else if (c == ',' && depth == 0) {
      parts.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) return std::nullopt;
  parts.push_back(body.substr(start));
  return parts;
}

std::string barycenter_token(std::span<const Label> face, int round) {
  std::string out = "b{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ',';
    out += face[i].token();
  }
  out += "}@";
  out += std::to_string(round);
  return out;
}

}  // namespace

Label Label::intern(std::string_view token) {
  if (token.empty()) throw MalformedInput("vertex labels must be nonempty");
  auto& t = table();
  {
    std::lock_guard lock(t.mutex);
    if (auto it = t.entries.find(token); it != t.entries.end()) return Label(it->second.get());
  }

  // Classify outside the lock: constituents are interned recursively.
  auto entry = std::make_unique<detail::LabelEntry>();
  entry->token = std::string(token);
  if (token.size() >= 6 && token.starts_with("b{")) {
    auto at = token.rfind("}@");
    if (at != std::string_view::npos && at > 2) {
      std::string_view digits = token.substr(at + 2);
      int round = -1;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), round);
      bool digits_ok = ec == std::errc() && ptr == digits.data() + digits.size() && round >= 0 &&
                       std::to_string(round) == digits;
      auto parts = digits_ok ? split_constituents(token.substr(2, at - 2)) : std::nullopt;
      if (parts && parts->size() >= 2 &&
          std::none_of(parts->begin(), parts->end(), [](auto p) { return p.empty(); })) {
        std::vector<Label> face;
        face.reserve(parts->size());
        for (auto p : *parts) face.push_back(Label::intern(p));
        bool canonical = std::adjacent_find(face.begin(), face.end(), [](Label a, Label b) {
                           return !(a < b);
                         }) == face.end();
        if (canonical && barycenter_token(face, round) == token) {
          entry->round = round;
          entry->face = std::move(face);
        }
      }
    }
  }

  std::lock_guard lock(t.mutex);
  auto [it, inserted] = t.entries.try_emplace(std::string_view(entry->token), nullptr);
  if (inserted) it->second = std::move(entry);
  return Label(it->second.get());
}

Label Label::barycenter(std::span<const Label> face, int round) {
  std::vector<Label> sorted(face.begin(), face.end());
  std::sort(sorted.begin(), sorted.end());
  return intern(barycenter_token(sorted, round));
}

const std::string& Label::token() const { return entry_->token; }

bool Label::is_barycenter() const { return entry_->round.has_value(); }

std::span<const Label> Label::face() const { return entry_->face; }

std::optional<int> Label::round() const { return entry_->round; }

std::strong_ordering operator<=>(Label a, Label b) {
  if (a.entry_ == b.entry_) return std::strong_ordering::equal;
  return a.entry_->token.compare(b.entry_->token) < 0 ? std::strong_ordering::less
                                                      : std::strong_ordering::greater;
}

std::optional<int> max_round(std::span<const Label> labels) {
  std::optional<int> best;
  for (Label l : labels) {
    if (!l.is_barycenter()) continue;
    int r = *l.round();
    if (auto inner = max_round(l.face())) r = std::max(r, *inner);
    if (!best || r > *best) best = r;
  }
  return best;
}

}  // namespace stellar

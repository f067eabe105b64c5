#include "stellar/move_search.hpp"

#include <deque>
#include <set>
#include <string>

#include "stellar/contraction.hpp"
#include "stellar/errors.hpp"
#include "stellar/subdivision.hpp"

namespace stellar {

namespace {

using Key = std::pair<std::size_t, std::vector<std::vector<int>>>;

Key key_of(const CanonicalForm& c) { return {c.num_vertices, c.facets}; }

// Smallest "v<k>" that is not a vertex yet.
Label fresh_label(const SimplicialComplex& complex) {
  for (std::size_t k = 1;; ++k) {
    Label l = Label::intern("v" + std::to_string(k));
    if (!complex.has_vertex(l)) return l;
  }
}

struct Node {
  SimplicialComplex complex;
  std::vector<Move> path;
};

std::string stats_text(const SearchStats& s) {
  return "visited=" + std::to_string(s.visited) + " expanded=" + std::to_string(s.expanded) +
         " frontier=" + std::to_string(s.frontier) + " depth=" + std::to_string(s.depth);
}

}  // namespace

std::optional<MoveScript> search_script(const SimplicialComplex& from, const SimplicialComplex& to,
                                        const SearchLimits& limits, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = {};
  for (const auto* c : {&from, &to}) {
    if (c->num_vertices() > limits.max_vertices) {
      throw ResourceLimit("search endpoint has " + std::to_string(c->num_vertices()) +
                          " vertices, budget is " + std::to_string(limits.max_vertices));
    }
  }
  IsoLimits iso{limits.max_vertices, limits.max_iso_nodes};

  const auto target = canonical_form(to, iso);
  auto finish = [&](const Node& node, const CanonicalForm& form) {
    MoveScript script;
    script.moves = node.path;
    LabelMap map;
    for (std::size_t i = 0; i < form.order.size(); ++i) map.emplace(form.order[i], target.order[i]);
    script.target_map = std::move(map);
    return script;
  };

  auto start_form = canonical_form(from, iso);
  Node start{from, {}};
  if (start_form.same_class(target)) return finish(start, start_form);

  std::set<Key> visited{key_of(start_form)};
  std::deque<Node> frontier{std::move(start)};
  st.visited = 1;

  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    if (node.path.size() >= limits.max_depth) continue;
    ++st.expanded;
    st.depth = std::max(st.depth, node.path.size() + 1);

    std::vector<Move> moves;
    const auto& edges = node.complex.faces(1);
    for (const auto& e : edges) {
      if (is_valid_edge(node.complex, e)) moves.push_back(ContractMove{e, e[0]});
    }
    if (node.complex.num_vertices() + 1 <= limits.max_vertices) {
      Label v = fresh_label(node.complex);
      for (const auto& e : edges) moves.push_back(SubdivideMove{e, v});
    }

    for (auto& move : moves) {
      Node child{apply_move(node.complex, move), node.path};
      child.path.push_back(std::move(move));
      auto form = canonical_form(child.complex, iso);
      if (!visited.insert(key_of(form)).second) continue;
      ++st.visited;
      if (form.same_class(target)) {
        st.frontier = frontier.size();
        return finish(child, form);
      }
      if (st.visited > limits.max_states) {
        st.frontier = frontier.size();
        throw ResourceLimit("search state budget exhausted: " + stats_text(st));
      }
      frontier.push_back(std::move(child));
    }
  }
  st.frontier = 0;
  return std::nullopt;
}

bool verify_script(const SimplicialComplex& from, const MoveScript& script,
                   const SimplicialComplex& to, const IsoLimits& limits) {
  SimplicialComplex current = from;
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    try {
      current = apply_move(current, script.moves[i]);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(i, describe(script.moves[i]) + ": " + e.what());
    }
  }
  if (script.target_map) {
    LabelMap used;
    for (Label v : current.vertices()) {
      auto it = script.target_map->find(v);
      if (it == script.target_map->end()) return false;
      used.emplace(v, it->second);
    }
    try {
      return relabel(current, used) == to;
    } catch (const NamingError&) {
      return false;
    }
  }
  return isomorphism(current, to, limits).has_value();
}

}  // namespace stellar

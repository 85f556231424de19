#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mconvex/graph.hpp"

namespace mconvex {

// Permutation of the vertices; a perfect elimination order when every
// vertex's later neighbours form a clique.
using EliminationOrder = std::vector<Vertex>;

// Lexicographic breadth-first search by partition refinement. The first
// vertex of the first cell is visited next, so ties go to the smallest id.
inline std::vector<Vertex> lex_bfs(const WeightedGraph& g) {
  std::vector<std::vector<Vertex>> cells;
  if (g.vertex_count() > 0) cells.push_back(g.all_vertices());
  std::vector<Vertex> visit;
  visit.reserve(static_cast<std::size_t>(g.vertex_count()));
  std::vector<std::vector<Vertex>> next;
  while (!cells.empty()) {
    const Vertex v = cells.front().front();
    cells.front().erase(cells.front().begin());
    visit.push_back(v);
    next.clear();
    for (auto& cell : cells) {
      std::vector<Vertex> in;
      std::vector<Vertex> out;
      for (Vertex u : cell) (g.adjacent(v, u) ? in : out).push_back(u);
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    cells.swap(next);
  }
  return visit;
}

// Later-neighbour check: for each v, the later neighbours other than the
// earliest one (its parent) must all be adjacent to the parent.
inline bool is_perfect_elimination_order(const WeightedGraph& g, const EliminationOrder& order) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (order.size() != n) return false;
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_vertex(order[i]) || position[order[i]] != -1) return false;
    position[order[i]] = static_cast<int>(i);
  }
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v))
      if (position[u] > position[v] && (parent == -1 || position[u] < position[parent])) parent = u;
    if (parent == -1) continue;
    for (Vertex u : g.neighbors(v))
      if (u != parent && position[u] > position[v] && !g.adjacent(u, parent)) return false;
  }
  return true;
}

// Reverse LexBFS order, verified; nullopt when g is not chordal.
inline std::optional<EliminationOrder> perfect_elimination_order(const WeightedGraph& g) {
  EliminationOrder order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_order(g, order)) return std::nullopt;
  return order;
}

inline bool is_chordal(const WeightedGraph& g) { return perfect_elimination_order(g).has_value(); }

inline EliminationOrder require_chordal(const WeightedGraph& g) {
  auto order = perfect_elimination_order(g);
  if (!order) throw PreconditionError("graph is not chordal");
  return *std::move(order);
}

namespace detail {

inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_sets(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
}

inline std::vector<VertexSet> maximal_cliques_from(const WeightedGraph& g, const EliminationOrder& peo) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[peo[i]] = static_cast<int>(i);
  std::vector<VertexSet> later(n);
  std::vector<Vertex> parent(n, -1);
  for (Vertex v : peo) {
    for (Vertex u : g.neighbors(v))
      if (position[u] > position[v]) {
        later[v].push_back(u);
        if (parent[v] == -1 || position[u] < position[parent[v]]) parent[v] = u;
      }
  }
  // {v} + later(v) is not maximal iff some u with parent(u) = v has exactly
  // one more later neighbour than v.
  std::vector<std::uint8_t> dominated(n, 0);
  for (Vertex u : peo)
    if (parent[u] != -1 && later[u].size() == later[parent[u]].size() + 1) dominated[parent[u]] = 1;
  std::vector<VertexSet> cliques;
  for (Vertex v : peo) {
    if (dominated[v]) continue;
    VertexSet c = later[v];
    c.push_back(v);
    cliques.push_back(canonical(std::move(c)));
  }
  sort_sets(cliques);
  return cliques;
}

inline std::vector<VertexSet> separators_from(const std::vector<VertexSet>& cliques) {
  // Maximum-weight spanning forest of the clique intersection graph
  // (Kruskal; ties by lowest clique indices). Its edge labels are the
  // minimal vertex separators.
  struct Candidate {
    std::size_t weight;
    std::size_t i;
    std::size_t j;
    VertexSet meet;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      VertexSet meet = set_intersection(cliques[i], cliques[j]);
      if (!meet.empty()) candidates.push_back({meet.size(), i, j, std::move(meet)});
    }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(b.weight, a.i, a.j) < std::tie(a.weight, b.i, b.j);
  });
  std::vector<std::size_t> root(cliques.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<VertexSet> seps;
  for (auto& c : candidates) {
    std::size_t a = find(c.i);
    std::size_t b = find(c.j);
    if (a == b) continue;
    root[a] = b;
    seps.push_back(std::move(c.meet));
  }
  sort_sets(seps);
  seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
  return seps;
}

}  // namespace detail

inline std::vector<VertexSet> maximal_cliques(const WeightedGraph& g) {
  return detail::maximal_cliques_from(g, require_chordal(g));
}

inline std::vector<VertexSet> minimal_vertex_separators(const WeightedGraph& g) {
  return detail::separators_from(maximal_cliques(g));
}

struct SeparatorArc {
  int from;  // index into separators, the smaller set
  int to;

  friend bool operator==(const SeparatorArc&, const SeparatorArc&) = default;
};

struct CliqueSeparatorEdge {
  int clique;
  int separator;

  friend bool operator==(const CliqueSeparatorEdge&, const CliqueSeparatorEdge&) = default;
};

// Clique nodes and separator nodes of a chordal graph, with containment
// edges (clique, separator) and arcs (separator -> separator) that skip no
// intermediate separator. Cliques and separators are in lexicographic order.
struct CliqueSeparatorGraph {
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> separators;
  std::vector<CliqueSeparatorEdge> edges;
  std::vector<SeparatorArc> arcs;

  int separator_index(const VertexSet& s) const {
    auto it = std::lower_bound(separators.begin(), separators.end(), s, detail::lex_less);
    if (it == separators.end() || *it != s) return -1;
    return static_cast<int>(it - separators.begin());
  }

  int clique_index(const VertexSet& k) const {
    auto it = std::lower_bound(cliques.begin(), cliques.end(), k, detail::lex_less);
    if (it == cliques.end() || *it != k) return -1;
    return static_cast<int>(it - cliques.begin());
  }

  std::optional<SeparatorArc> find_arc(const VertexSet& from, const VertexSet& to) const {
    const int a = separator_index(from);
    const int b = separator_index(to);
    for (const auto& arc : arcs)
      if (arc.from == a && arc.to == b) return arc;
    return std::nullopt;
  }
};

inline CliqueSeparatorGraph clique_separator_graph(const WeightedGraph& g) {
  CliqueSeparatorGraph csg;
  csg.cliques = maximal_cliques(g);
  csg.separators = detail::separators_from(csg.cliques);
  const std::size_t s = csg.separators.size();
  std::vector<std::uint8_t> sub(s * s, 0);  // sub[i*s+j]: S_i proper subset of S_j
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && is_proper_subset(csg.separators[i], csg.separators[j])) sub[i * s + j] = 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (!sub[i * s + j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < s && direct; ++k)
        if (sub[i * s + k] && sub[k * s + j]) direct = false;
      if (direct) csg.arcs.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  for (std::size_t c = 0; c < csg.cliques.size(); ++c) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < s; ++i)
      if (is_proper_subset(csg.separators[i], csg.cliques[c])) inside.push_back(i);
    for (std::size_t i : inside) {
      bool direct = true;
      for (std::size_t k : inside)
        if (sub[i * s + k]) {
          direct = false;
          break;
        }
      if (direct) csg.edges.push_back({static_cast<int>(c), static_cast<int>(i)});
    }
  }
  return csg;
}

namespace detail {

template <typename Label>
std::string set_label(const VertexSet& s, Label&& label) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  return out + "}";
}

}  // namespace detail

// DOT rendering: cliques as boxes, separators as ellipses, arcs directed.
// `label` maps a vertex id to its display text.
template <typename Label>
std::string to_dot(const CliqueSeparatorGraph& csg, Label&& label) {
  std::ostringstream out;
  out << "graph clique_separator {\n";
  for (std::size_t i = 0; i < csg.cliques.size(); ++i)
    out << "  K" << i + 1 << " [shape=box,label=\"K" << i + 1 << " " << detail::set_label(csg.cliques[i], label)
        << "\"];\n";
  for (std::size_t i = 0; i < csg.separators.size(); ++i)
    out << "  S" << i + 1 << " [shape=ellipse,label=\"S" << i + 1 << " "
        << detail::set_label(csg.separators[i], label) << "\"];\n";
  for (const auto& e : csg.edges) out << "  K" << e.clique + 1 << " -- S" << e.separator + 1 << ";\n";
  for (const auto& a : csg.arcs) out << "  S" << a.from + 1 << " -- S" << a.to + 1 << " [dir=forward];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const CliqueSeparatorGraph& csg) {
  return to_dot(csg, [](Vertex v) { return std::to_string(v); });
}

}  // namespace mconvex

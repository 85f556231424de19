#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mconvex/errors.hpp"

namespace mconvex {

using Vertex = int;
using Weight = std::int64_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
// Ordered vertex sequence (paths).
using VertexPath = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
};

inline VertexSet canonical(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
  return a.size() < b.size() && is_subset(a, b);
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Undirected simple graph with exact integer vertex weights. Vertex ids are
// dense: 0 .. vertex_count()-1. Immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  explicit WeightedGraph(int vertex_count, std::span<const Edge> edges = {},
                         std::vector<Weight> weights = {})
      : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count)),
        matrix_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0),
        weights_(std::move(weights)) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    if (weights_.empty()) weights_.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(weights_.size()) != n_)
      throw InputError("weight vector has " + std::to_string(weights_.size()) + " entries, expected " +
                       std::to_string(n_));
    for (const Edge& e : edges) {
      check_vertex(e.u);
      check_vertex(e.v);
      if (e.u == e.v) throw InputError("self-loop on vertex " + std::to_string(e.u));
      if (adjacent(e.u, e.v))
        throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      matrix_[index(e.u, e.v)] = 1;
      matrix_[index(e.v, e.u)] = 1;
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
      ++m_;
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void check_vertex(Vertex v) const {
    if (!has_vertex(v))
      throw InputError("vertex id " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }

  bool adjacent(Vertex u, Vertex v) const noexcept { return matrix_[index(u, v)] != 0; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

  Weight weight(Vertex v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  Weight weight_of(std::span<const Vertex> s) const {
    Weight total = 0;
    for (Vertex v : s) total += weight(v);
    return total;
  }

  // Edges with u < v in ascending (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  VertexSet all_vertices() const {
    VertexSet out(static_cast<std::size_t>(n_));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  bool is_clique(std::span<const Vertex> s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!adjacent(s[i], s[j])) return false;
    return true;
  }

  void check_set(std::span<const Vertex> s) const {
    for (Vertex v : s) check_vertex(v);
  }

 private:
  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<Weight> weights_;
};

// N(s): vertices outside s adjacent to some member of s.
inline VertexSet neighbors(const WeightedGraph& g, std::span<const Vertex> s) {
  g.check_set(s);
  std::vector<std::uint8_t> inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) inside[v] = 1;
  std::vector<std::uint8_t> mark(inside.size(), 0);
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (!inside[u]) mark[u] = 1;
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

// Components of g - removed, each sorted, listed by ascending minimum vertex.
inline std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                                   std::span<const Vertex> removed = {}) {
  g.check_set(removed);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> comp(n, -1);
  for (Vertex v : removed) comp[v] = -2;
  std::vector<VertexSet> out;
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (comp[start] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (comp[u] != -1) continue;
        comp[u] = id;
        queue.push_back(u);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_path(const WeightedGraph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  for (Vertex v : seq)
    if (!g.has_vertex(v)) return false;
  VertexSet sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  return true;
}

// True iff seq is a path whose vertices induce exactly its consecutive edges.
inline bool is_chordless_path(const WeightedGraph& g, std::span<const Vertex> seq) {
  if (!is_path(g, seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 2; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j])) return false;
  return true;
}

// Shortest path between the endpoints inside the subgraph induced by the
// path's vertices. BFS explores neighbours in ascending id order.
inline VertexPath extract_chordless_path(const WeightedGraph& g, std::span<const Vertex> path) {
  if (!is_path(g, path)) throw InputError("sequence is not a path of the graph");
  const Vertex source = path.front();
  const Vertex target = path.back();
  VertexSet allowed(path.begin(), path.end());
  std::sort(allowed.begin(), allowed.end());
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  parent[source] = source;
  std::deque<Vertex> queue{source};
  while (!queue.empty() && parent[target] == -1) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (parent[u] != -1 || !contains(allowed, u)) continue;
      parent[u] = v;
      queue.push_back(u);
    }
  }
  VertexPath out;
  for (Vertex v = target; v != source; v = parent[v]) out.push_back(v);
  out.push_back(source);
  std::reverse(out.begin(), out.end());
  return out;
}

// Subgraph induced by a vertex set, with the map back to parent ids.
struct InducedSubgraph {
  WeightedGraph graph;
  VertexSet to_parent;  // local id -> parent id (ascending)

  Vertex local(Vertex parent_id) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_id);
    if (it == to_parent.end() || *it != parent_id) return -1;
    return static_cast<Vertex>(it - to_parent.begin());
  }

  VertexSet lift(std::span<const Vertex> local_set) const {
    VertexSet out;
    out.reserve(local_set.size());
    for (Vertex v : local_set) out.push_back(to_parent[v]);
    return canonical(std::move(out));
  }

  VertexSet lower(std::span<const Vertex> parent_set) const {
    VertexSet out;
    out.reserve(parent_set.size());
    for (Vertex v : parent_set) {
      Vertex l = local(v);
      if (l < 0) throw InputError("vertex " + std::to_string(v) + " is not in the induced subgraph");
      out.push_back(l);
    }
    return canonical(std::move(out));
  }
};

inline InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> s) {
  g.check_set(s);
  InducedSubgraph out;
  out.to_parent = canonical(VertexSet(s.begin(), s.end()));
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    local[out.to_parent[i]] = static_cast<Vertex>(i);
    weights.push_back(g.weight(out.to_parent[i]));
  }
  std::vector<Edge> edges;
  for (Vertex u : out.to_parent)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] >= 0) edges.push_back({local[u], local[v]});
  out.graph = WeightedGraph(static_cast<int>(out.to_parent.size()), edges, std::move(weights));
  return out;
}

}  // namespace mconvex

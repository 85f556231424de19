#pragma once

// Exponential reference procedures for monophonic convexity. Everything here
// enumerates chordless paths or subsets outright and is guarded by a vertex
// budget; the polynomial solver is validated against these.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mconvex/graph.hpp"

namespace mconvex::oracle {

inline constexpr int kPathBudget = 16;
inline constexpr int kSubsetBudget = 14;

using Mask = std::uint32_t;

inline void check_budget(const WeightedGraph& g, int budget, const char* what) {
  if (g.vertex_count() > budget || g.vertex_count() > 30)
    throw SizeError(std::string(what) + ": " + std::to_string(g.vertex_count()) + " vertices exceeds guard of " +
                    std::to_string(budget));
}

inline Mask mask_of(std::span<const Vertex> s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline VertexSet set_of(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

namespace detail {

// Depth-first extension of chordless paths from `start`. A vertex may be
// appended only if it is adjacent to the current end and to no other path
// vertex. `visit` sees every chordless path starting at `start` (as its
// vertex mask and sequence) and returns false to stop extending it.
template <typename Visit>
void extend_chordless(const WeightedGraph& g, VertexPath& path, Mask on_path, Mask blocked, Visit& visit) {
  const Vertex last = path.back();
  if (!visit(path, on_path)) return;
  // Vertices adjacent to any path vertex except `last` are blocked.
  for (Vertex next : g.neighbors(last)) {
    const Mask bit = Mask{1} << next;
    if ((on_path | blocked) & bit) continue;
    Mask next_blocked = blocked;
    for (Vertex u : g.neighbors(last)) next_blocked |= Mask{1} << u;
    path.push_back(next);
    extend_chordless(g, path, on_path | bit, next_blocked, visit);
    path.pop_back();
  }
}

}  // namespace detail

// All chordless u-v paths, in depth-first discovery order.
inline std::vector<VertexPath> enumerate_chordless_paths(const WeightedGraph& g, Vertex u, Vertex v,
                                                         int budget = kPathBudget) {
  check_budget(g, budget, "chordless path enumeration");
  g.check_vertex(u);
  g.check_vertex(v);
  std::vector<VertexPath> out;
  if (u == v) return {{u}};
  VertexPath path{u};
  auto visit = [&](const VertexPath& p, Mask) {
    if (p.back() == v) {
      out.push_back(p);
      return false;
    }
    return true;
  };
  detail::extend_chordless(g, path, Mask{1} << u, 0, visit);
  return out;
}

// interval[u][v]: union of the vertex sets of all chordless u-v paths
// (empty when u and v are disconnected).
class IntervalTable {
 public:
  explicit IntervalTable(const WeightedGraph& g, int budget = kPathBudget)
      : n_(g.vertex_count()), table_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    check_budget(g, budget, "interval table");
    for (Vertex u = 0; u < n_; ++u) {
      VertexPath path{u};
      auto visit = [&](const VertexPath& p, Mask on_path) {
        table_[index(u, p.back())] |= on_path;
        return true;
      };
      detail::extend_chordless(g, path, Mask{1} << u, 0, visit);
    }
  }

  Mask interval(Vertex u, Vertex v) const { return table_[index(u, v)]; }

  bool is_convex(Mask c) const {
    for (Vertex u = 0; u < n_; ++u) {
      if (!(c >> u & 1)) continue;
      for (Vertex v = u + 1; v < n_; ++v)
        if ((c >> v & 1) && (table_[index(u, v)] & ~c)) return false;
    }
    return true;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<Mask> table_;
};

struct ConvexSetWitness {
  VertexSet set;
  Weight weight = 0;
  std::optional<VertexPath> violating_path;

  bool convex() const { return !violating_path.has_value(); }
};

inline ConvexSetWitness is_convex(const WeightedGraph& g, std::span<const Vertex> c, int budget = kPathBudget) {
  check_budget(g, budget, "convexity check");
  g.check_set(c);
  ConvexSetWitness out;
  out.set = canonical(VertexSet(c.begin(), c.end()));
  out.weight = g.weight_of(out.set);
  const Mask inside = mask_of(out.set);
  for (std::size_t i = 0; i < out.set.size() && !out.violating_path; ++i) {
    const Vertex u = out.set[i];
    VertexPath path{u};
    auto visit = [&](const VertexPath& p, Mask on_path) {
      if (out.violating_path) return false;
      const Vertex end = p.back();
      if (end != u && (inside >> end & 1)) {
        if (on_path & ~inside) out.violating_path = p;
        return false;  // paths through a member are covered by that member's pairs
      }
      return true;
    };
    detail::extend_chordless(g, path, Mask{1} << u, 0, visit);
  }
  return out;
}

inline std::vector<VertexSet> all_convex_sets(const WeightedGraph& g, int budget = kSubsetBudget) {
  check_budget(g, budget, "convex set enumeration");
  IntervalTable table(g, 30);
  std::vector<VertexSet> out;
  const Mask full = g.vertex_count() == 0 ? 0 : (Mask{1} << g.vertex_count()) - 1;
  for (Mask c = 0;; ++c) {
    if (table.is_convex(c)) out.push_back(set_of(c));
    if (c == full) break;
  }
  return out;
}

// Maximum-weight convex set containing `required`; ties go to the
// lexicographically smallest vertex list. Always feasible since V is convex.
inline ConvexSetWitness brute_force_opt(const WeightedGraph& g, std::span<const Vertex> required = {},
                                        int budget = kSubsetBudget) {
  check_budget(g, budget, "brute-force optimum");
  g.check_set(required);
  IntervalTable table(g, 30);
  const int n = g.vertex_count();
  const Mask forced = mask_of(required);
  std::optional<VertexSet> best;
  Weight best_weight = 0;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask c = 0;; ++c) {
    if ((c & forced) == forced && table.is_convex(c)) {
      Weight w = 0;
      for (Vertex v = 0; v < n; ++v)
        if (c >> v & 1) w += g.weight(v);
      if (!best || w > best_weight || (w == best_weight && set_of(c) < *best)) {
        best = set_of(c);
        best_weight = w;
      }
    }
    if (c == full) break;
  }
  return {*best, best_weight, std::nullopt};
}

}  // namespace mconvex::oracle

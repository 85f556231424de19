#pragma once

#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mconvex/extension.hpp"
#include "mconvex/graph.hpp"
#include "mconvex/oracle.hpp"

namespace mconvex {

// Partial order on the vertices 0..n-1 of a graph, stored as a full matrix.
class RootedPoset {
 public:
  RootedPoset() = default;
  RootedPoset(int size, Vertex root) : n_(size), root_(root), leq_(static_cast<std::size_t>(size) * size, 0) {
    for (Vertex v = 0; v < size; ++v) set(v, v);
  }

  int size() const noexcept { return n_; }
  Vertex root() const noexcept { return root_; }

  bool leq(Vertex u, Vertex v) const { return leq_[index(u, v)] != 0; }
  void set(Vertex u, Vertex v) { leq_[index(u, v)] = 1; }

  VertexSet down_set(Vertex v) const {
    VertexSet out;
    for (Vertex u = 0; u < n_; ++u)
      if (leq(u, v)) out.push_back(u);
    return out;
  }

  bool is_ideal(std::span<const Vertex> s) const {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(n_), 0);
    for (Vertex v : s) in[v] = 1;
    for (Vertex v : s)
      for (Vertex u = 0; u < n_; ++u)
        if (leq(u, v) && !in[u]) return false;
    return true;
  }

  friend bool operator==(const RootedPoset&, const RootedPoset&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  Vertex root_ = -1;
  std::vector<std::uint8_t> leq_;
};

struct PosetAxioms {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;

  bool ok() const { return reflexive && antisymmetric && transitive; }
};

inline PosetAxioms check_axioms(const RootedPoset& p) {
  PosetAxioms out;
  const int n = p.size();
  for (Vertex u = 0; u < n; ++u) {
    if (!p.leq(u, u)) out.reflexive = false;
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && p.leq(u, v) && p.leq(v, u)) out.antisymmetric = false;
      if (!p.leq(u, v)) continue;
      for (Vertex x = 0; x < n; ++x)
        if (p.leq(v, x) && !p.leq(u, x)) out.transitive = false;
    }
  }
  return out;
}

// Does z lie on some chordless x-y path? Endpoints count when a path exists.
// Interior case: some pair of non-adjacent neighbours a, b of z such that,
// after deleting z and the rest of its closed neighbourhood, x reaches a and
// y reaches b in different components (or the swap). Exact on chordal graphs.
inline bool interval_contains(const WeightedGraph& g, Vertex x, Vertex y, Vertex z) {
  g.check_vertex(x);
  g.check_vertex(y);
  g.check_vertex(z);
  if (x == y) throw InputError("interval_contains needs distinct endpoints");
  if (z == x || z == y) {
    auto comps = connected_components(g);
    for (const auto& c : comps)
      if (contains(c, x)) return contains(c, y);
    return false;
  }
  const VertexSet& nz = g.neighbors(z);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> comp(n);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = 0; j < nz.size(); ++j) {
      const Vertex a = nz[i];
      const Vertex b = nz[j];
      if (a == b || g.adjacent(a, b)) continue;
      // Components of H = G - z - (N(z) \ {a, b}).
      std::fill(comp.begin(), comp.end(), -1);
      comp[z] = -2;
      for (Vertex u : nz)
        if (u != a && u != b) comp[u] = -2;
      int next = 0;
      for (Vertex s : {a, b}) {
        if (comp[s] != -1) continue;
        std::deque<Vertex> queue{s};
        comp[s] = next;
        while (!queue.empty()) {
          Vertex v = queue.front();
          queue.pop_front();
          for (Vertex u : g.neighbors(v))
            if (comp[u] == -1) {
              comp[u] = next;
              queue.push_back(u);
            }
        }
        ++next;
      }
      if (comp[a] != comp[b] && comp[x] == comp[a] && comp[y] == comp[b]) return true;
    }
  return false;
}

// Precomputed form of the interior test for every centre z of a chordal
// graph: the components of G - N[z] and, for each, the neighbours of z it
// touches. In a chordal graph two non-adjacent neighbours of z never touch
// the same component, which is what lets components stand in for the
// per-pair deletions above.
class IntervalIndex {
 public:
  explicit IntervalIndex(const WeightedGraph& g)
      : g_(&g), n_(g.vertex_count()), comp_(static_cast<std::size_t>(n_) * n_, -1), attach_(n_) {
    std::deque<Vertex> queue;
    for (Vertex z = 0; z < n_; ++z) {
      int* comp = &comp_[static_cast<std::size_t>(z) * n_];
      std::vector<std::uint8_t> closed(static_cast<std::size_t>(n_), 0);
      closed[z] = 1;
      for (Vertex u : g.neighbors(z)) closed[u] = 1;
      int next = 0;
      for (Vertex s = 0; s < n_; ++s) {
        if (closed[s] || comp[s] != -1) continue;
        attach_[z].emplace_back();
        std::vector<std::uint8_t> touched(static_cast<std::size_t>(n_), 0);
        comp[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
          Vertex v = queue.front();
          queue.pop_front();
          for (Vertex u : g.neighbors(v)) {
            if (closed[u]) {
              if (u != z) touched[u] = 1;
            } else if (comp[u] == -1) {
              comp[u] = next;
              queue.push_back(u);
            }
          }
        }
        for (Vertex u : g.neighbors(z))
          if (touched[u]) attach_[z].back().push_back(u);
        ++next;
      }
    }
  }

  // Neighbours of z through which a chordless path from x can enter z.
  VertexSet attachments(Vertex z, Vertex x) const {
    if (g_->adjacent(z, x)) return {x};
    const int c = comp_[static_cast<std::size_t>(z) * n_ + x];
    if (c < 0) return {};
    return attach_[z][static_cast<std::size_t>(c)];
  }

  // z strictly inside some chordless x-y path; x, y, z distinct.
  bool interior(Vertex z, Vertex x, Vertex y) const {
    const int cx = comp_[static_cast<std::size_t>(z) * n_ + x];
    const int cy = comp_[static_cast<std::size_t>(z) * n_ + y];
    if (cx >= 0 && cx == cy) return false;
    return separated_pair(attachments(z, x), attachments(z, y));
  }

  // For a fixed far endpoint y: which x have z strictly inside a chordless
  // x-y path. One pass per component instead of one per x.
  std::vector<std::uint8_t> interior_towards(Vertex z, Vertex y) const {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n_), 0);
    if (z == y) return out;
    const VertexSet far = attachments(z, y);
    const int cy = comp_[static_cast<std::size_t>(z) * n_ + y];
    std::vector<std::uint8_t> comp_ok(attach_[z].size(), 0);
    for (std::size_t c = 0; c < attach_[z].size(); ++c)
      comp_ok[c] = static_cast<int>(c) != cy && separated_pair(attach_[z][c], far);
    const int* comp = &comp_[static_cast<std::size_t>(z) * n_];
    for (Vertex x = 0; x < n_; ++x) {
      if (x == z || x == y) continue;
      if (comp[x] >= 0)
        out[x] = comp_ok[static_cast<std::size_t>(comp[x])];
      else
        out[x] = separated_pair(VertexSet{x}, far);
    }
    return out;
  }

 private:
  bool separated_pair(const VertexSet& as, const VertexSet& bs) const {
    for (Vertex a : as)
      for (Vertex b : bs)
        if (a != b && !g_->adjacent(a, b)) return true;
    return false;
  }

  const WeightedGraph* g_;
  int n_;
  std::vector<int> comp_;  // comp_[z*n + x]: component of x in G - N[z], -1 inside N[z]
  std::vector<std::vector<VertexSet>> attach_;
};

enum class PosetMethod {
  Interval,     // neighbour-pair test via IntervalIndex
  Enumeration,  // exhaustive chordless-path enumeration (small graphs only)
};

// u <= v iff u = v or u lies on a chordless path from v to root.
inline RootedPoset rooted_poset(const WeightedGraph& g, Vertex root, PosetMethod method = PosetMethod::Interval) {
  g.check_vertex(root);
  const int n = g.vertex_count();
  RootedPoset p(n, root);
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(n), 0);
  for (const auto& c : connected_components(g))
    if (contains(c, root))
      for (Vertex v : c) reach[v] = 1;
  if (method == PosetMethod::Enumeration) {
    oracle::IntervalTable table(g);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        if (table.interval(v, root) >> u & 1) p.set(u, v);
    return p;
  }
  for (Vertex v = 0; v < n; ++v)
    if (reach[v]) p.set(root, v);
  IntervalIndex index(g);
  for (Vertex u = 0; u < n; ++u) {
    if (u == root || !reach[u]) continue;
    const auto inside = index.interior_towards(u, root);
    for (Vertex v = 0; v < n; ++v)
      if (inside[v]) p.set(u, v);
  }
  return p;
}

inline RootedPoset rooted_poset(const ExtendedGraph& ext, const VertexSet& clique,
                                PosetMethod method = PosetMethod::Interval) {
  return rooted_poset(ext.graph, ext.dummy_of(clique), method);
}

// Transitive reduction: pairs (u, v) with v covering u.
inline std::vector<std::pair<Vertex, Vertex>> covers(const RootedPoset& p) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = p.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !p.leq(u, v)) continue;
      bool direct = true;
      for (Vertex x = 0; x < n && direct; ++x)
        if (x != u && x != v && p.leq(u, x) && p.leq(x, v)) direct = false;
      if (direct) out.emplace_back(u, v);
    }
  return out;
}

inline constexpr int kIdealBudget = 20;

// Every down-closed subset, including the empty one. Exponential.
inline std::vector<VertexSet> ideals(const RootedPoset& p, int budget = kIdealBudget) {
  if (p.size() > budget || p.size() > 30)
    throw SizeError("ideal enumeration: " + std::to_string(p.size()) + " elements exceeds guard of " +
                    std::to_string(budget));
  const int n = p.size();
  std::vector<oracle::Mask> down(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = 0; u < n; ++u)
      if (p.leq(u, v)) down[v] |= oracle::Mask{1} << u;
  std::vector<VertexSet> out;
  const oracle::Mask full = n == 0 ? 0 : (oracle::Mask{1} << n) - 1;
  for (oracle::Mask s = 0;; ++s) {
    bool closed = true;
    for (Vertex v = 0; v < n && closed; ++v)
      if ((s >> v & 1) && (down[v] & ~s)) closed = false;
    if (closed) out.push_back(oracle::set_of(s));
    if (s == full) break;
  }
  return out;
}

// Hasse diagram in DOT, edges drawn from the covered element upwards.
template <typename Label>
std::string to_dot(const RootedPoset& p, Label&& label) {
  std::ostringstream out;
  out << "digraph rooted_poset {\n  rankdir=BT;\n";
  for (Vertex v = 0; v < p.size(); ++v) {
    out << "  v" << v << " [label=\"" << label(v) << "\"";
    if (v == p.root()) out << ",shape=doublecircle";
    out << "];\n";
  }
  for (auto [u, v] : covers(p)) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mconvex

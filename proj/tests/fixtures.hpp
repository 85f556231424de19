#pragma once

// Small graphs shared by the suites. Vertex numbers in fixture edge lists
// are 1-based as in the sample files; the library is 0-based.

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "mconvex/mconvex.hpp"

namespace fx {

using namespace mconvex;

inline Vertex v(int one_based) { return one_based - 1; }

inline VertexSet ids(std::initializer_list<int> one_based) {
  VertexSet out;
  for (int x : one_based) out.push_back(x - 1);
  return canonical(std::move(out));
}

inline WeightedGraph make(int n, std::initializer_list<std::pair<int, int>> edges, std::vector<Weight> w = {}) {
  std::vector<Edge> e;
  for (auto [a, b] : edges) e.push_back({a - 1, b - 1});
  return WeightedGraph(n, e, std::move(w));
}

inline WeightedGraph fig6() { return make(5, {{1, 2}, {2, 3}, {3, 4}, {2, 4}, {2, 5}, {4, 5}}); }

inline WeightedGraph fig7() {
  return make(8,
              {{1, 2}, {2, 3}, {3, 4}, {2, 4}, {2, 5}, {4, 5}, {2, 6}, {4, 6}, {6, 7}, {2, 7}, {4, 7}, {2, 8},
               {4, 8}, {7, 8}},
              {1, 0, -1, -4, -1, 4, -2, 3});
}

inline WeightedGraph c4() { return make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

inline WeightedGraph complete(int n, std::vector<Weight> w = {}) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return WeightedGraph(n, e, std::move(w));
}

// Dummy of the clique given in 1-based ids.
inline Vertex dummy(const ExtendedGraph& ext, std::initializer_list<int> clique) { return ext.dummy_of(ids(clique)); }

// Random chordal graph for property sweeps; cycles through all generator kinds.
inline WeightedGraph random_graph(std::uint64_t seed, int max_n, Weight wlo = -10, Weight whi = 10) {
  GenSpec s;
  s.kind = static_cast<GenKind>(seed % 4);
  s.n = 1 + static_cast<int>((seed / 4) % static_cast<std::uint64_t>(max_n));
  s.k = 1 + static_cast<int>(seed % 3);
  if (s.kind == GenKind::KTree) s.n = std::max(s.n, s.k + 1);
  s.density = 0.25 + 0.15 * static_cast<double>(seed % 5);
  s.weight_min = wlo;
  s.weight_max = whi;
  s.seed = seed * 7919 + 13;
  return generate(s);
}

// Random partial order: random DAG along 0..n-1, transitively closed.
inline RootedPoset random_poset(std::mt19937_64& rng, int n, double p) {
  RootedPoset out(n, 0);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) out.set(u, v);
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (out.leq(u, k) && out.leq(k, v)) out.set(u, v);
  return out;
}

}  // namespace fx

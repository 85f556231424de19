#pragma once

// Seeded generators of chordal instances. Each construction adds vertices
// that are simplicial at the moment they appear, so the reverse insertion
// order is a perfect elimination order. Vertex ids are shuffled afterwards.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mconvex/chordal.hpp"
#include "mconvex/graph.hpp"

namespace mconvex {

enum class GenKind { KTree, RandomChordal, SplitLike, Tree };

struct GenSpec {
  GenKind kind = GenKind::RandomChordal;
  int n = 10;
  int k = 2;              // ktree width; clique size for split_like
  double density = 0.5;   // attachment probability for random_chordal and split_like
  Weight weight_min = -10;
  Weight weight_max = 10;
  std::uint64_t seed = 0;
};

inline GenKind parse_gen_kind(std::string_view s) {
  if (s == "ktree") return GenKind::KTree;
  if (s == "random_chordal") return GenKind::RandomChordal;
  if (s == "split_like") return GenKind::SplitLike;
  if (s == "tree") return GenKind::Tree;
  throw InputError("unknown generator kind: " + std::string(s));
}

inline std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::KTree: return "ktree";
    case GenKind::RandomChordal: return "random_chordal";
    case GenKind::SplitLike: return "split_like";
    case GenKind::Tree: return "tree";
  }
  return "?";
}

namespace detail {

struct Builder {
  int n;
  std::vector<std::vector<std::uint8_t>> adj;
  std::vector<Edge> edges;

  explicit Builder(int count) : n(count), adj(count, std::vector<std::uint8_t>(count, 0)) {}

  void link(Vertex u, Vertex v) {
    if (u == v || adj[u][v]) return;
    adj[u][v] = adj[v][u] = 1;
    edges.push_back({u, v});
  }
  void attach(Vertex v, const VertexSet& clique) {
    for (Vertex u : clique) link(v, u);
  }
};

inline void ktree(Builder& b, const GenSpec& spec, std::mt19937_64& rng) {
  const int k = spec.k;
  std::vector<VertexSet> big;  // (k+1)-cliques
  VertexSet first(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) first[i] = i;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) b.link(i, j);
  big.push_back(first);
  for (Vertex v = k + 1; v < spec.n; ++v) {
    VertexSet base = big[std::uniform_int_distribution<std::size_t>(0, big.size() - 1)(rng)];
    base.erase(base.begin() + static_cast<std::ptrdiff_t>(std::uniform_int_distribution<int>(0, k)(rng)));
    b.attach(v, base);
    base.push_back(v);
    big.push_back(std::move(base));
  }
}

inline void random_chordal(Builder& b, const GenSpec& spec, std::mt19937_64& rng) {
  std::bernoulli_distribution take(spec.density);
  for (Vertex v = 1; v < spec.n; ++v) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    VertexSet clique{u};
    VertexSet candidates;
    for (Vertex x = 0; x < v; ++x)
      if (b.adj[u][x]) candidates.push_back(x);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (Vertex x : candidates) {
      if (!take(rng)) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return b.adj[c][x] != 0; }))
        clique.push_back(x);
    }
    b.attach(v, clique);
  }
}

inline void split_like(Builder& b, const GenSpec& spec, std::mt19937_64& rng) {
  const int core = std::min(spec.k, spec.n);
  for (int i = 0; i < core; ++i)
    for (int j = i + 1; j < core; ++j) b.link(i, j);
  std::bernoulli_distribution take(spec.density);
  for (Vertex v = core; v < spec.n; ++v)
    for (Vertex c = 0; c < core; ++c)
      if (take(rng)) b.link(v, c);
}

inline void tree(Builder& b, const GenSpec& spec, std::mt19937_64& rng) {
  for (Vertex v = 1; v < spec.n; ++v) b.link(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
}

}  // namespace detail

inline void validate(const GenSpec& spec) {
  if (spec.n < 0) throw InputError("n must be non-negative");
  if (spec.weight_min > spec.weight_max) throw InputError("empty weight range");
  if (spec.density < 0.0 || spec.density > 1.0) throw InputError("density must lie in [0, 1]");
  if (spec.kind == GenKind::KTree && (spec.k < 0 || spec.n < spec.k + 1))
    throw InputError("ktree needs k >= 0 and n >= k + 1");
  if (spec.kind == GenKind::SplitLike && spec.k < 0) throw InputError("split_like needs k >= 0");
}

inline WeightedGraph generate(const GenSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  detail::Builder b(spec.n);
  switch (spec.kind) {
    case GenKind::KTree: detail::ktree(b, spec, rng); break;
    case GenKind::RandomChordal: detail::random_chordal(b, spec, rng); break;
    case GenKind::SplitLike: detail::split_like(b, spec, rng); break;
    case GenKind::Tree: detail::tree(b, spec, rng); break;
  }
  std::vector<Vertex> relabel(static_cast<std::size_t>(spec.n));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : b.edges) edges.push_back({relabel[e.u], relabel[e.v]});
  std::uniform_int_distribution<Weight> draw(spec.weight_min, spec.weight_max);
  std::vector<Weight> weights(static_cast<std::size_t>(spec.n));
  for (Weight& w : weights) w = draw(rng);
  WeightedGraph g(spec.n, edges, std::move(weights));
#ifndef NDEBUG
  if (!is_chordal(g)) throw InternalError("generator produced a non-chordal graph");
#endif
  return g;
}

}  // namespace mconvex
